#pragma once

namespace braidcert {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace braidcert
