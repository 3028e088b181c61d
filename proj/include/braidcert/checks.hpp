#pragma once

#include <string>
#include <vector>

#include "braidcert/todd_coxeter.hpp"

#include "json.hpp"

namespace braidcert {

enum class CheckStatus { Pass, Fail, Inconclusive };

const char* to_string(CheckStatus s);

// One named verification with its reference anchor and both sides of the
// comparison, ready for reporting.
struct Check {
  std::string id;
  std::string description;
  std::string paper_ref;
  CheckStatus status;
  std::string expected;
  std::string actual;
};

struct SuiteOptions {
  long max_cosets = kDefaultMaxCosets;
};

struct Report {
  std::string version;
  std::vector<Check> checks;

  int passed() const;
  int failed() const;
  int inconclusive() const;
};

// The fixed battery, in its fixed order. Checks are independent; coset
// enumerations respect options.max_cosets, and enumerations that get cut off
// make the affected checks inconclusive rather than failed.
Report run_all(const SuiteOptions& options = {});

// Runs a single check by id; throws DomainError for unknown ids.
Check run_check(const std::string& id, const SuiteOptions& options = {});

std::vector<std::string> check_ids();

// Canonical JSON form; two runs with equal outcomes serialize to identical
// bytes.
nlohmann::ordered_json report_json(const Report& report);

// The rank-3 group behind the KLEIN-QUOTIENTS check:
//   <v2, w1, w2 | [w1,v2], [w2,v2], w1^2 v2^k, w2^2, v2^2>.
// Its quotients by w2 and by v2 w2 both have order 4, elementary abelian for
// even k and cyclic for odd k.
Presentation klein_group_presentation(int k);

// 0 all pass, 1 any failure, 2 inconclusive results but no failure.
int report_exit_code(const Report& report);

}  // namespace braidcert
