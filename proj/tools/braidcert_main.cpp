#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "braidcert/certify.hpp"
#include "braidcert/checks.hpp"
#include "braidcert/version.hpp"
#include "braidcert/word_io.hpp"

namespace {

using namespace braidcert;

constexpr int kStrands = 4;

// Exit codes: 0 success / all pass, 1 a check failed, 2 inconclusive results
// but no failure, 3 usage or parse errors.
enum ExitCode { kOk = 0, kCheckFailed = 1, kInconclusive = 2, kUsage = 3 };

std::vector<Word> parse_subgroup_words(const std::string& text, const AlphabetPtr& alphabet) {
  std::vector<Word> words;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = std::min(text.find(';', begin), text.size());
    std::string piece = text.substr(begin, end - begin);
    if (piece.find_first_not_of(" \t") != std::string::npos)
      words.push_back(parse_word(piece, alphabet, WordMode::Free));
    if (end == text.size()) break;
    begin = end + 1;
  }
  return words;
}

void print_report_human(const Report& report) {
  std::size_t id_width = 4;
  for (const Check& c : report.checks) id_width = std::max(id_width, c.id.size());
  for (const Check& c : report.checks) {
    std::cout << std::left << std::setw(static_cast<int>(id_width) + 2) << c.id << std::setw(14)
              << to_string(c.status);
    if (c.status == CheckStatus::Pass)
      std::cout << c.actual;
    else
      std::cout << "expected [" << c.expected << "], got [" << c.actual << "]";
    std::cout << "\n";
  }
  std::cout << "summary: " << report.passed() << " pass, " << report.failed() << " fail, "
            << report.inconclusive() << " inconclusive\n";
}

int run_verify_all(bool json, long max_cosets) {
  Report report = run_all(SuiteOptions{max_cosets});
  if (json)
    std::cout << report_json(report).dump(2) << "\n";
  else
    print_report_human(report);
  return report_exit_code(report);
}

int run_single_check(const std::string& id, bool json, long max_cosets) {
  Check check = run_check(id, SuiteOptions{max_cosets});
  Report report{kVersion, {check}};
  if (json)
    std::cout << report_json(report).dump(2) << "\n";
  else
    print_report_human(report);
  return report_exit_code(report);
}

int run_braid_act(const std::string& braid_text, const std::string& target, bool reflect,
                  bool involutory) {
  if (reflect && !involutory)
    throw DomainError("--reflect requires --involutory (reflection reverses loop orientations)");
  BraidWord b = parse_braid(braid_text, kStrands);
  const WordMode mode = involutory ? WordMode::Involutory : WordMode::Free;
  const auto alpha = loop_alphabet(kStrands);

  auto index_suffix = [&](const std::string& prefix) -> std::optional<int> {
    if (target.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string digits = target.substr(prefix.size());
    if (digits.empty() || digits.size() > 2 ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    int value = std::stoi(digits);
    if (value < 1 || value > kStrands) throw DomainError("target index out of range");
    return value;
  };

  if (auto rho = index_suffix("rho")) {
    BasedPath p = act_on_path(b, base_path(kStrands, *rho, mode), mode);
    if (reflect) p = reflect_path(p);
    std::cout << print_path(p) << "\n";
    return kOk;
  }
  auto gamma = index_suffix("gamma");
  Word w = gamma ? Word::generator(alpha, mode, *gamma - 1) : parse_word(target, alpha, mode);
  Word moved = act_on_loop(b, w, mode);
  if (reflect) moved = reflect_loop(moved);
  std::cout << print_word(moved) << "\n";
  return kOk;
}

int run_coset_enum(const std::string& path, const std::string& subgroup, long max_cosets) {
  Presentation p = load_presentation(path);
  std::vector<Word> subgens = parse_subgroup_words(subgroup, p.alphabet);
  EnumResult r = todd_coxeter(p, subgens, max_cosets);
  if (r.finite()) {
    std::cout << "status: finite\nindex: " << r.coset_count << "\ndefined: " << r.cosets_defined
              << "\nmax live: " << r.max_live << "\n";
    return kOk;
  }
  std::cout << "status: limit_exceeded\nlive at cutoff: " << r.coset_count
            << "\ndefined: " << r.cosets_defined << "\nmax_cosets: " << max_cosets << "\n";
  return kInconclusive;
}

int run_order(const std::string& path, const std::string& word_text, long max_cosets) {
  Presentation p = load_presentation(path);
  Word w = parse_word(word_text, p.alphabet, WordMode::Free);
  std::cout << element_order(p, w, max_cosets) << "\n";
  return kOk;
}

int run_hom_search(const std::string& path, int degree, bool involutions,
                   const std::string& nontrivial) {
  Presentation p = load_presentation(path);
  SearchSpec spec;
  spec.presentation = p;
  spec.degree = degree;
  spec.restrict_to_involutions = involutions;
  if (!nontrivial.empty())
    spec.require_nontrivial = parse_word(nontrivial, p.alphabet, WordMode::Free);
  std::vector<HomCandidate> found = search(spec);
  for (const HomCandidate& hom : found) {
    std::string line;
    for (std::size_t g = 0; g < hom.images.size(); ++g) {
      if (!line.empty()) line += ' ';
      line += p.alphabet->name(static_cast<int>(g)) + "=" + print_perm(hom.images[g]);
    }
    std::cout << line << "\n";
  }
  std::cout << "found " << found.size() << " homomorphism(s)\n";
  return kOk;
}

int run_certify(const std::string& braid_text, int degree_max, bool json) {
  BraidWord b = parse_braid(braid_text, kStrands);
  std::optional<BraidCertificate> cert = certify_braid(b, degree_max);
  if (!cert) {
    if (json) {
      nlohmann::ordered_json j;
      j["braid"] = print_braid(b);
      j["degree_max"] = degree_max;
      j["status"] = "unknown";
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "UNKNOWN: no certificate found up to degree " << degree_max << "\n";
    }
    return kInconclusive;
  }
  if (json) {
    std::cout << cert->to_json().dump(2) << "\n";
  } else {
    std::cout << "VALID certificate at degree " << cert->degree << "\n";
    const auto alpha = loop_alphabet(kStrands);
    for (std::size_t g = 0; g < cert->images.size(); ++g)
      std::cout << "  " << alpha->name(static_cast<int>(g)) << " -> "
                << print_perm(cert->images[g]) << "\n";
    std::cout << "  f = " << print_word(cert->f) << " -> "
              << print_perm(word_image(cert->f, cert->images)) << "\n";
    std::cout << "  u = " << print_word(cert->u) << " -> "
              << print_perm(word_image(cert->u, cert->images)) << "\n";
  }
  return kOk;
}

int run_klein(int k, long max_cosets) {
  Presentation g = klein_group_presentation(k);
  Word v2 = Word::generator(g.alphabet, WordMode::Free, 0);
  Word w2 = Word::generator(g.alphabet, WordMode::Free, 2);

  auto summarize = [&](const Presentation& q) {
    std::vector<long long> orders = element_orders(q, max_cosets);
    long long max_order = *std::max_element(orders.begin(), orders.end());
    return std::pair<long long, long long>(static_cast<long long>(orders.size()), max_order);
  };
  auto [order_a, max_a] = summarize(quotient(g, {w2}));
  auto [order_b, max_b] = summarize(quotient(g, {v2 * w2}));

  std::cout << "k=" << k << "\nquotient by w2:    order " << order_a << ", max element order "
            << max_a << "\nquotient by v2 w2: order " << order_b << ", max element order " << max_b
            << "\n";
  const long long want_max = (k % 2 == 0) ? 2 : 4;
  const bool ok = order_a == 4 && order_b == 4 && max_a == want_max && max_b == want_max;
  std::cout << "expected for this parity: order 4, max element order " << want_max << " ("
            << (ok ? "match" : "MISMATCH") << ")\n";
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group-theoretic computations and braid-action certificates"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  long max_cosets = kDefaultMaxCosets;
  bool json = false;

  auto* verify = app.add_subcommand("verify-all", "run the bundled battery of named checks");
  verify->add_flag("--json", json, "emit the canonical JSON report");
  verify->add_option("--max-cosets", max_cosets, "coset limit for the enumerations")
      ->check(CLI::PositiveNumber);

  std::string check_id;
  auto* check = app.add_subcommand("check", "run one named check from the battery");
  check->add_option("id", check_id, "check id, e.g. T34-ORDER")->required();
  check->add_flag("--json", json, "emit the canonical JSON report");
  check->add_option("--max-cosets", max_cosets, "coset limit for the enumerations")
      ->check(CLI::PositiveNumber);

  std::string braid_text, target;
  bool reflect = false, involutory = false;
  auto* braid = app.add_subcommand("braid", "braid group operations");
  auto* act = braid->add_subcommand("act", "act on a loop word or a based path");
  act->add_option("--braid", braid_text, "braid word, e.g. \"s1^2 s3 s2 s3^-1 s1^-2\"")
      ->required();
  act->add_option("--target", target,
                  "gamma<i>, rho<i>, or a word over g1..g4 (e.g. \"g1 g2^-1\")")
      ->required();
  act->add_flag("--reflect", reflect, "apply the disk reflection afterwards");
  act->add_flag("--involutory", involutory, "reduce with every generator an involution");

  std::string pres_path, subgroup_text, word_text, nontrivial_text;
  auto* coset = app.add_subcommand("coset-enum", "enumerate cosets of a subgroup");
  coset->add_option("--presentation", pres_path, "presentation file")
      ->required()
      ->check(CLI::ExistingFile);
  coset->add_option("--subgroup", subgroup_text, "semicolon-separated subgroup words");
  coset->add_option("--max-cosets", max_cosets, "coset limit")->check(CLI::PositiveNumber);

  auto* order = app.add_subcommand("order", "order of an element of a finite presented group");
  order->add_option("--presentation", pres_path, "presentation file")
      ->required()
      ->check(CLI::ExistingFile);
  order->add_option("--word", word_text, "element as a word over the presentation's generators")
      ->required();
  order->add_option("--max-cosets", max_cosets, "coset limit")->check(CLI::PositiveNumber);

  int degree = 2;
  bool involutions = false;
  auto* hom = app.add_subcommand("hom-search", "enumerate homomorphisms to a symmetric group");
  hom->add_option("--presentation", pres_path, "presentation file")
      ->required()
      ->check(CLI::ExistingFile);
  hom->add_option("--degree", degree, "symmetric group degree (1..6)")->required();
  hom->add_flag("--involutions", involutions, "restrict images to involutions and the identity");
  hom->add_option("--require-nontrivial", nontrivial_text,
                  "keep only candidates mapping this word to a non-identity element");

  int degree_max = 4;
  auto* certify = app.add_subcommand("certify", "search for a homomorphism certificate");
  certify->add_option("--braid", braid_text, "braid word on 4 strands")->required();
  certify->add_option("--degree-max", degree_max, "largest symmetric group degree to try (2..6)");
  certify->add_flag("--json", json, "emit the certificate as JSON");

  int klein_k = 0;
  auto* klein = app.add_subcommand("klein", "order-4 quotients of the rank-3 parameterized group");
  klein->add_option("--k", klein_k, "exponent parameter")->required();
  klein->add_option("--max-cosets", max_cosets, "coset limit")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed()) return run_verify_all(json, max_cosets);
    if (check->parsed()) return run_single_check(check_id, json, max_cosets);
    if (act->parsed()) return run_braid_act(braid_text, target, reflect, involutory);
    if (braid->parsed()) {
      std::cerr << "error: braid needs a subcommand (act)\n";
      return kUsage;
    }
    if (coset->parsed()) return run_coset_enum(pres_path, subgroup_text, max_cosets);
    if (order->parsed()) return run_order(pres_path, word_text, max_cosets);
    if (hom->parsed()) return run_hom_search(pres_path, degree, involutions, nontrivial_text);
    if (certify->parsed()) return run_certify(braid_text, degree_max, json);
    if (klein->parsed()) return run_klein(klein_k, max_cosets);
  } catch (const LimitError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  std::cerr << "error: no subcommand\n";
  return kUsage;
}
