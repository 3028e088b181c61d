// Benchmark: OpenMP-parallel homomorphism search vs. the serial reference
// implementation, on the involutory quotient induced by the reference braid.
// Verifies that both produce identical candidate lists, then reports timings.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidcert/braid.hpp"
#include "braidcert/hom_search.hpp"
#include "braidcert/presentation.hpp"
#include "braidcert/word.hpp"

using namespace braidcert;

namespace {

// Same involutory quotient that braid certification searches through:
// squares of all generators plus g_i * reflected(g_i) for each strand.
Presentation braid_quotient_presentation(const BraidWord& b) {
  const auto alpha = loop_alphabet(b.strands());
  std::vector<Word> relators;
  for (int i = 0; i < b.strands(); ++i) {
    Word g = Word::generator(alpha, WordMode::Free, i);
    relators.push_back(g * g);
  }
  for (int i = 1; i <= b.strands(); ++i) {
    Word g = Word::generator(alpha, WordMode::Free, i - 1);
    relators.push_back(g * reflected_loop_action(b, i).in_mode(WordMode::Free));
  }
  return Presentation{alpha, std::move(relators)};
}

Word boundary_word(const AlphabetPtr& alpha) {
  Word u = Word::identity(alpha, WordMode::Free);
  for (std::size_t g = 0; g < alpha->size(); ++g)
    u = u * Word::generator(alpha, WordMode::Free, static_cast<int>(g));
  return u;
}

template <typename F>
double best_seconds(int repeat, F&& run) {
  double best = 0.0;
  for (int i = 0; i < repeat; ++i) {
    const auto start = std::chrono::steady_clock::now();
    run();
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (i == 0 || s < best) best = s;
  }
  return best;
}

bool same_results(const std::vector<HomCandidate>& a, const std::vector<HomCandidate>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].images != b[i].images) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compare the parallel homomorphism search against the serial reference"};
  std::vector<int> degrees{4, 5};
  int repeat = 3;
  std::string braid_text = "s1^2 s3 s2 s3^-1 s1^-2";
  app.add_option("--degrees", degrees, "symmetric-group degrees to benchmark")
      ->check(CLI::Range(2, 6));
  app.add_option("--repeat", repeat, "timed repetitions per configuration (best is reported)")
      ->check(CLI::PositiveNumber);
  app.add_option("--braid", braid_text, "braid word whose induced quotient is searched");
  CLI11_PARSE(app, argc, argv);

  BraidWord b = parse_braid(braid_text, 4);
  Presentation p = braid_quotient_presentation(b);

  SearchSpec spec;
  spec.presentation = p;
  spec.restrict_to_involutions = true;
  spec.require_nontrivial = boundary_word(p.alphabet);

  std::printf("%-8s %12s %12s %9s %11s\n", "degree", "serial (s)", "parallel (s)", "speedup",
              "candidates");
  bool all_match = true;
  for (int degree : degrees) {
    spec.degree = degree;

    std::vector<HomCandidate> serial_result = search_serial(spec);
    std::vector<HomCandidate> parallel_result = search(spec);
    const bool match = same_results(serial_result, parallel_result);
    all_match = all_match && match;

    const double serial_s = best_seconds(repeat, [&] { serial_result = search_serial(spec); });
    const double parallel_s = best_seconds(repeat, [&] { parallel_result = search(spec); });

    std::printf("%-8d %12.4f %12.4f %8.2fx %11zu%s\n", degree, serial_s, parallel_s,
                parallel_s > 0 ? serial_s / parallel_s : 0.0, serial_result.size(),
                match ? "" : "  MISMATCH");
  }
  if (!all_match) {
    std::fprintf(stderr, "error: serial and parallel searches disagree\n");
    return 1;
  }
  return 0;
}
