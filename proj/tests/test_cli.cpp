#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + BRAIDCERT_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

std::string fixture(const std::string& name) {
  return std::string(BRAIDCERT_FIXTURES_DIR) + "/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verify-all passes and reports a summary") {
  RunResult r = run_cli("verify-all");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "summary: 15 pass, 0 fail, 0 inconclusive"));
  CHECK(contains(r.output, "T34-ORDER"));
  CHECK(contains(r.output, "CERT-SELF"));
}

TEST_CASE("verify-all --json is byte-stable across runs") {
  RunResult first = run_cli("verify-all --json");
  RunResult second = run_cli("verify-all --json");
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(contains(first.output, "\"version\""));
  CHECK(contains(first.output, "\"summary\""));
}

TEST_CASE("verify-all propagates starved limits as exit 2") {
  RunResult r = run_cli("verify-all --max-cosets 10");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "inconclusive"));
}

TEST_CASE("single checks by id") {
  RunResult ok = run_cli("check T34-ORDER");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.output, "pass"));
  CHECK(run_cli("check NO-SUCH-ID").exit_code == 3);
}

TEST_CASE("braid act on loops and paths") {
  RunResult reflected =
      run_cli("braid act --braid \"s1^2 s3 s2 s3^-1 s1^-2\" --target gamma4 --reflect --involutory");
  CHECK(reflected.exit_code == 0);
  CHECK(reflected.output == "g2 g4 g3 g4 g2\n");

  RunResult path =
      run_cli("braid act --braid \"s1^2 s3 s2 s3^-1 s1^-2\" --target rho4 --involutory");
  CHECK(path.exit_code == 0);
  CHECK(path.output == "g3 g1 rho2\n");

  RunResult free_loop = run_cli("braid act --braid s1 --target gamma1");
  CHECK(free_loop.exit_code == 0);
  CHECK(free_loop.output == "g1 g2 g1^-1\n");

  RunResult word_target = run_cli("braid act --braid s1 --target \"g1 g2^-1\"");
  CHECK(word_target.exit_code == 0);
  CHECK(word_target.output == "g1 g2 g1^-1 g1^-1\n");

  // Reflection needs the involutory quotient.
  CHECK(run_cli("braid act --braid s1 --target gamma1 --reflect").exit_code == 3);
  // Unknown target generator and malformed braids are usage errors.
  CHECK(run_cli("braid act --braid s1 --target gamma9").exit_code == 3);
  CHECK(run_cli("braid act --braid s9 --target gamma1").exit_code == 3);
  CHECK(run_cli("braid act --braid s1 --target zz").exit_code == 3);
}

TEST_CASE("coset enumeration against fixture presentations") {
  RunResult q8 = run_cli("coset-enum --presentation " + fixture("q8.pres"));
  CHECK(q8.exit_code == 0);
  CHECK(contains(q8.output, "status: finite"));
  CHECK(contains(q8.output, "index: 8"));

  RunResult t34 = run_cli("coset-enum --presentation " + fixture("t34q.pres"));
  CHECK(t34.exit_code == 0);
  CHECK(contains(t34.output, "index: 48"));

  RunResult sub = run_cli("coset-enum --presentation " + fixture("q8.pres") + " --subgroup x");
  CHECK(sub.exit_code == 0);
  CHECK(contains(sub.output, "index: 2"));

  RunResult cut = run_cli("coset-enum --presentation " + fixture("boundary_q.pres") +
                          " --max-cosets 100");
  CHECK(cut.exit_code == 2);
  CHECK(contains(cut.output, "status: limit_exceeded"));

  CHECK(run_cli("coset-enum --presentation /missing/nothing.pres").exit_code == 3);
}

TEST_CASE("element orders from presentations") {
  RunResult mu = run_cli("order --presentation " + fixture("t34q.pres") +
                         " --word \"a1^-1 a2^-1\"");
  CHECK(mu.exit_code == 0);
  CHECK(mu.output == "2\n");

  RunResult lam = run_cli("order --presentation " + fixture("t34q.pres") +
                          " --word \"(a2 a1)^12 a1^-3\"");
  CHECK(lam.exit_code == 0);
  CHECK(lam.output == "2\n");

  RunResult x = run_cli("order --presentation " + fixture("q8.pres") + " --word x");
  CHECK(x.exit_code == 0);
  CHECK(x.output == "4\n");

  RunResult id = run_cli("order --presentation " + fixture("q8.pres") + " --word e");
  CHECK(id.exit_code == 0);
  CHECK(id.output == "1\n");

  CHECK(run_cli("order --presentation " + fixture("t34q.pres") + " --word zz").exit_code == 3);
}

TEST_CASE("homomorphism search lists candidates deterministically") {
  RunResult r = run_cli("hom-search --presentation " + fixture("q8.pres") + " --degree 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "found 52 homomorphism(s)"));
  CHECK(contains(r.output, "x=() y=()"));

  RunResult restricted = run_cli("hom-search --presentation " + fixture("q8.pres") +
                                 " --degree 4 --involutions --require-nontrivial x");
  CHECK(restricted.exit_code == 0);
  CHECK(!contains(restricted.output, "x=() "));

  RunResult again = run_cli("hom-search --presentation " + fixture("q8.pres") + " --degree 4");
  CHECK(again.output == r.output);

  CHECK(run_cli("hom-search --presentation " + fixture("q8.pres") + " --degree 9").exit_code ==
        3);
}

TEST_CASE("certification of braids") {
  RunResult valid = run_cli("certify --braid \"s1^2 s3 s2 s3^-1 s1^-2\"");
  CHECK(valid.exit_code == 0);
  CHECK(contains(valid.output, "VALID certificate at degree 4"));

  RunResult json = run_cli("certify --braid \"s1^2 s3 s2 s3^-1 s1^-2\" --json");
  CHECK(json.exit_code == 0);
  CHECK(contains(json.output, "\"valid\": true"));
  CHECK(contains(json.output, "\"braid\": \"s1^2 s3 s2 s3^-1 s1^-2\""));

  RunResult unknown = run_cli("certify --braid \"\"");
  CHECK(unknown.exit_code == 2);
  CHECK(contains(unknown.output, "UNKNOWN"));

  RunResult intransitive = run_cli("certify --braid s2");
  CHECK(intransitive.exit_code == 2);

  CHECK(run_cli("certify --braid \"s1 s5\"").exit_code == 3);
}

TEST_CASE("parity subcommand reports both quotients") {
  RunResult even = run_cli("klein --k 2");
  CHECK(even.exit_code == 0);
  CHECK(contains(even.output, "max element order 2"));
  CHECK(contains(even.output, "(match)"));

  RunResult odd = run_cli("klein --k 3");
  CHECK(odd.exit_code == 0);
  CHECK(contains(odd.output, "max element order 4"));

  RunResult starved = run_cli("klein --k 0 --max-cosets 2");
  CHECK(starved.exit_code == 2);
  CHECK(contains(starved.output, "inconclusive"));
}

TEST_CASE("top-level usage behaviour") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("--version").exit_code == 0);
  CHECK(run_cli("").exit_code == 3);
  CHECK(run_cli("frobnicate").exit_code == 3);
}
