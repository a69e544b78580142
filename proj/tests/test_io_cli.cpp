#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "knotforms/matrix_file.hpp"
#include "knotforms/report.hpp"
#include "support.hpp"

using namespace knotforms;
using namespace knotforms::testing;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(KNOTFORMS_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(KNOTFORMS_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("matrix file parsing") {
  MatrixFile f = parse_matrix_file("# comment\nq=3 rank=2\n\n 1 -2 # trailing\n\xe2\x88\x92" "3 4\n");
  CHECK(f.q == 3);
  CHECK(f.matrix == IntMatrix{{1, -2}, {-3, 4}});
  CHECK(parse_matrix_file("q=1 rank=0\n").matrix.rows() == 0);
  CHECK(parse_matrix_file("q=1 rank=1\r\n7\r\n").matrix == IntMatrix{{7}});
}

TEST_CASE("matrix file errors name the line") {
  auto line_of = [](const std::string& text) {
    try {
      parse_matrix_file(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("q=1 rank=2\n1 0\n1\n") == 3);
  CHECK(line_of("q=1 rank=1\nx\n") == 2);
  CHECK(line_of("rank=1 q=1\n1\n") == 1);
  CHECK(line_of("q=0 rank=1\n1\n") == 1);
  CHECK(line_of("q=1 rank=1\n1\n2\n") == 3);
  CHECK(line_of("q=1 rank=2\n1 0\n") == 3);
  CHECK(line_of("") == 1);
  CHECK(line_of("q=1 rank=99999999999999999999\n") == 1);
  CHECK(line_of("q=1 rank=1\n99999999999999999999999999\n") == 0);  // big integers are fine
}

TEST_CASE("matrix files round-trip") {
  Rng rng(601);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 0, 6));
    MatrixFile f{uniform(rng, 1, 9), random_matrix(rng, n, n, -50, 50)};
    MatrixFile g = parse_matrix_file(emit_matrix_file(f));
    CHECK(g.q == f.q);
    CHECK(g.matrix == f.matrix);
  }
  CHECK(emit_matrix_file({1, IntMatrix{{-1, 0}, {1, -1}}}) == "q=1 rank=2\n-1 0\n1 -1\n");
}

TEST_CASE("machine report is valid JSON with exact integers") {
  Report r = invariants_report(parse_matrix_file(slurp(data("trefoil.txt"))));
  Report back = Report::parse(render(r, Format::machine));
  CHECK(back == r);
  CHECK(back["alexander_conway"] == "t - 1 + t^-1");
  CHECK(back["karl"] == 1);
  Integer big("123456789012345678901234567890");
  CHECK(integer_json(big) == "123456789012345678901234567890");
  CHECK(integer_json(Integer(-5)) == -5);
}

TEST_CASE("cli invariants") {
  Run r = run("invariants " + data("trefoil.txt"));
  CHECK(r.status == 0);
  CHECK(contains(r.out, "alexander_conway: t - 1 + t^-1"));
  CHECK(contains(r.out, "karl: 1"));
  CHECK(r.out == slurp(std::string(KNOTFORMS_TEST_GOLDEN) + "/trefoil_invariants.txt"));

  Run u = run("invariants " + data("unknot.txt"));
  CHECK(u.status == 0);
  CHECK(contains(u.out, "unknot: all invariants trivial"));

  Run machine = run("--format machine invariants " + data("trefoil.txt"));
  CHECK(machine.status == 0);
  CHECK(Report::parse(machine.out)["signature"].is_null());
}

TEST_CASE("cli output is deterministic across runs and job counts") {
  const std::string files = data("trefoil.txt") + " " + data("figure_eight.txt") + " " + data("a2.txt");
  Run a = run("invariants " + files);
  Run b = run("invariants --jobs 3 " + files);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "== " + data("a2.txt") + " =="));
  CHECK(run("invariants " + files).out == a.out);
}

TEST_CASE("cli input errors exit 2") {
  CHECK(run("invariants " + data("bad_row.txt")).status == 2);
  CHECK(run("invariants " + data("not_integer.txt")).status == 2);
  CHECK(run("invariants " + data("missing.txt")).status == 2);
  // All-or-nothing batches: one bad file prints nothing.
  Run batch = run("invariants " + data("trefoil.txt") + " " + data("bad_row.txt"));
  CHECK(batch.status == 2);
  CHECK(batch.out.empty());
  CHECK(run("brieskorn 1 3").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("").status == 2);
}

TEST_CASE("cli rank limit") {
  const std::string cmd = "env KNOTFORMS_RANK_LIMIT=1 " + std::string(KNOTFORMS_BIN) + " invariants " +
                          data("trefoil.txt") + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 2);
}

TEST_CASE("cli brieskorn") {
  Run r = run("brieskorn 2 3 5");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "milnor_number: 8"));
  CHECK(contains(r.out, "signature: -8"));
  Run emit = run("brieskorn 2 3 --emit-matrix -");
  CHECK(emit.status == 0);
  CHECK(emit.out == "q=1 rank=2\n-1 0\n1 -1\n");
  CHECK(run("brieskorn 5 --emit-matrix -").status == 2);
  Run kervaire = run("brieskorn 2 2 2 2 2 3");
  CHECK(contains(kervaire.out, "exotic Sigma^9 (Kervaire sphere)"));
}

TEST_CASE("cli cobordance exit codes") {
  CHECK(run("cobordant " + data("trefoil.txt") + " " + data("trefoil.txt")).status == 0);
  CHECK(run("cobordant " + data("trefoil.txt") + " " + data("unknot.txt")).status == 1);
  CHECK(run("cobordant " + data("hyperbolic.txt") + " " + data("unknot.txt")).status == 0);
  CHECK(run("cobordant " + data("trefoil.txt") + " " + data("a2.txt")).status == 2);  // parity
  Run m = run("--format machine cobordant " + data("trefoil.txt") + " " + data("unknot.txt"));
  CHECK(Report::parse(m.out)["verdict"] == "not-cobordant");
}

TEST_CASE("cli groups and handles") {
  Run g = run("groups 1 13");
  CHECK(g.status == 0);
  CHECK(g.out == slurp(std::string(KNOTFORMS_TEST_GOLDEN) + "/groups_1_13.txt"));
  CHECK(contains(run("groups 125").out, "unknown"));
  CHECK_FALSE(contains(run("groups 125 --current").out, "unknown"));
  Run h = run("handles " + data("a2.txt"));
  CHECK(h.status == 0);
  CHECK(contains(h.out, "framings: -2, -2"));
}
