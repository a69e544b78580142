// knotforms: command-line front end. Exit codes: 0 success (and "cobordant"),
// 1 not cobordant, 2 bad input or usage, 3 cobordance unknown within bound,
// 4 internal error.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "knotforms/report.hpp"

using namespace knotforms;

namespace {

constexpr int exit_usage = 2;
constexpr int exit_internal = 4;
constexpr long warn_rank = 4096;
constexpr long default_rank_limit = 65536;

struct InputError : Error {
  using Error::Error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

long rank_limit() {
  const char* env = std::getenv("KNOTFORMS_RANK_LIMIT");
  if (!env || !*env) return default_rank_limit;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0) throw InputError(std::string("KNOTFORMS_RANK_LIMIT is not a nonnegative integer: ") + env);
  return v;
}

void guard_rank(const Integer& rank, const std::string& what) {
  const long limit = rank_limit();
  if (rank > limit)
    throw InputError(what + " has rank " + to_string(rank) + ", above the limit " + std::to_string(limit) +
                     " (set KNOTFORMS_RANK_LIMIT to override)");
  if (rank > warn_rank) std::cerr << "warning: " << what << " has rank " << rank << "; this may be slow\n";
}

MatrixFile load(const std::string& path) {
  try {
    MatrixFile f = parse_matrix_file(read_input(path));
    guard_rank(Integer(static_cast<unsigned long>(f.matrix.rows())), path);
    return f;
  } catch (const ParseError& e) {
    throw InputError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

Format parse_format(const std::string& s) { return s == "machine" ? Format::machine : Format::text; }

int run_invariants(const std::vector<std::string>& paths, Format format, int jobs) {
  std::vector<MatrixFile> files;
  for (const auto& p : paths) files.push_back(load(p));

  std::vector<Report> reports(files.size());
  if (jobs <= 1 || files.size() <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i) reports[i] = invariants_report(files[i]);
  } else {
    // Batch mode: bounded number of concurrent files, output in input order.
    for (std::size_t start = 0; start < files.size(); start += static_cast<std::size_t>(jobs)) {
      std::vector<std::future<Report>> pending;
      const std::size_t stop = std::min(files.size(), start + static_cast<std::size_t>(jobs));
      for (std::size_t i = start; i < stop; ++i)
        pending.push_back(std::async(std::launch::async, [&files, i] { return invariants_report(files[i]); }));
      for (std::size_t i = start; i < stop; ++i) reports[i] = pending[i - start].get();
    }
  }

  std::string out;
  if (reports.size() == 1) {
    out = render(reports.front(), format);
  } else if (format == Format::machine) {
    Report all = Report::array();
    for (std::size_t i = 0; i < reports.size(); ++i) all.push_back({{"file", paths[i]}, {"report", reports[i]}});
    out = render(all, format);
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i)
      out += (i ? "\n" : "") + std::string("== ") + paths[i] + " ==\n" + render(reports[i], format);
  }
  std::cout << out;
  return 0;
}

int run_brieskorn(const std::vector<int>& exponents, Format format, const std::string& emit) {
  for (int a : exponents)
    if (a < 2) throw InputError("exponent " + std::to_string(a) + " is below 2");
  BrieskornGerm germ(exponents);
  guard_rank(germ.milnor_number(), "germ " + to_string(germ));
  GermReport g = germ_report(germ);
  if (!emit.empty()) {
    if (germ.q() == 0) throw InputError("a one-variable germ has q = 0, which a matrix file cannot record");
    std::string text = emit_matrix_file({g.seifert.q(), g.seifert.matrix()});
    if (emit == "-") {
      std::cout << text;
      return 0;
    }
    std::ofstream o(emit, std::ios::binary);
    if (!o) throw InputError("cannot write " + emit);
    o << text;
  }
  std::cout << render(germ_document(g), format);
  return 0;
}

int run_cobordant(const std::string& a, const std::string& b, int bound, int jobs, Format format) {
  MatrixFile fa = load(a), fb = load(b);
  if (fa.q % 2 != fb.q % 2)
    throw InputError("q parity differs: " + a + " has q=" + std::to_string(fa.q) + ", " + b + " has q=" +
                     std::to_string(fb.q));
  const int eps = fa.q % 2 == 0 ? 1 : -1;
  EpsForm f1, f2;
  try {
    f1 = validate_eps_form(fa.matrix, eps);
    f2 = validate_eps_form(fb.matrix, eps);
  } catch (const InvalidFormError& e) {
    throw InputError(e.what());
  }
  CobordanceVerdict v = algebraically_cobordant(f1, f2, bound, jobs);
  std::cout << render(cobordance_document(v, bound), format);
  switch (v.kind) {
    case Cobordance::cobordant:
      return 0;
    case Cobordance::not_cobordant:
      return 1;
    case Cobordance::unknown:
      return 3;
  }
  return exit_internal;
}

int run_groups(int from, int to, bool current, Format format) {
  if (from < 1) throw InputError("n must be >= 1");
  if (to < from) to = from;
  std::cout << render(groups_document(from, to, current ? current_exceptions() : classical_exceptions()), format);
  return 0;
}

int run_handles(const std::string& path, Format format) {
  std::cout << render(handles_document(load(path)), format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of high-dimensional knots, Seifert forms and Brieskorn links"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output mode")->check(CLI::IsMember({"text", "machine"}));

  std::vector<std::string> inv_paths;
  int jobs = 1;
  auto* inv = app.add_subcommand("invariants", "Invariant report for Seifert matrix files ('-' reads stdin)");
  inv->add_option("files", inv_paths, "Matrix files")->required();
  inv->add_option("--jobs", jobs, "Files processed in parallel")->check(CLI::PositiveNumber);

  std::vector<int> exponents;
  std::string emit;
  auto* bri = app.add_subcommand("brieskorn", "Report for the germ z_0^a_0 + ... + z_q^a_q");
  bri->add_option("exponents", exponents, "Exponents a_i >= 2")->required();
  bri->add_option("--emit-matrix", emit, "Write the Seifert matrix as a matrix file ('-' for stdout only)");

  std::string file_a, file_b;
  int bound = 2;
  auto* cob = app.add_subcommand("cobordant", "Decide algebraic cobordance of two Seifert forms");
  cob->add_option("first", file_a)->required();
  cob->add_option("second", file_b)->required();
  cob->add_option("--bound", bound, "Entry bound of the metaboliser search")->check(CLI::PositiveNumber);
  cob->add_option("--jobs", jobs, "Search threads")->check(CLI::PositiveNumber);

  int n_from = 1, n_to = 0;
  bool current = false;
  auto* grp = app.add_subcommand("groups", "Groups of embeddable homotopy spheres for n in [from, to]");
  grp->add_option("from", n_from)->required();
  grp->add_option("to", n_to);
  grp->add_flag("--current", current, "Use the present-day list of exceptional dimensions");

  std::string handle_path;
  auto* han = app.add_subcommand("handles", "Handle attaching data read from a Seifert matrix");
  han->add_option("file", handle_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return exit_usage;
  }

  const Format fmt = parse_format(format);
  try {
    if (inv->parsed()) return run_invariants(inv_paths, fmt, jobs);
    if (bri->parsed()) return run_brieskorn(exponents, fmt, emit);
    if (cob->parsed()) return run_cobordant(file_a, file_b, bound, jobs, fmt);
    if (grp->parsed()) return run_groups(n_from, n_to, current, fmt);
    if (han->parsed()) return run_handles(handle_path, fmt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_usage;
}
