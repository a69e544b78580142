#include "knotforms/cobordism.hpp"

#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "knotforms/factor.hpp"
#include "knotforms/quadratic.hpp"
#include "knotforms/seifert.hpp"

namespace knotforms {

IntMatrix EpsForm::symmetrization() const { return eps_ == 1 ? a_ + a_.transpose() : a_ - a_.transpose(); }

EpsForm validate_eps_form(IntMatrix a, int eps) {
  if (!a.is_square()) throw DomainError("eps-form matrix must be square");
  if (eps != 1 && eps != -1) throw DomainError("eps must be +1 or -1");
  EpsForm f;
  f.a_ = std::move(a);
  f.eps_ = eps;
  Integer d = det(f.symmetrization());
  if (d != 1 && d != -1)
    throw InvalidFormError("not an eps-form: det(A + eps A^T) = " + to_string(d) + ", expected +-1");
  return f;
}

EpsForm orthogonal_difference(const EpsForm& f1, const EpsForm& f2) {
  if (f1.eps() != f2.eps()) throw DomainError("orthogonal_difference: eps differs between forms");
  return validate_eps_form(block_diagonal(f1.matrix(), -f2.matrix()), f1.eps());
}

IntMatrix Metaboliser::basis_matrix() const {
  const std::size_t n = basis.empty() ? 0 : basis.front().size();
  IntMatrix b(n, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) b(i, j) = basis[j][i];
  return b;
}

MetaboliserCheck check_metaboliser(const EpsForm& f, const std::vector<IntVector>& basis) {
  const std::size_t n = f.rank();
  if (n % 2 != 0) return {false, "odd rank " + std::to_string(n) + " admits no metaboliser"};
  if (basis.size() != n / 2)
    return {false, "expected " + std::to_string(n / 2) + " basis vectors, got " + std::to_string(basis.size())};
  for (const auto& v : basis)
    if (v.size() != n) throw DomainError("metaboliser candidate vector has wrong length");
  IntMatrix b = Metaboliser{basis}.basis_matrix();
  for (const auto& d : smith_normal_form(b))
    if (d != 1) {
      if (d == 0) return {false, "basis vectors are linearly dependent"};
      return {false, "sublattice is not pure (Smith invariant " + to_string(d) + ")"};
    }
  IntMatrix g = b.transpose() * f.matrix() * b;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (g(i, j) != 0)
        return {false, "form does not vanish: A(v" + std::to_string(i + 1) + ", v" + std::to_string(j + 1) +
                           ") = " + to_string(g(i, j))};
  return {true, ""};
}

bool is_metaboliser(const EpsForm& f, const std::vector<IntVector>& basis) { return check_metaboliser(f, basis).ok; }

namespace {

using Row = std::vector<std::int64_t>;

// Walks the candidate rows of one HNF level in the documented order.
class RowEnumerator {
 public:
  RowEnumerator(std::size_t n, std::size_t first_col, std::size_t last_col, int bound)
      : n_(n), col_(first_col), last_col_(last_col), bound_(bound) {
    reset_row();
  }

  bool next(Row& out, std::size_t& pivot_col) {
    while (col_ <= last_col_) {
      if (!fresh_ && !advance_digits()) {
        if (++pivot_ > bound_) {
          pivot_ = 1;
          ++col_;
          if (col_ > last_col_) return false;
        }
        reset_row();
      }
      fresh_ = false;
      out.assign(n_, 0);
      out[col_] = pivot_;
      for (std::size_t i = 0; i < digits_.size(); ++i) out[col_ + 1 + i] = value(digits_[i]);
      pivot_col = col_;
      return true;
    }
    return false;
  }

 private:
  static std::int64_t value(int d) { return d % 2 == 1 ? (d + 1) / 2 : -(d / 2); }

  void reset_row() {
    digits_.assign(col_ + 1 < n_ ? n_ - col_ - 1 : 0, 0);
    fresh_ = true;
  }

  bool advance_digits() {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] <= 2 * bound_) return true;
      digits_[i] = 0;
    }
    return false;
  }

  std::size_t n_;
  std::size_t col_;
  std::size_t last_col_;
  int bound_;
  std::int64_t pivot_ = 1;
  std::vector<int> digits_;
  bool fresh_ = true;
};

struct Searcher {
  const EpsForm& form;
  Matrix<std::int64_t> a;
  std::size_t n;
  std::size_t k;
  int bound;

  Searcher(const EpsForm& f, int b) : form(f), n(f.rank()), k(f.rank() / 2), bound(b) {
    // Keep every pairing value well inside int64.
    Integer largest = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) largest = std::max(largest, Integer(abs(f.matrix()(i, j))));
    Integer worst = largest * bound * bound * n * n;
    if (worst > Integer(std::numeric_limits<std::int64_t>::max() / 4))
      throw DomainError("search_metaboliser: entries or bound too large for the enumeration");
    a = Matrix<std::int64_t>(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = f.matrix()(i, j).get_si();
  }

  std::int64_t pair(const Row& x, const Row& y) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      std::int64_t t = 0;
      for (std::size_t j = 0; j < n; ++j) t += a(i, j) * y[j];
      s += x[i] * t;
    }
    return s;
  }

  bool compatible(const std::vector<Row>& rows, const Row& v, std::size_t col) const {
    const std::int64_t p = v[col];
    for (const auto& w : rows)
      if (w[col] < 0 || w[col] >= p) return false;
    if (pair(v, v) != 0) return false;
    for (const auto& w : rows)
      if (pair(v, w) != 0 || pair(w, v) != 0) return false;
    return true;
  }

  std::vector<IntVector> to_basis(const std::vector<Row>& rows) const {
    std::vector<IntVector> basis;
    for (const auto& r : rows) {
      IntVector v;
      for (auto x : r) v.emplace_back(static_cast<long>(x));
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Depth-first completion of `rows`; stops early when `abandon` says so.
  template <class Abandon>
  std::optional<std::vector<IntVector>> extend(std::vector<Row>& rows, std::size_t last_pivot,
                                               std::uint64_t& candidates, Abandon&& abandon) const {
    if (rows.size() == k) {
      ++candidates;
      auto basis = to_basis(rows);
      if (check_metaboliser(form, basis).ok) return basis;
      return std::nullopt;
    }
    const std::size_t level = rows.size();
    RowEnumerator rows_here(n, last_pivot + 1, n - (k - level), bound);
    Row v;
    std::size_t col;
    while (rows_here.next(v, col)) {
      if (abandon()) return std::nullopt;
      if (!compatible(rows, v, col)) continue;
      rows.push_back(v);
      auto found = extend(rows, col, candidates, abandon);
      rows.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }
};

// Witness for forms that are literally X (+) -X.
std::optional<std::vector<IntVector>> diagonal_probe(const EpsForm& f) {
  const std::size_t n = f.rank();
  if (n == 0 || n % 2 != 0) return std::nullopt;
  const std::size_t k = n / 2;
  const IntMatrix& a = f.matrix();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (a(i, j + k) != 0 || a(i + k, j) != 0 || a(i, j) != -a(i + k, j + k)) return std::nullopt;
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < k; ++i) {
    IntVector v(n, Integer(0));
    v[i] = 1;
    v[i + k] = 1;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

SearchResult search_metaboliser(const EpsForm& f, int bound, int jobs) {
  if (bound < 1) throw DomainError("search_metaboliser: bound must be positive");
  SearchResult out;
  const std::size_t n = f.rank();
  // A metaboliser is half-rank isotropic for the symmetrization, which then
  // has signature zero.
  if (n % 2 != 0 || (f.eps() == 1 && signature(f.symmetrization()) != 0)) {
    out.status = SearchStatus::impossible;
    return out;
  }
  if (n == 0) {
    out.status = SearchStatus::found;
    out.witness = Metaboliser{};
    return out;
  }
  if (auto diag = diagonal_probe(f); diag && check_metaboliser(f, *diag).ok) {
    out.status = SearchStatus::found;
    out.witness = Metaboliser{*diag};
    return out;
  }

  Searcher searcher(f, bound);
  const std::size_t k = n / 2;

  if (jobs <= 1) {
    std::vector<Row> rows;
    auto found = searcher.extend(rows, static_cast<std::size_t>(-1), out.candidates, [] { return false; });
    if (found) {
      out.status = SearchStatus::found;
      out.witness = Metaboliser{*found};
    }
    return out;
  }

  // Parallel: first rows are handed out in order; each carries its index.
  std::mutex mutex;
  RowEnumerator first_rows(n, 0, n - k, bound);
  std::uint64_t next_index = 0;
  std::atomic<std::uint64_t> best_index{std::numeric_limits<std::uint64_t>::max()};
  std::optional<std::vector<IntVector>> best;
  std::atomic<std::uint64_t> total{0};

  auto worker = [&] {
    std::uint64_t local = 0;
    for (;;) {
      Row v;
      std::size_t col;
      std::uint64_t index;
      {
        std::lock_guard lock(mutex);
        if (!first_rows.next(v, col)) break;
        index = next_index++;
      }
      if (index > best_index.load()) break;
      std::vector<Row> rows;
      if (!searcher.compatible(rows, v, col)) continue;
      rows.push_back(v);
      auto found = searcher.extend(rows, col, local, [&] { return index > best_index.load(); });
      if (found) {
        std::lock_guard lock(mutex);
        if (index < best_index.load()) {
          best_index = index;
          best = std::move(found);
        }
      }
    }
    total += local;
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  out.candidates = total.load();
  if (best) {
    out.status = SearchStatus::found;
    out.witness = Metaboliser{*best};
  }
  return out;
}

bool ObstructionReport::all_pass() const { return first_failure() == nullptr; }

const ObstructionCheck* ObstructionReport::first_failure() const {
  for (const auto& c : checks)
    if (c.applicable && !c.passed) return &c;
  return nullptr;
}

FoxMilnorResult fox_milnor_detail(const LaurentPolynomial& p) {
  if (p.is_zero()) throw DomainError("fox_milnor: zero polynomial");
  Factorization fac = factor_int_poly(p);
  if (!mpz_perfect_square_p(fac.content.get_mpz_t()))
    return {false, "content " + to_string(fac.content) + " is not a perfect square"};
  for (const auto& [g, m] : fac.factors) {
    LaurentPolynomial star = unit_normal(g.reciprocal());
    if (star == g) {
      if (m % 2 != 0)
        return {false, "self-reciprocal factor " + to_string(g) + " has odd multiplicity " + std::to_string(m)};
      continue;
    }
    int partner = 0;
    for (const auto& [h, mh] : fac.factors)
      if (h == star) partner = mh;
    if (partner != m)
      return {false, "factor " + to_string(g) + " (multiplicity " + std::to_string(m) + ") is unmatched by its reciprocal " +
                         to_string(star) + " (multiplicity " + std::to_string(partner) + ")"};
  }
  return {true, "Delta = Q(t) Q(t^-1) up to units"};
}

bool fox_milnor(const LaurentPolynomial& p) { return fox_milnor_detail(p).holds; }

ObstructionReport null_cobordance_obstructions(const EpsForm& f) {
  ObstructionReport report;
  const std::size_t n = f.rank();

  report.checks.push_back({"rank parity", true, n % 2 == 0, "rank " + std::to_string(n)});

  ObstructionCheck sig{"signature", f.eps() == 1, true, ""};
  if (sig.applicable) {
    int s = signature(f.symmetrization());
    sig.passed = s == 0;
    sig.certificate = "signature(A + A^T) = " + std::to_string(s);
  } else {
    sig.certificate = "skew-symmetric form";
  }
  report.checks.push_back(sig);

  const IntMatrix& a = f.matrix();
  IntMatrix b = f.eps() == 1 ? a.transpose() : IntMatrix(-a.transpose());
  LaurentPolynomial delta = pencil_det(a, b);
  FoxMilnorResult fm = fox_milnor_detail(delta);
  report.checks.push_back({"Fox-Milnor", true, fm.holds, "Delta = " + to_string(delta) + ": " + fm.reason});

  ObstructionCheck arf_check{"KARL", f.eps() == -1, true, ""};
  if (arf_check.applicable) {
    int k = karl(SeifertMatrix(a, 1));
    arf_check.passed = k == 0;
    arf_check.certificate = "KARL = " + std::to_string(k);
  } else {
    arf_check.certificate = "symmetric form";
  }
  report.checks.push_back(arf_check);
  return report;
}

CobordanceVerdict algebraically_cobordant(const EpsForm& f1, const EpsForm& f2, int bound, int jobs) {
  if (f1.eps() != f2.eps()) throw DomainError("algebraically_cobordant: eps differs between forms");
  EpsForm g = orthogonal_difference(f1, f2);
  CobordanceVerdict verdict;
  verdict.obstructions = null_cobordance_obstructions(g);
  if (!verdict.obstructions.all_pass()) {
    verdict.kind = Cobordance::not_cobordant;
    return verdict;
  }
  verdict.search = search_metaboliser(g, bound, jobs);
  switch (verdict.search.status) {
    case SearchStatus::found:
      if (!check_metaboliser(g, verdict.search.witness->basis).ok)
        throw Error("algebraically_cobordant: internal error, witness failed re-verification");
      verdict.kind = Cobordance::cobordant;
      verdict.witness = verdict.search.witness;
      break;
    case SearchStatus::impossible:
      verdict.kind = Cobordance::not_cobordant;
      break;
    case SearchStatus::not_found_within_bound:
      verdict.kind = Cobordance::unknown;
      break;
  }
  return verdict;
}

std::string to_string(Cobordance c) {
  switch (c) {
    case Cobordance::cobordant:
      return "cobordant";
    case Cobordance::not_cobordant:
      return "not-cobordant";
    case Cobordance::unknown:
      return "unknown-within-bound";
  }
  return "";
}

}  // namespace knotforms
