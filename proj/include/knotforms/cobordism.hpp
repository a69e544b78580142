#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotforms/laurent.hpp"
#include "knotforms/matrix.hpp"

namespace knotforms {

/// Bilinear form A whose symmetrization A + eps A^T is unimodular.
class EpsForm {
 public:
  EpsForm() = default;
  const IntMatrix& matrix() const { return a_; }
  int eps() const { return eps_; }
  std::size_t rank() const { return a_.rows(); }
  IntMatrix symmetrization() const;

 private:
  friend EpsForm validate_eps_form(IntMatrix a, int eps);
  IntMatrix a_;
  int eps_ = -1;
};

class InvalidFormError : public Error {
 public:
  using Error::Error;
};

/// Throws InvalidFormError when |det(A + eps A^T)| != 1, naming the determinant.
EpsForm validate_eps_form(IntMatrix a, int eps);

/// A1 (+) -A2; requires equal eps.
EpsForm orthogonal_difference(const EpsForm& f1, const EpsForm& f2);

using IntVector = std::vector<Integer>;

/// Basis of a half-rank pure sublattice on which the form vanishes.
struct Metaboliser {
  std::vector<IntVector> basis;
  /// Basis vectors as columns.
  IntMatrix basis_matrix() const;
};

struct MetaboliserCheck {
  bool ok = false;
  std::string reason;
};

/// Half rank, pure (Smith invariants of the basis all 1) and B^T A B = 0.
MetaboliserCheck check_metaboliser(const EpsForm& f, const std::vector<IntVector>& basis);
bool is_metaboliser(const EpsForm& f, const std::vector<IntVector>& basis);

/// impossible: no metaboliser can exist (odd rank, or eps = +1 with nonzero
/// signature), independently of the bound.
enum class SearchStatus { found, not_found_within_bound, impossible };

struct SearchResult {
  SearchStatus status = SearchStatus::not_found_within_bound;
  std::optional<Metaboliser> witness;
  std::uint64_t candidates = 0;  // complete bases examined
};

/// Bounded search over half-rank sublattices written in row Hermite normal
/// form: pivot columns increase, pivots lie in [1, bound], entries above a
/// pivot lie in [0, pivot), every other entry in [-bound, bound].
///
/// Order: rows are chosen top to bottom; within a row, pivot column
/// ascending, then pivot value ascending, then the entries right of the pivot
/// as an odometer whose last position turns fastest over 0, 1, -1, 2, -2, ...
/// The first basis in that order is returned. A form that visibly splits as
/// X (+) -X is answered by its diagonal before enumeration starts.
///
/// With jobs > 1 the first-row candidates are shared among threads; the
/// witness with the smallest position in the order still wins.
SearchResult search_metaboliser(const EpsForm& f, int bound, int jobs = 1);

struct ObstructionCheck {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::string certificate;
};

struct ObstructionReport {
  std::vector<ObstructionCheck> checks;
  bool all_pass() const;
  /// First failing check, if any.
  const ObstructionCheck* first_failure() const;
};

/// Necessary conditions for null-cobordance: even rank, zero signature
/// (eps = +1), Fox-Milnor, zero KARL invariant (eps = -1).
ObstructionReport null_cobordance_obstructions(const EpsForm& f);

struct FoxMilnorResult {
  bool holds = false;
  std::string reason;
};

/// Whether p = Q(t) Q(t^-1) up to units, decided on the factorization over Z.
FoxMilnorResult fox_milnor_detail(const LaurentPolynomial& p);
bool fox_milnor(const LaurentPolynomial& p);

enum class Cobordance { cobordant, not_cobordant, unknown };

struct CobordanceVerdict {
  Cobordance kind = Cobordance::unknown;
  std::optional<Metaboliser> witness;  // in coordinates of A1 (+) -A2
  ObstructionReport obstructions;
  SearchResult search;
};

CobordanceVerdict algebraically_cobordant(const EpsForm& f1, const EpsForm& f2, int bound, int jobs = 1);

std::string to_string(Cobordance c);

}  // namespace knotforms
