#ifndef DUALVAR_SUBSPACE_HPP
#define DUALVAR_SUBSPACE_HPP

#include <functional>
#include <map>

#include "dualvar/field.hpp"

namespace dualvar {

using Matrix = std::vector<std::vector<Scalar>>;

/// Canonical reduced row echelon form; zero rows dropped.  Over Q the forward
/// elimination is fraction-free (Bareiss) on content-free integer rows, with
/// pivots normalized afterwards.
Matrix rref(Matrix m, Field field);

int matrix_rank(Matrix m, Field field);

/// Canonical basis of { x : m x = 0 } as rows.
Matrix kernel_basis(const Matrix& m, int ncols, Field field);

/// Exact subspace of F^n held as a row-reduced basis matrix; the RREF rows
/// are the canonical representative, so equal subspaces compare equal.
class Subspace {
 public:
  Subspace() : Subspace(0, QQ()) {}
  Subspace(int ambient, Field field) : ambient_(ambient), field_(field) {}

  static Subspace from_rows(int ambient, Field field, Matrix rows);
  static Subspace zero(int ambient, Field field) {
    return Subspace(ambient, field);
  }
  static Subspace full(int ambient, Field field);

  int ambient() const { return ambient_; }
  Field field() const { return field_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const Matrix& basis() const { return rows_; }

  /// { f in the dual space : <f, v> = 0 for all v here }, in coordinates the
  /// kernel of the basis matrix.  dim(ann) = ambient - dim.
  Subspace annihilator() const;

  bool contains(const std::vector<Scalar>& v) const;

  bool operator==(const Subspace& o) const;

 private:
  int ambient_;
  Field field_;
  Matrix rows_;
};

int intersect_dim(const Subspace& a, const Subspace& b);

struct Lemma22Result {
  int lhs = 0;   // dim(E_s cap ann(Lambda))
  int rhs = 0;   // dim(ann(E_s) cap Lambda) + dim E_s - dim Lambda
  bool holds = false;
};

/// dim(E_s cap Lambda^perp) = dim(E_s^perp cap Lambda) + r - l, for E_s in V
/// and Lambda in V* of the same ambient dimension.
Lemma22Result lemma22_verify(const Subspace& E_s, const Subspace& Lambda);

/// Histogram of dim(E_s cap Lambda^perp) over N sampled fibers; sample i
/// receives the derived seed (seed, i), so the histogram is reproducible.
std::map<int, int> jump_histogram(
    const std::function<Subspace(std::uint64_t)>& fiber_at,
    const Subspace& Lambda, int N, std::uint64_t seed);

}  // namespace dualvar

#endif
