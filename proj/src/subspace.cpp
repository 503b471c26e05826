#include "dualvar/subspace.hpp"

#include <algorithm>

#include "dualvar/rng.hpp"

namespace dualvar {

namespace {

// Scale a rational row to integer entries with content 1.
void make_integral(std::vector<Scalar>& row) {
  mpz_class den = 1;
  for (const auto& s : row) den = lcm(den, s.rat().get_den());
  mpz_class content = 0;
  for (const auto& s : row)
    content = gcd(content, mpz_class(s.rat().get_num() * (den / s.rat().get_den())));
  if (content == 0) return;
  for (auto& s : row)
    s = Scalar::rational(s.rat() * mpq_class(den, content));
}

}  // namespace

Matrix rref(Matrix m, Field field) {
  const int nrows = static_cast<int>(m.size());
  if (nrows == 0) return m;
  const int ncols = static_cast<int>(m[0].size());
  const bool rational = field.is_rational();

  if (rational)
    for (auto& row : m) make_integral(row);

  // Forward elimination.  Over Q this is Bareiss: every division below is
  // exact, keeping intermediate entries integral.
  std::vector<int> pivot_col;
  Scalar prev = Scalar::one(field);
  int r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int piv = -1;
    for (int i = r; i < nrows; ++i)
      if (!m[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = r + 1; i < nrows; ++i) {
      if (rational) {
        for (int j = c + 1; j < ncols; ++j) {
          mpq_class v = (m[i][j].rat() * m[r][c].rat() -
                         m[i][c].rat() * m[r][j].rat()) /
                        prev.rat();
          m[i][j] = Scalar::rational(v);
        }
        m[i][c] = Scalar::zero(field);
      } else {
        if (m[i][c].is_zero()) continue;
        Scalar f = m[i][c] / m[r][c];
        for (int j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
      }
    }
    if (rational) prev = m[r][c];
    pivot_col.push_back(c);
    ++r;
  }
  m.resize(r);

  // Normalization: unit pivots, zeros above.
  for (int i = r - 1; i >= 0; --i) {
    int c = pivot_col[i];
    Scalar inv = m[i][c].inverse();
    for (int j = c; j < ncols; ++j) m[i][j] *= inv;
    for (int k = 0; k < i; ++k) {
      if (m[k][c].is_zero()) continue;
      Scalar f = m[k][c];
      for (int j = c; j < ncols; ++j) m[k][j] -= f * m[i][j];
    }
  }
  return m;
}

int matrix_rank(Matrix m, Field field) {
  return static_cast<int>(rref(std::move(m), field).size());
}

Matrix kernel_basis(const Matrix& m, int ncols, Field field) {
  Matrix red = rref(m, field);
  std::vector<int> pivots;
  std::vector<bool> is_pivot(ncols, false);
  for (const auto& row : red) {
    int c = 0;
    while (c < ncols && row[c].is_zero()) ++c;
    pivots.push_back(c);
    is_pivot[c] = true;
  }
  Matrix ker;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(ncols, Scalar::zero(field));
    v[f] = Scalar::one(field);
    for (std::size_t i = 0; i < red.size(); ++i) v[pivots[i]] = -red[i][f];
    ker.push_back(std::move(v));
  }
  return rref(std::move(ker), field);
}

Subspace Subspace::from_rows(int ambient, Field field, Matrix rows) {
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != ambient)
      throw error("row length does not match ambient dimension");
    for (const auto& s : row)
      if (s.field() != field) throw error("row field mismatch");
  }
  Subspace sp(ambient, field);
  sp.rows_ = rref(std::move(rows), field);
  return sp;
}

Subspace Subspace::full(int ambient, Field field) {
  Matrix rows;
  for (int i = 0; i < ambient; ++i) {
    std::vector<Scalar> v(ambient, Scalar::zero(field));
    v[i] = Scalar::one(field);
    rows.push_back(std::move(v));
  }
  return from_rows(ambient, field, std::move(rows));
}

Subspace Subspace::annihilator() const {
  Subspace sp(ambient_, field_);
  sp.rows_ = kernel_basis(rows_, ambient_, field_);
  return sp;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  Matrix m = rows_;
  m.push_back(v);
  return matrix_rank(std::move(m), field_) == dim();
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && field_ == o.field_ && rows_ == o.rows_;
}

int intersect_dim(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || a.field() != b.field())
    throw error("ambient mismatch in intersection");
  Matrix m = a.basis();
  for (const auto& row : b.basis()) m.push_back(row);
  int joint = matrix_rank(std::move(m), a.field());
  return a.dim() + b.dim() - joint;
}

Lemma22Result lemma22_verify(const Subspace& E_s, const Subspace& Lambda) {
  if (E_s.ambient() != Lambda.ambient())
    throw error("ambient mismatch in duality check");
  Lemma22Result r;
  r.lhs = intersect_dim(E_s, Lambda.annihilator());
  r.rhs = intersect_dim(E_s.annihilator(), Lambda) + E_s.dim() - Lambda.dim();
  r.holds = (r.lhs == r.rhs);
  return r;
}

std::map<int, int> jump_histogram(
    const std::function<Subspace(std::uint64_t)>& fiber_at,
    const Subspace& Lambda, int N, std::uint64_t seed) {
  std::map<int, int> hist;
  Subspace perp = Lambda.annihilator();
  for (int i = 0; i < N; ++i) {
    Subspace E = fiber_at(derive_seed(seed, static_cast<std::uint64_t>(i)));
    ++hist[intersect_dim(E, perp)];
  }
  return hist;
}

}  // namespace dualvar
