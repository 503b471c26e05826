#ifndef DUALVAR_MONOMIAL_HPP
#define DUALVAR_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "dualvar/field.hpp"

namespace dualvar {

/// Term order on monomials.  degrevlex is the default; block builds an
/// elimination order that splits the variable list at `block_split` and uses
/// degrevlex within each block.  Ties are broken deterministically through the
/// stored variable permutation (identity if empty).
struct MonomialOrder {
  enum class Kind { degrevlex, block };

  Kind kind = Kind::degrevlex;
  int block_split = 0;
  std::vector<int> perm;  // perm[i] = variable index at comparison slot i

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder block(int split) {
    MonomialOrder o;
    o.kind = Kind::block;
    o.block_split = split;
    return o;
  }

  bool operator==(const MonomialOrder&) const = default;
};

/// Exponent vector with cached total degree.  Entries are 16-bit; overflow in
/// a product is a hard error, not wraparound.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0), deg_(0) {}
  explicit Monomial(std::vector<std::uint16_t> e)
      : e_(std::move(e)),
        deg_(std::accumulate(e_.begin(), e_.end(), std::uint32_t{0})) {}

  static Monomial var(int nvars, int i, std::uint16_t k = 1) {
    Monomial m(nvars);
    m.e_[i] = k;
    m.deg_ = k;
    return m;
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  std::uint16_t operator[](int i) const { return e_[i]; }
  std::uint32_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) {
      std::uint32_t s = std::uint32_t(r.e_[i]) + o.e_[i];
      if (s > 0xFFFF) throw error("monomial exponent overflow");
      r.e_[i] = static_cast<std::uint16_t>(s);
    }
    r.deg_ = deg_ + o.deg_;
    return r;
  }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// Quotient this / o; caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const {
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) r.e_[i] -= o.e_[i];
    r.deg_ = deg_ - o.deg_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    std::uint32_t d = 0;
    for (int i = 0; i < a.nvars(); ++i) {
      r.e_[i] = std::max(a.e_[i], b.e_[i]);
      d += r.e_[i];
    }
    r.deg_ = d;
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
      if (a.e_[i] && b.e_[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  /// Degree of the sub-vector of variables [lo, hi).
  std::uint32_t degree_in(int lo, int hi) const {
    std::uint32_t d = 0;
    for (int i = lo; i < hi; ++i) d += e_[i];
    return d;
  }

 private:
  std::vector<std::uint16_t> e_;
  std::uint32_t deg_ = 0;
};

/// Three-way comparison of monomials under an order: negative if a < b,
/// zero if equal, positive if a > b.
inline int compare(const Monomial& a, const Monomial& b,
                   const MonomialOrder& ord) {
  auto slot = [&](int i) { return ord.perm.empty() ? i : ord.perm[i]; };
  int n = a.nvars();
  // degrevlex on slots [lo, hi): higher degree wins, ties broken by the last
  // differing exponent, smaller exponent winning.
  auto drl = [&](int lo, int hi) -> int {
    std::uint32_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a[slot(i)];
      db += b[slot(i)];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
      std::uint16_t ea = a[slot(i)], eb = b[slot(i)];
      if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
  };
  if (ord.kind == MonomialOrder::Kind::degrevlex) return drl(0, n);
  int c = drl(0, ord.block_split);
  if (c != 0) return c;
  return drl(ord.block_split, n);
}

}  // namespace dualvar

#endif
