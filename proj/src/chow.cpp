#include "dualvar/chow.hpp"

#include <sstream>

namespace dualvar::chow {

const std::vector<long long>& ChowRing::product(int ca, int i, int cb,
                                                int j) const {
  if (ca + cb > dim_) return empty_;
  return table_[ca][cb][i][j];
}

void ChowRing::validate() const {
  // Table completeness and commutativity.
  for (int ca = 0; ca <= dim_; ++ca)
    for (int cb = 0; ca + cb <= dim_; ++cb)
      for (int i = 0; i < basis_size(ca); ++i)
        for (int j = 0; j < basis_size(cb); ++j) {
          const auto& p = product(ca, i, cb, j);
          if (static_cast<int>(p.size()) != basis_size(ca + cb))
            throw error(name_ + ": incomplete product table at codim " +
                        std::to_string(ca) + "," + std::to_string(cb));
          if (p != product(cb, j, ca, i))
            throw error(name_ + ": product table not commutative");
        }
  if (static_cast<int>(integral_.size()) != basis_size(dim_))
    throw error(name_ + ": integration functional size mismatch");
  bool nonzero = false;
  for (long long v : integral_)
    if (v != 0) nonzero = true;
  if (!nonzero) throw error(name_ + ": integration vanishes");

  // Associativity on all basis triples.
  auto self = const_cast<ChowRing*>(this)->shared_from_this();
  for (int ca = 0; ca <= dim_; ++ca)
    for (int cb = 0; cb <= dim_; ++cb)
      for (int cc = 0; cc <= dim_; ++cc) {
        if (ca + cb + cc > dim_ + dim_) continue;
        for (int i = 0; i < basis_size(ca); ++i)
          for (int j = 0; j < basis_size(cb); ++j)
            for (int k = 0; k < basis_size(cc); ++k) {
              ChowClass A = ChowClass::basis(self, ca, i);
              ChowClass B = ChowClass::basis(self, cb, j);
              ChowClass C = ChowClass::basis(self, cc, k);
              if (!((A * B) * C == A * (B * C)))
                throw error(name_ + ": product not associative");
            }
      }
}

ChowRing::Builder::Builder(std::string name, int dim)
    : r_(std::make_shared<ChowRing>()) {
  r_->name_ = std::move(name);
  r_->dim_ = dim;
  r_->basis_.assign(dim + 1, {});
  r_->basis_[0] = {"1"};
  r_->table_.assign(dim + 1, {});
}

ChowRing::Builder& ChowRing::Builder::basis(int codim,
                                            std::vector<std::string> labels) {
  r_->basis_[codim] = std::move(labels);
  return *this;
}

ChowRing::Builder& ChowRing::Builder::product(int ca, int i, int cb, int j,
                                              std::vector<long long> coeffs) {
  auto& T = r_->table_;
  auto ensure = [&](int a, int b) -> auto& {
    auto& ta = T[a];
    if (ta.empty()) ta.assign(r_->dim_ + 1, {});
    auto& tb = ta[b];
    if (tb.empty())
      tb.assign(r_->basis_size(a),
                std::vector<std::vector<long long>>(r_->basis_size(b)));
    return tb;
  };
  ensure(ca, cb)[i][j] = coeffs;
  ensure(cb, ca)[j][i] = std::move(coeffs);
  return *this;
}

ChowRing::Builder& ChowRing::Builder::integral(std::vector<long long> values) {
  r_->integral_ = std::move(values);
  return *this;
}

ChowRingPtr ChowRing::Builder::build() {
  // Unit products are implicit.
  int d = r_->dim_;
  for (int c = 0; c <= d; ++c)
    for (int i = 0; i < r_->basis_size(c); ++i) {
      std::vector<long long> e(r_->basis_size(c), 0);
      e[i] = 1;
      product(0, 0, c, i, e);
    }
  r_->validate();
  return r_;
}

ChowClass ChowClass::zero(ChowRingPtr ring, int codim) {
  ChowClass c;
  c.codim = codim;
  c.coeff.assign(ring->basis_size(codim), 0);
  c.ring = std::move(ring);
  return c;
}

ChowClass ChowClass::unit(ChowRingPtr ring) {
  ChowClass c = zero(std::move(ring), 0);
  c.coeff[0] = 1;
  return c;
}

ChowClass ChowClass::basis(ChowRingPtr ring, int codim, int i) {
  ChowClass c = zero(std::move(ring), codim);
  c.coeff[i] = 1;
  return c;
}

bool ChowClass::is_zero() const {
  for (long long v : coeff)
    if (v != 0) return false;
  return true;
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
  if (codim != o.codim) throw error("codimension mismatch in class sum");
  ChowClass r = *this;
  for (std::size_t i = 0; i < coeff.size(); ++i) r.coeff[i] += o.coeff[i];
  return r;
}

ChowClass ChowClass::operator-(const ChowClass& o) const {
  return *this + (o * -1);
}

ChowClass ChowClass::operator*(long long k) const {
  ChowClass r = *this;
  for (auto& v : r.coeff) v *= k;
  return r;
}

ChowClass ChowClass::operator*(const ChowClass& o) const {
  ChowClass r = zero(ring, codim + o.codim);
  if (codim + o.codim > ring->dim()) return r;
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    if (coeff[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeff.size(); ++j) {
      if (o.coeff[j] == 0) continue;
      const auto& p = ring->product(codim, static_cast<int>(i), o.codim,
                                    static_cast<int>(j));
      long long k = coeff[i] * o.coeff[j];
      for (std::size_t t = 0; t < p.size(); ++t) r.coeff[t] += k * p[t];
    }
  }
  return r;
}

bool ChowClass::operator==(const ChowClass& o) const {
  if (codim != o.codim) return false;
  if (coeff == o.coeff) return true;
  return is_zero() && o.is_zero();
}

long long ChowClass::integrate() const {
  if (codim != ring->dim()) throw error("integration needs top codimension");
  long long v = 0;
  for (std::size_t i = 0; i < coeff.size(); ++i)
    v += coeff[i] * ring->integral(static_cast<int>(i));
  return v;
}

std::string ChowClass::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    if (coeff[i] == 0) continue;
    long long v = coeff[i];
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    long long a = v < 0 ? -v : v;
    if (a != 1) os << a << "*";
    os << ring->label(codim, static_cast<int>(i));
  }
  return os.str();
}

const ChowClass& ChernPoly::at(int i) const {
  static const ChowClass dummy;
  if (i >= 0 && i < static_cast<int>(c.size())) return c[i];
  throw error("chern index out of range");
}

bool ChernPoly::operator==(const ChernPoly& o) const {
  if (rank != o.rank || c.size() != o.c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!(c[i] == o.c[i])) return false;
  return true;
}

std::string ChernPoly::str() const {
  std::ostringstream os;
  os << "1";
  for (std::size_t i = 1; i < c.size(); ++i)
    os << " + (" << c[i].str() << ")t^" << i;
  return os.str();
}

ChernPoly chern_trivial(ChowRingPtr ring, int rank) {
  ChernPoly p;
  p.rank = rank;
  int top = std::min(rank, ring->dim());
  p.c.push_back(ChowClass::unit(ring));
  for (int i = 1; i <= top; ++i) p.c.push_back(ChowClass::zero(ring, i));
  p.ring = std::move(ring);
  return p;
}

ChernPoly chern_line(const ChowClass& c1) {
  if (c1.codim != 1) throw error("line bundle class must have codimension 1");
  ChernPoly p = chern_trivial(c1.ring, 1);
  if (c1.ring->dim() >= 1) p.c[1] = c1;
  return p;
}

ChernPoly chern_whitney(const ChernPoly& a, const ChernPoly& b) {
  if (a.ring != b.ring) throw error("ring mismatch in Whitney product");
  ChernPoly p = chern_trivial(a.ring, a.rank + b.rank);
  for (std::size_t k = 1; k < p.c.size(); ++k) {
    ChowClass acc = ChowClass::zero(a.ring, static_cast<int>(k));
    for (std::size_t i = 0; i <= k; ++i) {
      if (i >= a.c.size() || k - i >= b.c.size()) continue;
      acc = acc + a.c[i] * b.c[k - i];
    }
    p.c[k] = acc;
  }
  return p;
}

ChernPoly chern_dual(const ChernPoly& a) {
  ChernPoly p = a;
  for (std::size_t i = 1; i < p.c.size(); i += 2) p.c[i] = -p.c[i];
  return p;
}

ChernPoly chern_twist(const ChernPoly& a, const ChowClass& line_c1) {
  if (line_c1.codim != 1) throw error("twist class must have codimension 1");
  ChernPoly p = chern_trivial(a.ring, a.rank);
  // Powers of the twisting class.
  std::vector<ChowClass> pw = {ChowClass::unit(a.ring)};
  for (int i = 1; i <= a.ring->dim(); ++i) pw.push_back(pw.back() * line_c1);
  auto binom = [](long long n, long long k) -> long long {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (long long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
  };
  for (std::size_t k = 1; k < p.c.size(); ++k) {
    ChowClass acc = ChowClass::zero(a.ring, static_cast<int>(k));
    for (std::size_t i = 0; i <= k && i < a.c.size(); ++i)
      acc = acc + (a.c[i] * pw[k - i]) * binom(a.rank - static_cast<long long>(i),
                                               static_cast<long long>(k - i));
    p.c[k] = acc;
  }
  return p;
}

std::vector<ChowClass> segre_series(const ChernPoly& a) {
  int d = a.ring->dim();
  std::vector<ChowClass> s;
  s.push_back(ChowClass::unit(a.ring));
  for (int k = 1; k <= d; ++k) {
    ChowClass acc = ChowClass::zero(a.ring, k);
    for (int i = 1; i <= k && i < static_cast<int>(a.c.size()); ++i)
      acc = acc - a.c[i] * s[k - i];
    s.push_back(acc);
  }
  return s;
}

ChernPoly chern_tangent_twist(const ChowClass& hyperplane, int rank) {
  ChernPoly p = chern_trivial(hyperplane.ring, rank);
  ChowClass pw = ChowClass::unit(hyperplane.ring);
  for (std::size_t k = 1; k < p.c.size(); ++k) {
    pw = pw * hyperplane;
    p.c[k] = pw;
  }
  return p;
}

long long pushforward_degree(const BundleSpec& b) {
  auto s = segre_series(chern_dual(b.dual_chern));
  return s[b.base->dim()].integrate();
}

CanonicalClass canonical_class(const BundleSpec& b, const ChowClass& minus_KS) {
  if (minus_KS.codim != 1) throw error("-K class must have codimension 1");
  CanonicalClass r;
  r.taut_coeff = b.rank;
  r.base_class = chern_dual(b.dual_chern).at(1) + minus_KS;
  return r;
}

ChowRingPtr projective_space(int n) {
  ChowRing::Builder bld("P" + std::to_string(n), n);
  for (int k = 1; k <= n; ++k)
    bld.basis(k, {k == 1 ? "h" : "h^" + std::to_string(k)});
  for (int a = 1; a <= n; ++a)
    for (int b = a; a + b <= n; ++b) bld.product(a, 0, b, 0, {1});
  bld.integral({1});
  return bld.build();
}

ChowRingPtr b5_ring() {
  ChowRing::Builder bld("B5", 3);
  bld.basis(1, {"H"}).basis(2, {"l"}).basis(3, {"pt"});
  bld.product(1, 0, 1, 0, {5});   // H.H = 5l
  bld.product(1, 0, 2, 0, {1});   // H.l = pt
  bld.integral({1});
  return bld.build();
}

ChowRingPtr q3_ring() {
  ChowRing::Builder bld("Q3", 3);
  bld.basis(1, {"h"}).basis(2, {"l"}).basis(3, {"pt"});
  bld.product(1, 0, 1, 0, {2});   // h.h = 2l
  bld.product(1, 0, 2, 0, {1});   // h.l = pt
  bld.integral({1});
  return bld.build();
}

ChowRingPtr b6_ring() {
  ChowRing::Builder bld("B6", 3);
  bld.basis(1, {"h1", "h2"}).basis(2, {"h1^2", "h1h2"}).basis(3, {"pt"});
  bld.product(1, 0, 1, 0, {1, 0});    // h1.h1 = h1^2
  bld.product(1, 0, 1, 1, {0, 1});    // h1.h2 = h1h2
  bld.product(1, 1, 1, 1, {-1, 1});   // h2.h2 = h1h2 - h1^2
  bld.product(1, 0, 2, 0, {0});       // h1.h1^2 = 0
  bld.product(1, 0, 2, 1, {1});       // h1.h1h2 = pt
  bld.product(1, 1, 2, 0, {1});       // h2.h1^2 = pt
  bld.product(1, 1, 2, 1, {1});       // h2.h1h2 = pt
  bld.integral({1});
  return bld.build();
}

ChowRingPtr ac_hat_ring() {
  // Generators cA (polarization pullback) and Fa (blow-up exceptional class);
  // the codim-3 class al is the pullback of a line.  The degree-4 monomial
  // table is cA^4 = 5, cA^3 Fa = 0, cA^2 Fa^2 = -1, cA Fa^3 = 0, Fa^4 = 2,
  // with al.cA = 1, al.Fa = 0.
  ChowRing::Builder bld("AC_hat", 4);
  bld.basis(1, {"cA", "Fa"})
      .basis(2, {"cA^2", "cAFa", "Fa^2"})
      .basis(3, {"cA^3", "cA^2Fa", "cAFa^2", "Fa^3", "al"})
      .basis(4, {"pt"});
  // codim 1 x 1
  bld.product(1, 0, 1, 0, {1, 0, 0});
  bld.product(1, 0, 1, 1, {0, 1, 0});
  bld.product(1, 1, 1, 1, {0, 0, 1});
  // codim 1 x 2 (monomial bookkeeping)
  bld.product(1, 0, 2, 0, {1, 0, 0, 0, 0});
  bld.product(1, 0, 2, 1, {0, 1, 0, 0, 0});
  bld.product(1, 0, 2, 2, {0, 0, 1, 0, 0});
  bld.product(1, 1, 2, 0, {0, 1, 0, 0, 0});
  bld.product(1, 1, 2, 1, {0, 0, 1, 0, 0});
  bld.product(1, 1, 2, 2, {0, 0, 0, 1, 0});
  // codim 1 x 3 via the degree-4 table
  bld.product(1, 0, 3, 0, {5});
  bld.product(1, 0, 3, 1, {0});
  bld.product(1, 0, 3, 2, {-1});
  bld.product(1, 0, 3, 3, {0});
  bld.product(1, 0, 3, 4, {1});
  bld.product(1, 1, 3, 0, {0});
  bld.product(1, 1, 3, 1, {-1});
  bld.product(1, 1, 3, 2, {0});
  bld.product(1, 1, 3, 3, {2});
  bld.product(1, 1, 3, 4, {0});
  // codim 2 x 2
  bld.product(2, 0, 2, 0, {5});
  bld.product(2, 0, 2, 1, {0});
  bld.product(2, 0, 2, 2, {-1});
  bld.product(2, 1, 2, 1, {-1});
  bld.product(2, 1, 2, 2, {0});
  bld.product(2, 2, 2, 2, {2});
  bld.integral({1});
  return bld.build();
}

}  // namespace dualvar::chow
