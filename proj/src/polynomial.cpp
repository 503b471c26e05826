#include "dualvar/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace dualvar {

namespace {

// Sort descending under the ring order, merge equal monomials, drop zeros.
void canonicalize(const Ring& ring, std::vector<Term>& ts) {
  std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
    return compare(a.m, b.m, ring.order) > 0;
  });
  std::vector<Term> out;
  out.reserve(ts.size());
  for (auto& t : ts) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  }
  ts = std::move(out);
}

}  // namespace

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.m.nvars() != ring->nvars()) throw error("monomial arity mismatch");
    if (t.c.field() != ring->field) throw error("coefficient field mismatch");
  }
  Polynomial p(ring);
  canonicalize(*ring, terms);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, Scalar c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
  if (i < 0 || i >= ring->nvars()) throw error("variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back({Monomial::var(ring->nvars(), i), Scalar::one(ring->field)});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Scalar c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

const Monomial& Polynomial::leading_monomial() const {
  if (is_zero()) throw error("leading monomial of zero polynomial");
  return terms_.front().m;
}

const Scalar& Polynomial::leading_coeff() const {
  if (is_zero()) throw error("leading coefficient of zero polynomial");
  return terms_.front().c;
}

std::uint32_t Polynomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::uint32_t d = terms_.front().m.degree();
  for (const auto& t : terms_)
    if (t.m.degree() != d) return false;
  if (ring_->grading_split) {
    auto bd = ring_->bidegree(terms_.front().m);
    for (const auto& t : terms_)
      if (ring_->bidegree(t.m) != bd) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> Polynomial::bidegree() const {
  if (terms_.empty()) return {0, 0};
  auto bd = ring_->bidegree(terms_.front().m);
  for (const auto& t : terms_)
    if (ring_->bidegree(t.m) != bd) throw error("polynomial not bihomogeneous");
  return bd;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.m, -t.c});
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = compare(terms_[i].m, o.terms_[j].m, ring_->order);
    if (c > 0) {
      p.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      p.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].c + o.terms_[j].c;
      if (!s.is_zero()) p.terms_.push_back({terms_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) p.terms_.push_back(o.terms_[j]);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc.push_back({a.m * b.m, a.c * b.c});
  return from_terms(ring_, std::move(acc));
}

Polynomial Polynomial::operator*(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.m, t.c * c});
  return p;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial r = constant(ring_, Scalar::one(ring_->field));
  Polynomial b = *this;
  while (e) {
    if (e & 1) r = r * b;
    if (e >>= 1) b = b * b;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_ || !o.ring_) return is_zero() && o.is_zero();
  if (!(*ring_ == *o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c)
      return false;
  return true;
}

Polynomial Polynomial::axpy(const Polynomial& f, const Scalar& c,
                            const Monomial& m, const Polynomial& g) {
  check_same_ring(f.ring_, g.ring_);
  Polynomial p(f.ring_);
  p.terms_.reserve(f.terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < f.terms_.size() && j < g.terms_.size()) {
    Monomial gm = g.terms_[j].m * m;
    int cmp = compare(f.terms_[i].m, gm, f.ring_->order);
    if (cmp > 0) {
      p.terms_.push_back(f.terms_[i++]);
    } else if (cmp < 0) {
      p.terms_.push_back({std::move(gm), -(c * g.terms_[j].c)});
      ++j;
    } else {
      Scalar s = f.terms_[i].c - c * g.terms_[j].c;
      if (!s.is_zero()) p.terms_.push_back({f.terms_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < f.terms_.size(); ++i) p.terms_.push_back(f.terms_[i]);
  for (; j < g.terms_.size(); ++j)
    p.terms_.push_back({g.terms_[j].m * m, -(c * g.terms_[j].c)});
  return p;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.c;
    if (first) {
      if (c.is_negative()) {
        os << "-";
        c = -c;
      }
    } else {
      if (c.is_negative()) {
        os << " - ";
        c = -c;
      } else {
        os << " + ";
      }
    }
    first = false;
    bool printed = false;
    if (!c.is_one() || t.m.is_one()) {
      os << c.str();
      printed = true;
    }
    for (int i = 0; i < t.m.nvars(); ++i) {
      if (t.m[i] == 0) continue;
      if (printed) os << "*";
      os << ring_->vars[i];
      if (t.m[i] > 1) os << "^" << t.m[i];
      printed = true;
    }
  }
  return os.str();
}

Scalar poly_eval(const Polynomial& f, const std::vector<Scalar>& point) {
  const Ring& R = *f.ring();
  if (static_cast<int>(point.size()) != R.nvars())
    throw error("point length does not match variable count");
  for (const auto& s : point)
    if (s.field() != R.field) throw error("point field mismatch");
  Scalar acc = Scalar::zero(R.field);
  for (const auto& t : f.terms()) {
    Scalar v = t.c;
    for (int i = 0; i < R.nvars(); ++i) {
      std::uint16_t e = t.m[i];
      if (e == 0) continue;
      Scalar p = point[i];
      Scalar pe = Scalar::one(R.field);
      while (e) {
        if (e & 1) pe *= p;
        if (e >>= 1) p *= p;
      }
      v *= pe;
    }
    acc += v;
  }
  return acc;
}

Polynomial poly_diff(const Polynomial& f, int var_index) {
  const Ring& R = *f.ring();
  if (var_index < 0 || var_index >= R.nvars())
    throw error("variable index out of range");
  std::vector<Term> ts;
  for (const auto& t : f.terms()) {
    std::uint16_t e = t.m[var_index];
    if (e == 0) continue;
    Scalar c = t.c * Scalar(R.field, e);
    if (c.is_zero()) continue;
    ts.push_back({t.m / Monomial::var(R.nvars(), var_index), std::move(c)});
  }
  return Polynomial::from_terms(f.ring(), std::move(ts));
}

Polynomial poly_subst(const Polynomial& f,
                      const std::vector<Polynomial>& assignment) {
  const Ring& R = *f.ring();
  if (static_cast<int>(assignment.size()) != R.nvars())
    throw error("assignment must cover all variables");
  RingPtr target = assignment.empty() ? f.ring() : assignment[0].ring();
  for (const auto& g : assignment) check_same_ring(target, g.ring());
  if (target->field != R.field) throw error("field mismatch in substitution");

  // Cache powers of each image up to the largest exponent used.
  std::vector<std::vector<Polynomial>> pows(R.nvars());
  auto power = [&](int i, std::uint16_t e) -> const Polynomial& {
    auto& cache = pows[i];
    if (cache.empty())
      cache.push_back(Polynomial::constant(target, Scalar::one(target->field)));
    while (cache.size() <= e) cache.push_back(cache.back() * assignment[i]);
    return cache[e];
  };

  Polynomial acc = Polynomial::zero(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.c);
    for (int i = 0; i < R.nvars(); ++i)
      if (t.m[i]) term = term * power(i, t.m[i]);
    acc = acc + term;
  }
  return acc;
}

Polynomial poly_subst(const Polynomial& f, const RingPtr& target_ring,
                      const std::map<std::string, Polynomial>& assignment) {
  const Ring& R = *f.ring();
  std::vector<Polynomial> images;
  images.reserve(R.nvars());
  for (int i = 0; i < R.nvars(); ++i) {
    auto it = assignment.find(R.vars[i]);
    if (it != assignment.end()) {
      images.push_back(it->second);
    } else {
      int j = target_ring->var_index(R.vars[i]);
      if (j < 0)
        throw error("variable " + R.vars[i] + " has no image in target ring");
      images.push_back(Polynomial::variable(target_ring, j));
    }
  }
  return poly_subst(f, images);
}

Polynomial normalize_generator(const Polynomial& f) {
  if (f.is_zero()) return f;
  const Field k = f.ring()->field;
  if (!k.is_rational()) return f * f.leading_coeff().inverse();
  // Clear denominators, divide by integer content, positive leading coeff.
  mpz_class den = 1;
  for (const auto& t : f.terms()) den = lcm(den, t.c.rat().get_den());
  mpz_class num = 0;
  for (const auto& t : f.terms()) {
    mpz_class z = t.c.rat().get_num() * (den / t.c.rat().get_den());
    num = gcd(num, z);
  }
  mpq_class scale(den, num);  // canonicalized below via Scalar::rational
  Scalar s = Scalar::rational(scale);
  if (f.leading_coeff().rat() < 0) s = -s;
  return f * s;
}

}  // namespace dualvar
