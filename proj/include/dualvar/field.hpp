#ifndef DUALVAR_FIELD_HPP
#define DUALVAR_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace dualvar {

/// Thrown on any contract violation (ring/field mismatch, bad input, ...).
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Field descriptor: p == 0 means the rationals, otherwise the prime field F_p.
struct Field {
  std::uint64_t p = 0;

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;

  std::string str() const { return p == 0 ? "Q" : "F_" + std::to_string(p); }
};

inline Field QQ() { return Field{0}; }
inline Field GF(std::uint64_t p) { return Field{p}; }

/// Default prime for all finite-field computations.
inline constexpr std::uint64_t kDefaultPrime = 32003;

namespace detail {

inline std::uint64_t mod_reduce(std::int64_t v, std::uint64_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw error("division by zero in F_" + std::to_string(p));
  return mod_pow(a, p - 2, p);
}

}  // namespace detail

/// Exact field scalar: a reduced arbitrary-precision rational or a residue in
/// [0, p).  Mixing fields in arithmetic is a hard error, never a coercion.
class Scalar {
 public:
  Scalar() : Scalar(QQ(), 0) {}

  Scalar(Field f, long v) : field_(f) {
    if (f.is_rational())
      rep_ = mpq_class(v);
    else
      rep_ = detail::mod_reduce(v, f.p);
  }

  static Scalar rational(mpq_class v) {
    Scalar s;
    v.canonicalize();
    s.field_ = QQ();
    s.rep_ = std::move(v);
    return s;
  }

  static Scalar residue(std::uint64_t p, std::uint64_t v) {
    Scalar s;
    s.field_ = GF(p);
    s.rep_ = v % p;
    return s;
  }

  static Scalar from_mpz(Field f, const mpz_class& z) {
    if (f.is_rational()) return rational(mpq_class(z));
    mpz_class r = z % static_cast<unsigned long>(f.p);
    if (r < 0) r += static_cast<unsigned long>(f.p);
    return residue(f.p, r.get_ui());
  }

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  Field field() const { return field_; }

  bool is_zero() const {
    if (field_.is_rational()) return rat() == 0;
    return res() == 0;
  }
  bool is_one() const {
    if (field_.is_rational()) return rat() == 1;
    return res() == 1;
  }

  const mpq_class& rat() const { return std::get<mpq_class>(rep_); }
  std::uint64_t res() const { return std::get<std::uint64_t>(rep_); }

  Scalar operator-() const {
    if (field_.is_rational()) return rational(-rat());
    return residue(field_.p, res() == 0 ? 0 : field_.p - res());
  }

  Scalar operator+(const Scalar& o) const {
    check(o);
    if (field_.is_rational()) return rational(rat() + o.rat());
    std::uint64_t s = res() + o.res();
    if (s >= field_.p) s -= field_.p;
    return residue(field_.p, s);
  }

  Scalar operator-(const Scalar& o) const {
    check(o);
    if (field_.is_rational()) return rational(rat() - o.rat());
    std::uint64_t s = res() + field_.p - o.res();
    if (s >= field_.p) s -= field_.p;
    return residue(field_.p, s);
  }

  Scalar operator*(const Scalar& o) const {
    check(o);
    if (field_.is_rational()) return rational(rat() * o.rat());
    return residue(field_.p, detail::mod_mul(res(), o.res(), field_.p));
  }

  Scalar inverse() const {
    if (is_zero()) throw error("inverse of zero");
    if (field_.is_rational()) return rational(1 / rat());
    return residue(field_.p, detail::mod_inv(res(), field_.p));
  }

  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    if (field_.is_rational()) return rat() == o.rat();
    return res() == o.res();
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// True for rationals with negative value; residues are never negative.
  bool is_negative() const { return field_.is_rational() && rat() < 0; }

  std::string str() const {
    if (field_.is_rational()) return rat().get_str();
    return std::to_string(res());
  }

 private:
  void check(const Scalar& o) const {
    if (field_ != o.field_)
      throw error("field mismatch: " + field_.str() + " vs " + o.field_.str());
  }

  Field field_;
  std::variant<std::uint64_t, mpq_class> rep_;
};

}  // namespace dualvar

#endif
