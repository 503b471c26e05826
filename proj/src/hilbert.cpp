#include "dualvar/hilbert.hpp"

#include <algorithm>
#include <numeric>

namespace dualvar {

namespace {

using ZPoly = std::vector<mpz_class>;  // coefficients in t, constant first

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void zp_add_shifted(ZPoly& a, const ZPoly& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] += b[j];
}

mpz_class zp_at_one(const ZPoly& a) {
  return std::accumulate(a.begin(), a.end(), mpz_class(0));
}

// Keep only monomials not strictly divisible by another in the list.
void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) {
              return a.degree() < b.degree();
            });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool covered = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(m);
  }
  gens = std::move(out);
}

ZPoly numerator_rec(std::vector<Monomial> gens, int nvars) {
  minimalize(gens);
  if (gens.empty()) return {1};
  for (const auto& m : gens)
    if (m.degree() == 0) return {0};

  // Pure powers of distinct variables: complete intersection.
  bool pure = true;
  for (const auto& m : gens) {
    int active = 0;
    for (int i = 0; i < nvars; ++i)
      if (m[i]) ++active;
    if (active > 1) {
      pure = false;
      break;
    }
  }
  if (pure) {
    ZPoly r = {1};
    for (const auto& m : gens) {
      ZPoly f(m.degree() + 1, 0);
      f[0] = 1;
      f[m.degree()] = -1;
      r = zp_mul(r, f);
    }
    return r;
  }

  // Split generators with disjoint variable support: numerators multiply.
  {
    std::vector<int> comp(nvars, -1);
    int ncomp = 0;
    std::vector<int> stack;
    for (int v = 0; v < nvars; ++v) {
      if (comp[v] >= 0) continue;
      comp[v] = ncomp;
      stack.push_back(v);
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& m : gens) {
          if (!m[u]) continue;
          for (int w = 0; w < nvars; ++w)
            if (m[w] && comp[w] < 0) {
              comp[w] = ncomp;
              stack.push_back(w);
            }
        }
      }
      ++ncomp;
    }
    if (ncomp > 1) {
      bool split_useful = false;
      std::vector<std::vector<Monomial>> parts(ncomp);
      for (const auto& m : gens) {
        int c = -1;
        for (int v = 0; v < nvars; ++v)
          if (m[v]) {
            c = comp[v];
            break;
          }
        parts[c].push_back(m);
      }
      for (const auto& p : parts)
        if (!p.empty() && p.size() < gens.size()) split_useful = true;
      if (split_useful) {
        ZPoly r = {1};
        for (const auto& p : parts)
          if (!p.empty()) r = zp_mul(r, numerator_rec(p, nvars));
        return r;
      }
    }
  }

  // Pivot on the most frequent variable x:
  //   N(I) = N(I + (x)) + t * N(I : x).
  int best = 0, best_count = -1;
  for (int v = 0; v < nvars; ++v) {
    int cnt = 0;
    for (const auto& m : gens)
      if (m[v]) ++cnt;
    if (cnt > best_count) {
      best_count = cnt;
      best = v;
    }
  }
  std::vector<Monomial> plus, colon;
  plus.push_back(Monomial::var(nvars, best));
  Monomial xv = Monomial::var(nvars, best);
  for (const auto& m : gens) {
    if (m[best] == 0) plus.push_back(m);
    colon.push_back(m[best] ? m / xv : m);
  }
  ZPoly r = numerator_rec(std::move(plus), nvars);
  zp_add_shifted(r, numerator_rec(std::move(colon), nvars), 1);
  return r;
}

}  // namespace

std::vector<mpz_class> hilbert_numerator(std::vector<Monomial> gens,
                                         int nvars) {
  return numerator_rec(std::move(gens), nvars);
}

HilbertData hilbert_data(const GroebnerBasis& gb) {
  HilbertData hd;
  hd.nvars = gb.ring->nvars();
  std::vector<Monomial> lts;
  for (const auto& g : gb.gens) {
    lts.push_back(g.leading_monomial());
    if (g.degree() == 1) ++hd.span_defect;
  }
  hd.numerator = hilbert_numerator(std::move(lts), hd.nvars);

  // Cancel (1-t) factors: if N(1) = 0 then N = (1-t) Q with Q as prefix sums.
  ZPoly q = hd.numerator;
  int cancelled = 0;
  while (zp_at_one(q) == 0 && q.size() > 1) {
    ZPoly next(q.size() - 1, 0);
    mpz_class acc = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      acc += q[i];
      next[i] = acc;
    }
    q = std::move(next);
    ++cancelled;
  }
  if (q.size() == 1 && q[0] == 0) {
    // Zero series: quotient is zero (cannot happen for proper homogeneous
    // ideals, kept for safety).
    hd.reduced = {0};
    hd.cone_dim = 0;
    hd.proj_dim = -1;
    hd.degree = 0;
    return hd;
  }
  hd.reduced = q;
  hd.cone_dim = hd.nvars - cancelled;
  hd.proj_dim = hd.cone_dim - 1;
  hd.degree = zp_at_one(q);

  // Hilbert polynomial: HP(m) = sum_i q_i * C(m - i + d - 1, d - 1).
  int d = hd.cone_dim;
  if (d > 0) {
    std::vector<mpq_class> hp(d, mpq_class(0));
    mpz_class fact = 1;
    for (int j = 1; j < d; ++j) fact *= j;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      // Expand prod_{j=1}^{d-1} (m + (j - i)) as a polynomial in m.
      std::vector<mpz_class> poly = {1};
      for (int j = 1; j < d; ++j) {
        std::vector<mpz_class> nxt(poly.size() + 1, 0);
        mpz_class cst = mpz_class(j) - mpz_class(static_cast<long>(i));
        for (std::size_t k = 0; k < poly.size(); ++k) {
          nxt[k + 1] += poly[k];
          nxt[k] += poly[k] * cst;
        }
        poly = std::move(nxt);
      }
      for (std::size_t k = 0; k < poly.size(); ++k)
        hp[k] += mpq_class(q[i] * poly[k], fact);
    }
    for (auto& c : hp) c.canonicalize();
    hd.hilbert_poly = std::move(hp);
  }
  return hd;
}

mpz_class hilbert_function(const HilbertData& hd, int d) {
  // Expand numerator / (1-t)^nvars up to degree d by repeated prefix sums.
  std::vector<mpz_class> s(hd.numerator);
  s.resize(std::max<std::size_t>(s.size(), d + 1), 0);
  for (int k = 0; k < hd.nvars; ++k)
    for (std::size_t i = 1; i <= static_cast<std::size_t>(d); ++i)
      s[i] += s[i - 1];
  return s[d];
}

mpq_class hilbert_poly_value(const HilbertData& hd, long t) {
  mpq_class v(0);
  mpq_class pw(1);
  for (const auto& c : hd.hilbert_poly) {
    v += c * pw;
    pw *= t;
  }
  return v;
}

}  // namespace dualvar
