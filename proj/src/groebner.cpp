#include "dualvar/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "dualvar/rng.hpp"
#include "dualvar/subspace.hpp"

namespace dualvar {

namespace {

// Full remainder of f against the reducers: no term of the result is
// divisible by a leading monomial of gens.
Polynomial reduce_full(Polynomial f, const std::vector<Polynomial>& gens) {
  RingPtr ring = f.ring();
  std::vector<Term> rem;
  while (!f.is_zero()) {
    const Term head = f.terms().front();
    const Polynomial* red = nullptr;
    for (const auto& g : gens)
      if (!g.is_zero() && g.leading_monomial().divides(head.m)) {
        red = &g;
        break;
      }
    if (red) {
      f = Polynomial::axpy(f, head.c / red->leading_coeff(),
                           head.m / red->leading_monomial(), *red);
    } else {
      // Heads strictly decrease, so appending keeps the order.
      rem.push_back(head);
      std::vector<Term> rest(f.terms().begin() + 1, f.terms().end());
      f = Polynomial::from_sorted_terms(ring, std::move(rest));
    }
  }
  return Polynomial::from_sorted_terms(ring, std::move(rem));
}

// Mutual reduction of a generating set; preserves the ideal and usually
// shrinks the inputs a lot when linear forms are present.
std::vector<Polynomial> autoreduce(std::vector<Polynomial> gens) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Polynomial g = gens[i];
      std::vector<Polynomial> others;
      others.reserve(gens.size() - 1);
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != i && !gens[j].is_zero()) others.push_back(gens[j]);
      Polynomial h = reduce_full(g, others);
      if (h != g) {
        gens[i] = h;
        changed = true;
      }
    }
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const Polynomial& p) { return p.is_zero(); }),
               gens.end());
  }
  for (auto& g : gens) g = normalize_generator(g);
  return gens;
}

struct PairKey {
  std::uint32_t deg;
  int j, i;  // i < j
  auto operator<=>(const PairKey&) const = default;
};

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = Polynomial::monomial(f.ring(), l / f.leading_monomial(),
                                      f.leading_coeff().inverse()) *
                 f;
  Polynomial b = Polynomial::monomial(g.ring(), l / g.leading_monomial(),
                                      g.leading_coeff().inverse()) *
                 g;
  return a - b;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gens) {
  return reduce_full(f, gens);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.ring()->vars != gb.ring->vars || f.ring()->field != gb.ring->field)
    throw error("ring mismatch in normal form");
  if (*f.ring() == *gb.ring) return reduce_full(f, gb.gens);
  // Same ring presented under another order: convert.
  std::vector<Term> ts(f.terms().begin(), f.terms().end());
  return reduce_full(Polynomial::from_terms(gb.ring, std::move(ts)), gb.gens);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const GroebnerLimits& limits) {
  if (generators.empty()) throw error("no generators");
  RingPtr ring = generators[0].ring();
  for (const auto& g : generators) {
    check_same_ring(ring, g.ring());
    if (g.is_zero()) throw error("zero generator");
    if (!g.is_homogeneous()) throw error("inhomogeneous input");
  }

  std::uint64_t fp = 0;
  {
    std::vector<std::string> keys;
    for (const auto& g : generators) keys.push_back(normalize_generator(g).str());
    std::sort(keys.begin(), keys.end());
    std::string all;
    for (const auto& k : keys) all += k + ";";
    fp = fnv1a(all);
  }

  std::vector<Polynomial> G = autoreduce(generators);
  std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), ring->order) < 0;
  });

  std::set<PairKey> queue;
  std::size_t pairs_done = 0;

  // Gebauer-Moeller update for a newly appended element G[t].
  auto update_pairs = [&](int t) {
    const Monomial& lt = G[t].leading_monomial();
    std::vector<Monomial> L;
    L.reserve(t);
    for (int i = 0; i < t; ++i) L.push_back(lcm(G[i].leading_monomial(), lt));

    std::vector<bool> kept(t, false), alive(t, true);
    for (int i = 0; i < t; ++i) {
      bool drop = false;
      if (!coprime(G[i].leading_monomial(), lt)) {
        for (int j = i + 1; j < t && !drop; ++j)   // still unprocessed
          if (alive[j] && L[j].divides(L[i]) ) drop = true;
        for (int j = 0; j < i && !drop; ++j)       // already kept
          if (kept[j] && L[j].divides(L[i])) drop = true;
      }
      if (drop)
        alive[i] = false;
      else
        kept[i] = true;
    }
    // Chain criterion against the surviving old pairs.
    for (auto it = queue.begin(); it != queue.end();) {
      int i = it->i, j = it->j;
      Monomial lij = lcm(G[i].leading_monomial(), G[j].leading_monomial());
      if (lt.divides(lij) && L[i] != lij && L[j] != lij)
        it = queue.erase(it);
      else
        ++it;
    }
    for (int i = 0; i < t; ++i)
      if (kept[i] && !coprime(G[i].leading_monomial(), lt))
        queue.insert({L[i].degree(), t, i});
  };

  for (int t = 1; t < static_cast<int>(G.size()); ++t) update_pairs(t);

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    if (pk.deg > limits.max_pair_degree)
      throw limit_error(pk.deg, pairs_done, G.size());
    queue.erase(queue.begin());
    ++pairs_done;
    Polynomial r = reduce_full(s_polynomial(G[pk.i], G[pk.j]), G);
    if (r.is_zero()) continue;
    if (G.size() + 1 > limits.max_basis)
      throw limit_error(pk.deg, pairs_done, G.size() + 1);
    G.push_back(normalize_generator(r));
    update_pairs(static_cast<int>(G.size()) - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another.
  std::vector<Polynomial> minimal;
  std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), ring->order) < 0;
  });
  for (const auto& g : G) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }
  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = normalize_generator(reduce_full(minimal[i], others));
  }

  GroebnerBasis gb;
  gb.ring = ring;
  gb.gens = std::move(minimal);
  gb.ideal_fingerprint = fp;
  return gb;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const MonomialOrder& order,
                         const GroebnerLimits& limits) {
  if (generators.empty()) throw error("no generators");
  RingPtr old = generators[0].ring();
  if (old->order == order) return buchberger(generators, limits);
  RingPtr ring =
      make_ring(old->vars, old->field, order, old->grading_split);
  std::vector<Polynomial> conv;
  conv.reserve(generators.size());
  for (const auto& g : generators) {
    std::vector<Term> ts(g.terms().begin(), g.terms().end());
    conv.push_back(Polynomial::from_terms(ring, std::move(ts)));
  }
  return buchberger(conv, limits);
}

bool verify_groebner_certificate(const GroebnerBasis& gb,
                                 const std::vector<Polynomial>& originals) {
  const auto& G = gb.gens;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!reduce_full(s_polynomial(G[i], G[j]), G).is_zero()) return false;
  for (const auto& f : originals)
    if (!normal_form(f, gb).is_zero()) return false;
  // No leading term may divide another (reduced basis).
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < G.size(); ++j)
      if (i != j &&
          G[i].leading_monomial().divides(G[j].leading_monomial()))
        return false;
  return true;
}

int jacobian_rank_at(const std::vector<Polynomial>& generators,
                     const std::vector<Scalar>& point) {
  if (generators.empty()) throw error("no generators");
  const RingPtr& ring = generators[0].ring();
  bool nonzero = false;
  for (const auto& s : point)
    if (!s.is_zero()) nonzero = true;
  if (!nonzero) throw error("zero vector is not a projective point");
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (!poly_eval(generators[k], point).is_zero())
      throw error("point not on the variety: generator " + std::to_string(k) +
                  " does not vanish");
  }
  Matrix jac;
  for (const auto& g : generators) {
    std::vector<Scalar> row;
    row.reserve(ring->nvars());
    for (int j = 0; j < ring->nvars(); ++j)
      row.push_back(poly_eval(poly_diff(g, j), point));
    jac.push_back(std::move(row));
  }
  return matrix_rank(std::move(jac), ring->field);
}

}  // namespace dualvar
