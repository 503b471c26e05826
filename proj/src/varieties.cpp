#include "dualvar/varieties.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "dualvar/parse.hpp"
#include "dualvar/rng.hpp"

namespace dualvar::varieties {

using chow::BundleSpec;
using chow::ChernPoly;
using chow::ChowClass;

std::string case_name(CaseId c) {
  switch (c) {
    case CaseId::G4: return "G4";
    case CaseId::G5: return "G5";
    case CaseId::G6Q: return "G6Q";
    case CaseId::G6C: return "G6C";
    case CaseId::G8: return "G8";
  }
  throw error("bad case id");
}

std::optional<CaseId> case_from_name(const std::string& s) {
  if (s == "G4") return CaseId::G4;
  if (s == "G5") return CaseId::G5;
  if (s == "G6Q") return CaseId::G6Q;
  if (s == "G6C") return CaseId::G6C;
  if (s == "G8") return CaseId::G8;
  return std::nullopt;
}

namespace {

RingPtr g4_ring(Field f) {
  std::vector<std::string> vars = {"p1", "p2", "p3", "q1", "q2", "q3"};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      vars.push_back("d" + std::to_string(i) + std::to_string(j));
  return make_ring(std::move(vars), f);
}

RingPtr g5_ring(Field f) {
  std::vector<std::string> vars;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 3; ++j)
      vars.push_back("d" + std::to_string(i) + std::to_string(j));
  for (int i = 1; i <= 4; ++i) vars.push_back("p" + std::to_string(i));
  return make_ring(std::move(vars), f);
}

RingPtr g6c_ring(Field f) {
  std::vector<std::string> vars = {"p1", "p2", "p3"};
  for (int i = 1; i <= 5; ++i) vars.push_back("r" + std::to_string(i));
  for (int i = 1; i <= 5; ++i) vars.push_back("q" + std::to_string(i));
  return make_ring(std::move(vars), f);
}

// Variable index helpers for the fixed coordinate layouts.
int g4_d(int i, int j) { return 6 + 3 * i + j; }        // 0-based i, j in 0..2
int g5_d(int i, int j) { return 3 * i + j; }            // i in 0..3, j in 0..2
int g5_p(int i) { return 12 + i; }                      // i in 0..3

Polynomial var_poly(const RingPtr& R, int i) { return Polynomial::variable(R, i); }

}  // namespace

DualModel build_dual_ideal(CaseId c, Field field) {
  DualModel dm;
  dm.c = c;
  switch (c) {
    case CaseId::G4: {
      RingPtr R = g4_ring(field);
      auto d = [&](int i, int j) { return var_poly(R, g4_d(i, j)); };
      auto p = [&](int i) { return var_poly(R, i); };
      auto q = [&](int i) { return var_poly(R, 3 + i); };
      std::vector<Polynomial> gens;
      // Row incidence: the three entries of the covector acting on the block.
      for (int j = 0; j < 3; ++j)
        gens.push_back(p(0) * d(0, j) + p(1) * d(1, j) + p(2) * d(2, j));
      // Column incidence.
      for (int i = 0; i < 3; ++i)
        gens.push_back(d(i, 0) * q(0) + d(i, 1) * q(1) + d(i, 2) * q(2));
      // Adjugate entries: cyclic cofactor formula carries the signs.
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
          int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
          gens.push_back(d(j1, i1) * d(j2, i2) - d(j1, i2) * d(j2, i1));
        }
      gens.push_back(d(0, 0) + d(1, 1) + d(2, 2));  // trace
      dm.ring = R;
      dm.gens = std::move(gens);
      dm.notes = "rank-one traceless 3x3 block with row/column covectors";
      return dm;
    }
    case CaseId::G5: {
      RingPtr R = g5_ring(field);
      auto d = [&](int i, int j) { return var_poly(R, g5_d(i, j)); };
      auto p = [&](int i) { return var_poly(R, g5_p(i)); };
      std::vector<Polynomial> gens;
      // All 2x2 minors of the 4x3 block: rank <= 1.
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
          for (int cc = 0; cc < 3; ++cc)
            for (int dd = cc + 1; dd < 3; ++dd)
              gens.push_back(d(a, cc) * d(b, dd) - d(a, dd) * d(b, cc));
      // Row covector annihilates the block.
      for (int j = 0; j < 3; ++j) {
        Polynomial s = Polynomial::zero(R);
        for (int i = 0; i < 4; ++i) s = s + p(i) * d(i, j);
        gens.push_back(s);
      }
      dm.ring = R;
      dm.gens = std::move(gens);
      dm.notes = "rank-one 4x3 block annihilated by a row covector";
      return dm;
    }
    case CaseId::G6C: {
      RingPtr R = g6c_ring(field);
      dm.ring = R;
      dm.gens = {parse_poly(
          "p1*(q2^2 - q1*q3) + p2*(q1*q4 - q2*q3) + p3*(q3^2 - q2*q4)"
          " + q5*(r1*q1 + r2*q2 + r3*q3 + r4*q4 + r5*q5)",
          R)};
      dm.notes = "cubic hypersurface";
      return dm;
    }
    case CaseId::G6Q:
      throw error("G6Q has no equation-level model (self-dual case)");
    case CaseId::G8:
      throw error("G8 dual image is the whole projective space");
  }
  throw error("bad case id");
}

chow::ChowClass base_minus_canonical(CaseId c, const chow::ChowRingPtr& ring) {
  using chow::ChowClass;
  switch (c) {
    case CaseId::G4: {
      ChowClass h1 = ChowClass::basis(ring, 1, 0);
      ChowClass h2 = ChowClass::basis(ring, 1, 1);
      return (h1 + h2) * 2;
    }
    case CaseId::G5:
      return ChowClass::basis(ring, 1, 0) * 4;
    case CaseId::G6Q:
      return ChowClass::basis(ring, 1, 0) * 3;
    case CaseId::G6C: {
      ChowClass cA = ChowClass::basis(ring, 1, 0);
      ChowClass Fa = ChowClass::basis(ring, 1, 1);
      return cA * 3 - Fa;
    }
    case CaseId::G8:
      return ChowClass::basis(ring, 1, 0) * 2;
  }
  throw error("bad case id");
}

std::pair<BundleSpec, BundleSpec> bundle_chern_data(CaseId c) {
  using chow::chern_line;
  using chow::chern_tangent_twist;
  using chow::chern_whitney;
  using chow::segre_series;
  switch (c) {
    case CaseId::G4: {
      auto R = chow::b6_ring();
      ChowClass h1 = ChowClass::basis(R, 1, 0);
      ChowClass h2 = ChowClass::basis(R, 1, 1);
      ChowClass H = h1 + h2;
      BundleSpec E{R, 9,
                   chern_whitney(chern_whitney(chern_line(h1), chern_line(h2)),
                                 chern_tangent_twist(H, 7)),
                   14};
      BundleSpec Ep{R, 5,
                    chern_whitney(
                        chern_whitney(chern_tangent_twist(h1, 2),
                                      chern_tangent_twist(h2, 2)),
                        chern_line(H)),
                    14};
      return {E, Ep};
    }
    case CaseId::G5: {
      auto R = chow::projective_space(3);
      ChowClass h = ChowClass::basis(R, 1, 0);
      ChernPoly t3 = chern_tangent_twist(h, 3);
      ChernPoly oh = chern_line(h);
      BundleSpec E{R, 10,
                   chern_whitney(chern_whitney(t3, chern_whitney(t3, t3)), oh),
                   16};
      BundleSpec Ep{R, 6,
                    chern_whitney(chern_whitney(oh, chern_whitney(oh, oh)), t3),
                    16};
      return {E, Ep};
    }
    case CaseId::G6Q: {
      auto R = chow::q3_ring();
      ChowClass h = ChowClass::basis(R, 1, 0);
      ChowClass l = ChowClass::basis(R, 2, 0);
      // Spinor-type input: c(U|) = 1 - h t + l t^2, and its quotient partner
      // is the truncated inverse.
      ChernPoly cU{R, 2, {ChowClass::unit(R), -h, l}};
      auto inv = segre_series(cU);
      if (!inv[3].is_zero()) throw error("quotient bundle rank check failed");
      ChernPoly cQ{R, 2, {inv[0], inv[1], inv[2]}};
      ChernPoly cUdual = chow::chern_dual(cU);
      ChernPoly rest = chern_whitney(chern_tangent_twist(h, 4), chern_line(h));
      BundleSpec E{R, 7, chern_whitney(cUdual, rest), 14};
      BundleSpec Ep{R, 7, chern_whitney(cQ, rest), 14};
      return {E, Ep};
    }
    case CaseId::G6C: {
      auto R = chow::ac_hat_ring();
      ChowClass cA = ChowClass::basis(R, 1, 0);
      ChowClass Fa = ChowClass::basis(R, 1, 1);
      ChowClass cB = cA - Fa;
      ChowClass al = ChowClass::basis(R, 3, 4);
      ChowClass pt = ChowClass::basis(R, 4, 0);
      BundleSpec E{R, 5,
                   chern_whitney(chern_line(cA), chern_tangent_twist(cB, 4)),
                   13};
      // Dual-side total class of the orthogonal bundle, as computed on the
      // blown-up del Pezzo fourfold.
      ChernPoly cEp{R, 8,
                    {ChowClass::unit(R), cA + cB, cA * cB + cA * cA,
                     cA * cA * cB + al * 5, cB * (al * 5) + pt * 5}};
      BundleSpec Ep{R, 8, cEp, 13};
      return {E, Ep};
    }
    case CaseId::G8: {
      auto R = chow::b5_ring();
      ChowClass H = ChowClass::basis(R, 1, 0);
      ChowClass l = ChowClass::basis(R, 2, 0);
      ChernPoly cU{R, 2, {ChowClass::unit(R), -H, l * 2}};
      auto inv = segre_series(cU);
      ChernPoly cQ{R, 3, {inv[0], inv[1], inv[2], inv[3]}};
      BundleSpec E{R, 3, chern_whitney(chow::chern_dual(cU), chern_line(H)),
                   12};
      BundleSpec Ep{R, 9, chern_whitney(cQ, chern_tangent_twist(H, 6)), 12};
      return {E, Ep};
    }
  }
  throw error("bad case id");
}

int projectivization_dim(CaseId c) {
  auto [E, Ep] = bundle_chern_data(c);
  return E.base->dim() + E.rank - 1;
}

// ---------------------------------------------------------------------------
// Fiber samplers
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxRetries = 64;

std::vector<Scalar> zero_vec(Field f, int n) {
  return std::vector<Scalar>(n, Scalar::zero(f));
}

// Places src into dst at offset.
void emplace_block(std::vector<Scalar>& dst, const std::vector<Scalar>& src,
                   int offset) {
  for (std::size_t i = 0; i < src.size(); ++i) dst[offset + i] = src[i];
}

std::vector<Scalar> rand_combo(Rng& rng, Field f, const Matrix& rows,
                               bool nonzero_last) {
  std::vector<Scalar> out = zero_vec(f, static_cast<int>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Scalar c = (nonzero_last && r + 1 == rows.size()) ? rng.nonzero_scalar(f)
                                                      : rng.scalar(f);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * rows[r][j];
  }
  return out;
}

FiberPoint sample_g4(Field f, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<Scalar> y = rng.nonzero_vector(f, 3);
    Matrix ky = kernel_basis({y}, 3, f);  // 2-dim
    if (ky.size() != 2) continue;
    std::vector<Scalar> x = rand_combo(rng, f, ky, true);
    bool xz = true;
    for (auto& s : x)
      if (!s.is_zero()) xz = false;
    if (xz) continue;

    // Block y (x) x as a 9-vector, row-major.
    std::vector<Scalar> D = zero_vec(f, 9);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) D[3 * i + j] = y[i] * x[j];

    Matrix kx = kernel_basis({x}, 3, f);
    if (kx.size() != 2) continue;

    Matrix perp_rows;
    for (const auto& a : ky) {
      auto row = zero_vec(f, 15);
      emplace_block(row, a, 0);
      perp_rows.push_back(row);
    }
    for (const auto& b : kx) {
      auto row = zero_vec(f, 15);
      emplace_block(row, b, 3);
      perp_rows.push_back(row);
    }
    {
      auto row = zero_vec(f, 15);
      emplace_block(row, D, 6);
      perp_rows.push_back(row);
    }

    // E-side fiber: the two marked lines plus the functionals on the block
    // space annihilating both D and the identity (trace direction).
    std::vector<Scalar> idvec = zero_vec(f, 9);
    idvec[0] = idvec[4] = idvec[8] = Scalar::one(f);
    Matrix kd = kernel_basis({D, idvec}, 9, f);
    if (kd.size() != 7) continue;
    Matrix e_rows;
    {
      auto row = zero_vec(f, 15);
      emplace_block(row, y, 0);
      e_rows.push_back(row);
      row = zero_vec(f, 15);
      emplace_block(row, x, 3);
      e_rows.push_back(row);
    }
    for (const auto& g : kd) {
      auto row = zero_vec(f, 15);
      emplace_block(row, g, 6);
      e_rows.push_back(row);
    }

    FiberPoint fp;
    fp.c = CaseId::G4;
    fp.section_space_dim = 14;
    fp.E_s = Subspace::from_rows(15, f, e_rows);
    fp.E_s_perp = Subspace::from_rows(15, f, perp_rows);
    if (fp.E_s.dim() != 9 || fp.E_s_perp.dim() != 5) continue;
    fp.ambient_point = rand_combo(rng, f, perp_rows, true);
    return fp;
  }
  throw error("degenerate draws exhausted in G4 fiber sampler");
}

FiberPoint sample_g5(Field f, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<Scalar> u = rng.nonzero_vector(f, 4);
    Matrix ku = kernel_basis({u}, 4, f);
    if (ku.size() != 3) continue;

    Matrix perp_rows;
    // Block rows u (x) e_k, k = 0..2 (the rank-one directions through u).
    for (int k = 0; k < 3; ++k) {
      auto row = zero_vec(f, 16);
      for (int i = 0; i < 4; ++i) row[g5_d(i, k)] = u[i];
      perp_rows.push_back(row);
    }
    for (const auto& a : ku) {
      auto row = zero_vec(f, 16);
      emplace_block(row, a, 12);
      perp_rows.push_back(row);
    }

    Matrix e_rows;
    // Functionals G with G u = 0: per column slot, a covector killing u.
    for (int j = 0; j < 3; ++j)
      for (const auto& a : ku) {
        auto row = zero_vec(f, 16);
        for (int i = 0; i < 4; ++i) row[g5_d(i, j)] = a[i];
        e_rows.push_back(row);
      }
    {
      auto row = zero_vec(f, 16);
      emplace_block(row, u, 12);
      e_rows.push_back(row);
    }

    FiberPoint fp;
    fp.c = CaseId::G5;
    fp.section_space_dim = 16;
    fp.E_s = Subspace::from_rows(16, f, e_rows);
    fp.E_s_perp = Subspace::from_rows(16, f, perp_rows);
    if (fp.E_s.dim() != 10 || fp.E_s_perp.dim() != 6) continue;

    // Ambient point: rank-one block u (x) gamma plus a covector part.
    std::vector<Scalar> gamma = rng.nonzero_vector(f, 3);
    auto point = zero_vec(f, 16);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 3; ++j) point[g5_d(i, j)] = u[i] * gamma[j];
    std::vector<Scalar> pp = rand_combo(rng, f, ku, false);
    emplace_block(point, pp, 12);
    fp.ambient_point = std::move(point);
    return fp;
  }
  throw error("degenerate draws exhausted in G5 fiber sampler");
}

// Fixed generic codimension-3 linear section of the Plücker quadric cutting
// the quintic del Pezzo threefold; coordinates are the 10 pairs (i<j).
const int kPluckerPairs[10][2] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                  {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};

int plucker_slot(int a, int b) {
  for (int s = 0; s < 10; ++s)
    if (kPluckerPairs[s][0] == a && kPluckerPairs[s][1] == b) return s;
  throw error("bad plucker pair");
}

const long kSectionForms[3][10] = {
    {1, 0, 2, 0, -1, 3, 0, 1, 0, 5},
    {0, 1, -1, 2, 0, 0, 4, -2, 1, 0},
    {2, -3, 0, 1, 1, 0, -1, 0, 2, 1},
};

FiberPoint sample_g8(Field f, std::uint64_t seed) {
  Rng rng(seed);
  Matrix L;
  for (int k = 0; k < 3; ++k) {
    std::vector<Scalar> row;
    for (int s = 0; s < 10; ++s) row.push_back(Scalar(f, kSectionForms[k][s]));
    L.push_back(std::move(row));
  }
  Matrix U7 = kernel_basis(L, 10, f);
  if (U7.size() != 7) throw error("section forms are degenerate");
  // Pivot columns of the canonical kernel basis, for coordinate extraction.
  std::vector<int> pivots;
  for (const auto& row : U7) {
    int c = 0;
    while (row[c].is_zero()) ++c;
    pivots.push_back(c);
  }

  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<Scalar> w1 = rng.nonzero_vector(f, 5);
    // lambda_k(w1 ^ w2) = 0 is linear in w2.
    Matrix M(3, zero_vec(f, 5));
    for (int k = 0; k < 3; ++k)
      for (int b = 0; b < 5; ++b) {
        Scalar acc = Scalar::zero(f);
        for (int a = 0; a < 5; ++a) {
          if (a == b) continue;
          Scalar coef = Scalar(f, kSectionForms[k][plucker_slot(std::min(a, b),
                                                                std::max(a, b))]);
          if (a < b)
            acc += coef * w1[a];
          else
            acc -= coef * w1[a];
        }
        M[k][b] = acc;
      }
    Matrix ker = kernel_basis(M, 5, f);
    if (ker.size() != 2) continue;
    // Pick a kernel vector independent of w1.
    std::vector<Scalar> w2;
    for (const auto& cand : ker) {
      Matrix test = {w1, cand};
      if (matrix_rank(test, f) == 2) {
        w2 = cand;
        break;
      }
    }
    if (w2.empty()) continue;

    std::vector<Scalar> P = zero_vec(f, 10);
    for (int s = 0; s < 10; ++s) {
      int a = kPluckerPairs[s][0], b = kPluckerPairs[s][1];
      P[s] = w1[a] * w2[b] - w1[b] * w2[a];
    }
    // Coordinates of P over the canonical section basis.
    std::vector<Scalar> coords;
    for (std::size_t r = 0; r < U7.size(); ++r) coords.push_back(P[pivots[r]]);
    std::vector<Scalar> recon = zero_vec(f, 10);
    for (std::size_t r = 0; r < U7.size(); ++r)
      for (int s = 0; s < 10; ++s) recon[s] += coords[r] * U7[r][s];
    if (recon != P) continue;  // point missed the section (degenerate draw)

    Matrix e_rows;
    {
      auto row = zero_vec(f, 12);
      emplace_block(row, w1, 0);
      e_rows.push_back(row);
      row = zero_vec(f, 12);
      emplace_block(row, w2, 0);
      e_rows.push_back(row);
      row = zero_vec(f, 12);
      emplace_block(row, coords, 5);
      e_rows.push_back(row);
    }
    Matrix annW = kernel_basis({w1, w2}, 5, f);
    Matrix annP = kernel_basis({coords}, 7, f);
    if (annW.size() != 3 || annP.size() != 6) continue;
    Matrix perp_rows;
    for (const auto& a : annW) {
      auto row = zero_vec(f, 12);
      emplace_block(row, a, 0);
      perp_rows.push_back(row);
    }
    for (const auto& g : annP) {
      auto row = zero_vec(f, 12);
      emplace_block(row, g, 5);
      perp_rows.push_back(row);
    }

    FiberPoint fp;
    fp.c = CaseId::G8;
    fp.section_space_dim = 12;
    fp.E_s = Subspace::from_rows(12, f, e_rows);
    fp.E_s_perp = Subspace::from_rows(12, f, perp_rows);
    if (fp.E_s.dim() != 3 || fp.E_s_perp.dim() != 9) continue;
    fp.ambient_point = rand_combo(rng, f, perp_rows, true);
    return fp;
  }
  throw error("degenerate draws exhausted in G8 fiber sampler");
}

}  // namespace

FiberPoint fiber_sample(CaseId c, Field field, std::uint64_t seed) {
  switch (c) {
    case CaseId::G4: return sample_g4(field, seed);
    case CaseId::G5: return sample_g5(field, seed);
    case CaseId::G8: return sample_g8(field, seed);
    default: throw error("fiber sampler not available for " + case_name(c));
  }
}

int containment_check(CaseId c, Field field, int N, std::uint64_t seed) {
  if (c != CaseId::G4 && c != CaseId::G5)
    throw error("containment check needs an equation-level model");
  DualModel dm = build_dual_ideal(c, field);
  int failures = 0;
  for (int n = 0; n < N; ++n) {
    FiberPoint fp = fiber_sample(c, field, derive_seed(seed, n));
    for (const auto& g : dm.gens)
      if (!poly_eval(g, fp.ambient_point).is_zero()) {
        ++failures;
        break;
      }
  }
  return failures;
}

bool cubic_identity_check() {
  RingPtr R = g6c_ring(QQ());
  // The eight incidence components paired against (p1..p3, r1..r5).
  const char* comps[8] = {"q2^2 - q1*q3", "q1*q4 - q2*q3", "q3^2 - q2*q4",
                          "q5*q1",        "q5*q2",         "q5*q3",
                          "q5*q4",        "q5^2"};
  const char* duals[8] = {"p1", "p2", "p3", "r1", "r2", "r3", "r4", "r5"};
  Polynomial lhs = Polynomial::zero(R);
  for (int i = 0; i < 8; ++i)
    lhs = lhs + parse_poly(duals[i], R) * parse_poly(comps[i], R);
  Polynomial rhs = build_dual_ideal(CaseId::G6C, QQ()).gens[0];
  return (lhs - rhs).is_zero();
}

bool sing_gradient_check(const std::string& component) {
  RingPtr R = g6c_ring(QQ());
  Polynomial F = build_dual_ideal(CaseId::G6C, QQ()).gens[0];

  std::map<std::string, Polynomial> images;
  RingPtr target;
  if (component == "q=0") {
    target = R;
    for (int i = 1; i <= 5; ++i)
      images["q" + std::to_string(i)] = Polynomial::zero(R);
  } else if (component == "S_F") {
    target = make_ring({"q2", "p3", "r2", "r3", "r4", "r5"}, QQ());
    Polynomial q2 = Polynomial::variable(target, 0);
    Polynomial p3 = Polynomial::variable(target, 1);
    Polynomial r2 = Polynomial::variable(target, 2);
    Polynomial r3 = Polynomial::variable(target, 3);
    Polynomial r4 = Polynomial::variable(target, 4);
    Polynomial one = Polynomial::constant(target, Scalar::one(QQ()));
    images["q1"] = one;
    images["q3"] = q2 * q2;
    images["q4"] = q2 * q2 * q2;
    images["q5"] = Polynomial::zero(target);
    images["p1"] = q2 * q2 * p3;
    images["p2"] = q2 * p3;
    images["r1"] = -(q2 * r2) - (q2 * q2 * r3) - (q2 * q2 * q2 * r4);
  } else {
    throw error("unknown component id: " + component);
  }

  for (int v = 0; v < R->nvars(); ++v) {
    Polynomial partial = poly_diff(F, v);
    if (!poly_subst(partial, target, images).is_zero()) return false;
  }
  return true;
}

namespace {

SectionInvariants invariants_of(const std::vector<Polynomial>& gens,
                                const GroebnerLimits& limits) {
  GroebnerBasis gb = buchberger(gens, limits);
  HilbertData hd = hilbert_data(gb);
  SectionInvariants si;
  si.proj_dim = hd.proj_dim;
  si.degree = hd.degree;
  si.hilbert_poly = hd.hilbert_poly;
  return si;
}

}  // namespace

SectionInvariants linear_section_invariants(CaseId c, int codim, Field field,
                                            std::uint64_t seed,
                                            const GroebnerLimits& limits) {
  DualModel dm = build_dual_ideal(c, field);
  Rng rng(seed);
  std::vector<Polynomial> gens = dm.gens;
  for (int k = 0; k < codim; ++k) {
    std::vector<Term> ts;
    for (int v = 0; v < dm.ring->nvars(); ++v) {
      Scalar s = rng.scalar(field);
      if (!s.is_zero())
        ts.push_back({Monomial::var(dm.ring->nvars(), v), s});
    }
    Polynomial l = Polynomial::from_terms(dm.ring, std::move(ts));
    if (l.is_zero()) {
      --k;
      continue;
    }
    gens.push_back(l);
  }
  return invariants_of(gens, limits);
}

DualModel cor46_section(const std::vector<Polynomial>& eta,
                        const Polynomial& xi) {
  if (eta.size() != 3) throw error("need exactly three (1,1) forms");
  RingPtr BR = xi.ring();
  if (BR->nvars() != 7 || BR->grading_split != 3)
    throw error("forms must live in the x1..x3, y1..y4 bigraded ring");
  for (const auto& e : eta) {
    check_same_ring(BR, e.ring());
    if (e.bidegree() != std::pair<std::uint32_t, std::uint32_t>{1, 1})
      throw error("eta must have bidegree (1,1)");
  }
  if (xi.bidegree() != std::pair<std::uint32_t, std::uint32_t>{1, 2})
    throw error("xi must have bidegree (1,2)");

  Field f = BR->field;
  DualModel base = build_dual_ideal(CaseId::G5, f);
  RingPtr R = base.ring;

  // A (1,1) form sum c_ik x_i y_k corresponds to the linear form
  // sum c_ik d_{ki} on the block coordinates.
  auto to_linear = [&](const Polynomial& form) {
    std::vector<Term> ts;
    for (const auto& t : form.terms()) {
      int xi_idx = -1, yk_idx = -1;
      for (int v = 0; v < 3; ++v)
        if (t.m[v]) xi_idx = v;
      for (int v = 3; v < 7; ++v)
        if (t.m[v]) yk_idx = v - 3;
      ts.push_back({Monomial::var(R->nvars(), g5_d(yk_idx, xi_idx)), t.c});
    }
    return Polynomial::from_terms(R, std::move(ts));
  };

  // Decompose xi = sum_a l_a y_a with l_a of bidegree (1,1): for each term
  // c x_k y_a y_b (a <= b) assign c x_k y_b to l_a.
  std::vector<Polynomial> l(4, Polynomial::zero(BR));
  for (const auto& t : xi.terms()) {
    int k = -1;
    for (int v = 0; v < 3; ++v)
      if (t.m[v]) k = v;
    int a = -1, b = -1;
    for (int v = 3; v < 7; ++v) {
      if (t.m[v] == 2) a = b = v - 3;
      if (t.m[v] == 1) {
        if (a < 0)
          a = v - 3;
        else
          b = v - 3;
      }
    }
    Monomial m = Monomial::var(7, k) * Monomial::var(7, 3 + b);
    l[a] = l[a] + Polynomial::monomial(BR, m, t.c);
  }

  DualModel out;
  out.c = CaseId::G5;
  out.ring = R;
  out.gens = base.gens;
  for (int a = 0; a < 4; ++a)
    out.gens.push_back(Polynomial::variable(R, g5_p(a)) - to_linear(l[a]));
  for (const auto& e : eta) out.gens.push_back(to_linear(e));
  out.notes = "curve section from a (1,2) form and three (1,1) forms";
  return out;
}

std::pair<std::vector<Polynomial>, Polynomial> random_cor46_input(
    Field field, std::uint64_t seed) {
  RingPtr BR = make_ring({"x1", "x2", "x3", "y1", "y2", "y3", "y4"}, field,
                         MonomialOrder::degrevlex(), 3);
  Rng rng(seed);
  auto rand_form = [&](int ydeg) {
    std::vector<Term> ts;
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 4; ++a) {
        if (ydeg == 1) {
          ts.push_back({Monomial::var(7, i) * Monomial::var(7, 3 + a),
                        rng.scalar(field)});
        } else {
          for (int b = a; b < 4; ++b)
            ts.push_back({Monomial::var(7, i) * Monomial::var(7, 3 + a) *
                              Monomial::var(7, 3 + b),
                          rng.scalar(field)});
        }
      }
    return Polynomial::from_terms(BR, std::move(ts));
  };
  std::vector<Polynomial> eta = {rand_form(1), rand_form(1), rand_form(1)};
  return {eta, rand_form(2)};
}

Cor63Result cor63_probe(Field field, std::uint64_t seed,
                        const GroebnerLimits& limits) {
  Rng rng(seed);
  // Random 6-dimensional subspace, as 13 linear parameter forms.
  std::vector<std::vector<Scalar>> lambda(13);
  for (;;) {
    Matrix m;
    for (int i = 0; i < 13; ++i) lambda[i] = rng.vector(field, 6);
    for (int i = 0; i < 13; ++i) m.push_back(lambda[i]);
    if (matrix_rank(m, field) == 6) break;
  }
  return cor63_probe_at(field, lambda, limits);
}

Cor63Result cor63_probe_at(Field field,
                           const std::vector<std::vector<Scalar>>& lambda,
                           const GroebnerLimits& limits) {
  if (lambda.size() != 13) throw error("need 13 coordinate rows");
  DualModel dm = build_dual_ideal(CaseId::G6C, field);
  RingPtr S = make_ring(numbered("s", 6), field);
  std::vector<Polynomial> images;
  for (int i = 0; i < 13; ++i) {
    std::vector<Term> ts;
    for (int k = 0; k < 6; ++k)
      if (!lambda[i][k].is_zero())
        ts.push_back({Monomial::var(6, k), lambda[i][k]});
    images.push_back(Polynomial::from_terms(S, std::move(ts)));
  }
  Polynomial g = poly_subst(dm.gens[0], images);

  std::vector<Polynomial> jac;
  for (int k = 0; k < 6; ++k) jac.push_back(poly_diff(g, k));
  jac.push_back(g);

  GroebnerBasis gb = buchberger(jac, limits);
  HilbertData hd = hilbert_data(gb);
  if (hd.cone_dim != 1)
    throw error("singular scheme not finite (cone dimension " +
                std::to_string(hd.cone_dim) + "); subspace not general");

  Cor63Result res;
  res.sing_count = hd.degree;
  if (hd.degree != 1) return res;  // no single point to analyse

  // Locate the unique reduced point: in high degree the quotient is spanned
  // by one standard monomial, and multiplication by s_i reads off the
  // coordinates of the point.
  int m = static_cast<int>(hd.reduced.size());  // beyond numerator degree
  std::vector<Monomial> std_m;
  {
    // Enumerate degree-m monomials in 6 variables, keep the standard ones.
    std::vector<std::uint16_t> e(6, 0);
    std::function<void(int, int, std::vector<Monomial>&)> walk =
        [&](int pos, int left, std::vector<Monomial>& out) {
          if (pos == 5) {
            e[5] = static_cast<std::uint16_t>(left);
            Monomial mm(e);
            bool standard = true;
            for (const auto& bgen : gb.gens)
              if (bgen.leading_monomial().divides(mm)) standard = false;
            if (standard) out.push_back(mm);
            return;
          }
          for (int k = 0; k <= left; ++k) {
            e[pos] = static_cast<std::uint16_t>(k);
            walk(pos + 1, left - k, out);
          }
          e[pos] = 0;
        };
    walk(0, m, std_m);
  }
  if (std_m.size() != 1)
    throw error("expected a single standard monomial beyond regularity");
  const Monomial& mu_star = std_m[0];

  std::vector<Scalar> point;
  {
    std::vector<std::uint16_t> e(6, 0);
    std::vector<Monomial> lower;
    std::function<void(int, int)> walk = [&](int pos, int left) {
      if (pos == 5) {
        e[5] = static_cast<std::uint16_t>(left);
        lower.push_back(Monomial(e));
        return;
      }
      for (int k = 0; k <= left; ++k) {
        e[pos] = static_cast<std::uint16_t>(k);
        walk(pos + 1, left - k);
      }
      e[pos] = 0;
    };
    walk(0, m - 1);
    for (const auto& mu : lower) {
      std::vector<Scalar> cand;
      bool nonzero = false;
      for (int i = 0; i < 6; ++i) {
        Polynomial nf = normal_form(
            Polynomial::monomial(S, mu * Monomial::var(6, i), Scalar::one(field)),
            gb);
        Scalar ci = Scalar::zero(field);
        for (const auto& t : nf.terms())
          if (t.m == mu_star) ci = t.c;
        if (!ci.is_zero()) nonzero = true;
        cand.push_back(ci);
      }
      if (nonzero) {
        point = std::move(cand);
        break;
      }
    }
  }
  if (point.empty()) throw error("failed to extract the singular point");
  for (int k = 0; k < 6; ++k)
    if (!poly_eval(jac[k], point).is_zero())
      throw error("extracted point is not singular");

  // Lift to the 13 coordinates and test the q-part (the last 5).
  res.on_q0_component = true;
  for (int i = 8; i < 13; ++i) {
    Scalar xi = Scalar::zero(field);
    for (int k = 0; k < 6; ++k) xi += lambda[i][k] * point[k];
    if (!xi.is_zero()) res.on_q0_component = false;
  }

  // Quadratic part at the point: rank of the 6x6 Hessian (the point spans
  // its kernel for a hypersurface singularity).
  Matrix hess;
  for (int a = 0; a < 6; ++a) {
    std::vector<Scalar> row;
    for (int b = 0; b < 6; ++b)
      row.push_back(poly_eval(poly_diff(poly_diff(g, a), b), point));
    hess.push_back(std::move(row));
  }
  res.hessian_rank = matrix_rank(hess, field);
  return res;
}

// ---------------------------------------------------------------------------
// Segre probes
// ---------------------------------------------------------------------------

namespace {

// Minors of the 3x4 block r_ij = x_i y_j as index quadruples (a<b rows,
// c<d cols).
struct MinorIdx {
  int a, b, c, d;
};

std::vector<MinorIdx> segre_minors() {
  std::vector<MinorIdx> out;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = c + 1; d < 4; ++d) out.push_back({a, b, c, d});
  return out;
}

// gcd of univariate coefficient vectors (ascending), monic result.
std::vector<Scalar> uni_gcd(std::vector<Scalar> A, std::vector<Scalar> B,
                            Field f) {
  auto trim = [](std::vector<Scalar>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  trim(A);
  trim(B);
  while (!B.empty()) {
    // A mod B
    while (A.size() >= B.size() && !A.empty()) {
      Scalar c = A.back() / B.back();
      std::size_t off = A.size() - B.size();
      for (std::size_t i = 0; i < B.size(); ++i) A[off + i] -= c * B[i];
      trim(A);
    }
    std::swap(A, B);
  }
  trim(A);
  if (!A.empty()) {
    Scalar inv = A.back().inverse();
    for (auto& c : A) c *= inv;
  }
  return A;
}

}  // namespace

Lemma42Result lemma42_line(const std::vector<Scalar>& x1,
                           const std::vector<Scalar>& y1,
                           const std::vector<Scalar>& x2,
                           const std::vector<Scalar>& y2) {
  Field f = x1[0].field();
  auto seg = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    std::vector<Scalar> r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) r.push_back(x[i] * y[j]);
    return r;
  };
  std::vector<Scalar> P = seg(x1, y1), Q = seg(x2, y2);
  auto at = [&](const std::vector<Scalar>& v, int i, int j) {
    return v[4 * i + j];
  };

  // Restrict each minor to s P + t Q: binary quadric a s^2 + b st + c t^2.
  bool all_zero = true;
  std::vector<std::array<Scalar, 3>> forms;
  for (const auto& M : segre_minors()) {
    Scalar a = at(P, M.a, M.c) * at(P, M.b, M.d) -
               at(P, M.a, M.d) * at(P, M.b, M.c);
    Scalar c = at(Q, M.a, M.c) * at(Q, M.b, M.d) -
               at(Q, M.a, M.d) * at(Q, M.b, M.c);
    Scalar b = at(P, M.a, M.c) * at(Q, M.b, M.d) +
               at(Q, M.a, M.c) * at(P, M.b, M.d) -
               at(P, M.a, M.d) * at(Q, M.b, M.c) -
               at(Q, M.a, M.d) * at(P, M.b, M.c);
    if (!a.is_zero() || !b.is_zero() || !c.is_zero()) all_zero = false;
    forms.push_back({a, b, c});
  }
  Lemma42Result res;
  if (all_zero) {
    res.contained = true;
    res.degree = 0;
    return res;
  }
  // Scheme degree on the line = degree of the gcd of the binary forms:
  // shared powers of s and t plus the gcd of the stripped dehomogenizations.
  int smin = 2, tmin = 2;
  std::vector<Scalar> g;  // gcd of stripped univariate cores, in z = s/t
  bool have = false;
  for (const auto& F : forms) {
    // coefficients ascending in z: F = a s^2 + b st + c t^2 -> c + b z + a z^2
    std::vector<Scalar> u = {F[2], F[1], F[0]};
    while (!u.empty() && u.back().is_zero()) u.pop_back();
    if (u.empty()) continue;
    int tdeg = 2 - (static_cast<int>(u.size()) - 1);  // power of t dividing
    int sdeg = 0;
    while (sdeg < static_cast<int>(u.size()) && u[sdeg].is_zero()) ++sdeg;
    std::vector<Scalar> core(u.begin() + sdeg, u.end());
    smin = std::min(smin, sdeg);
    tmin = std::min(tmin, tdeg);
    g = have ? uni_gcd(g, core, f) : core;
    have = true;
  }
  int deg = smin + tmin + (static_cast<int>(g.size()) - 1);
  res.degree = deg;
  return res;
}

Lemma42Result lemma42_probe(Lemma42Kind kind, Field field, std::uint64_t seed) {
  Rng rng(seed);
  auto proportional = [&](const std::vector<Scalar>& a,
                          const std::vector<Scalar>& b) {
    Matrix m = {a, b};
    return matrix_rank(m, field) < 2;
  };
  if (kind == Lemma42Kind::line2) {
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
      auto x1 = rng.nonzero_vector(field, 3), x2 = rng.nonzero_vector(field, 3);
      auto y1 = rng.nonzero_vector(field, 4), y2 = rng.nonzero_vector(field, 4);
      if (proportional(x1, x2) && proportional(y1, y2)) continue;  // same point
      return lemma42_line(x1, y1, x2, y2);
    }
    throw error("degenerate draws exhausted in line probe");
  }

  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<std::vector<Scalar>> xs, ys;
    for (int i = 0; i < 3; ++i) {
      xs.push_back(rng.nonzero_vector(field, 3));
      ys.push_back(rng.nonzero_vector(field, 4));
    }
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i)
      for (int j = i + 1; j < 3 && ok; ++j)
        if (proportional(xs[i], xs[j]) || proportional(ys[i], ys[j])) ok = false;
    if (!ok) continue;

    RingPtr S = make_ring({"s", "t", "u"}, field);
    // r_ij restricted to the plane through the three block points.
    auto lin = [&](int i, int j) {
      std::vector<Term> ts;
      for (int k = 0; k < 3; ++k) {
        Scalar c = xs[k][i] * ys[k][j];
        if (!c.is_zero()) ts.push_back({Monomial::var(3, k), c});
      }
      return Polynomial::from_terms(S, std::move(ts));
    };
    std::vector<Polynomial> gens;
    for (const auto& M : segre_minors()) {
      Polynomial q = lin(M.a, M.c) * lin(M.b, M.d) -
                     lin(M.a, M.d) * lin(M.b, M.c);
      if (!q.is_zero()) gens.push_back(q);
    }
    Lemma42Result res;
    if (gens.empty()) {
      res.contained = true;
      return res;
    }
    GroebnerBasis gb = buchberger(gens);
    HilbertData hd = hilbert_data(gb);
    if (hd.cone_dim != 1) continue;  // degenerate configuration, resample
    res.degree = hd.degree;
    return res;
  }
  throw error("degenerate draws exhausted in plane probe");
}

}  // namespace dualvar::varieties
