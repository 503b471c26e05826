#include "dualvar/claims.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "dualvar/chow.hpp"
#include "dualvar/hilbert.hpp"
#include "dualvar/multigraded.hpp"
#include "dualvar/parse.hpp"
#include "dualvar/piclattice.hpp"
#include "dualvar/rng.hpp"
#include "dualvar/subspace.hpp"
#include "dualvar/varieties.hpp"

namespace dualvar::claims {

namespace {

using varieties::CaseId;

struct Ctx {
  Field field;
  std::uint64_t seed = 0;
  int samples = 100;
  GroebnerLimits limits;
};

long long to_ll(const mpz_class& z) {
  if (!z.fits_slong_p()) throw error("integer result does not fit a word");
  return z.get_si();
}

std::string poly_in_t(const std::vector<mpq_class>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    mpq_class c = coeffs[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    mpq_class a = abs(c);
    if (a != 1 || i == 0) {
      os << a.get_str();
      if (i > 0) os << "*";
    }
    if (i == 1) os << "t";
    if (i > 1) os << "t^" << i;
  }
  if (first) os << "0";
  return os.str();
}

CaseId case_param(const json& params) {
  auto c = varieties::case_from_name(params.at("case").get<std::string>());
  if (!c) throw error("unknown case id in params");
  return *c;
}

// ---------------------------------------------------------------------------
// engines
// ---------------------------------------------------------------------------

json eng_ideal_invariants(const json& params, const Ctx& ctx) {
  auto dm = varieties::build_dual_ideal(case_param(params), ctx.field);
  auto gb = buchberger(dm.gens, ctx.limits);
  auto hd = hilbert_data(gb);
  return {{"proj_dim", hd.proj_dim}, {"degree", to_ll(hd.degree)}};
}

json eng_span_defect(const json& params, const Ctx& ctx) {
  auto dm = varieties::build_dual_ideal(case_param(params), ctx.field);
  auto gb = buchberger(dm.gens, ctx.limits);
  return hilbert_data(gb).span_defect;
}

json eng_reduced_basis(const json& params, const Ctx& ctx) {
  std::vector<std::string> vars;
  for (const auto& v : params.at("vars")) vars.push_back(v.get<std::string>());
  RingPtr R = make_ring(vars, ctx.field);
  std::vector<Polynomial> gens;
  for (const auto& s : params.at("gens"))
    gens.push_back(parse_poly(s.get<std::string>(), R));
  auto gb = buchberger(gens, ctx.limits);
  json out = json::array();
  for (const auto& g : gb.gens) out.push_back(g.str());
  return out;
}

json eng_jacobian_rank(const json& params, const Ctx& ctx) {
  CaseId c = case_param(params);
  std::string at = params.at("at").get<std::string>();
  int n = params.value("samples", ctx.samples);
  auto dm = varieties::build_dual_ideal(c, ctx.field);
  int rank = -1;
  bool unanimous = true;
  for (int i = 0; i < n; ++i) {
    std::uint64_t s = derive_seed(ctx.seed, i);
    std::vector<Scalar> point;
    if (at == "generic") {
      point = varieties::fiber_sample(c, ctx.field, s).ambient_point;
    } else if (at == "d_zero") {
      if (c != CaseId::G5) throw error("d_zero points are a G5 probe");
      Rng rng(s);
      point.assign(16, Scalar::zero(ctx.field));
      auto p = rng.nonzero_vector(ctx.field, 4);
      for (int k = 0; k < 4; ++k) point[12 + k] = p[k];
    } else {
      throw error("unknown point kind: " + at);
    }
    int r = jacobian_rank_at(dm.gens, point);
    if (rank < 0) rank = r;
    if (r != rank) unanimous = false;
  }
  return {{"samples", n}, {"rank", rank}, {"unanimous", unanimous}};
}

json eng_pushforward_degree(const json& params, const Ctx&) {
  auto [E, Ep] = varieties::bundle_chern_data(case_param(params));
  std::string side = params.value("side", "Eperp");
  return chow::pushforward_degree(side == "E" ? E : Ep);
}

json eng_degree_crosscheck(const json& params, const Ctx& ctx) {
  CaseId c = case_param(params);
  auto dm = varieties::build_dual_ideal(c, ctx.field);
  auto hd = hilbert_data(buchberger(dm.gens, ctx.limits));
  auto [E, Ep] = varieties::bundle_chern_data(c);
  long long chow_deg = chow::pushforward_degree(Ep);
  return {{"groebner", to_ll(hd.degree)},
          {"chow", chow_deg},
          {"equal", to_ll(hd.degree) == chow_deg}};
}

json eng_b5_product(const json&, const Ctx&) {
  auto R = chow::b5_ring();
  using chow::ChowClass;
  ChowClass H = ChowClass::basis(R, 1, 0);
  ChowClass l = ChowClass::basis(R, 2, 0);
  ChowClass pt = ChowClass::basis(R, 3, 0);
  chow::ChernPoly a{R, 3, {ChowClass::unit(R), H, l * 3, pt}};
  chow::ChernPoly b{R, 3, {ChowClass::unit(R), H, l * 5, pt * 5}};
  auto w = chern_whitney(a, b);
  return {{"c1", w.at(1).str()}, {"c2", w.at(2).str()}, {"c3", w.at(3).str()}};
}

json eng_canonical_class(const json& params, const Ctx&) {
  CaseId c = case_param(params);
  auto [E, Ep] = varieties::bundle_chern_data(c);
  auto mk = varieties::base_minus_canonical(c, Ep.base);
  auto kc = chow::canonical_class(Ep, mk);
  return {{"taut", kc.taut_coeff}, {"base", kc.base_class.str()}};
}

json eng_ac_hat_identities(const json&, const Ctx&) {
  auto R = chow::ac_hat_ring();
  using chow::ChowClass;
  ChowClass cA = ChowClass::basis(R, 1, 0);
  ChowClass Fa = ChowClass::basis(R, 1, 1);
  ChowClass cB = cA - Fa;
  ChowClass Fb = cA - Fa * 2;
  auto deg = [](const ChowClass& x) { return x.integrate(); };
  return {{"cA3cB", deg(cA * cA * cA * cB)},
          {"cAcB3", deg(cA * cB * cB * cB)},
          {"cB4", deg(cB * cB * cB * cB)},
          {"cB3Fb", deg(cB * cB * cB * Fb)},
          {"cB2Fb2", deg(cB * cB * Fb * Fb)},
          {"Fb3cB", deg(Fb * Fb * Fb * cB)}};
}

json eng_self_duality(const json&, const Ctx&) {
  auto [E, Ep] = varieties::bundle_chern_data(CaseId::G6Q);
  return chow::pushforward_degree(E) == chow::pushforward_degree(Ep);
}

json eng_self_duality_value(const json&, const Ctx&) {
  auto [E, Ep] = varieties::bundle_chern_data(CaseId::G6Q);
  return {{"E", chow::pushforward_degree(E)},
          {"Eperp", chow::pushforward_degree(Ep)}};
}

json eng_projectivization_dims(const json&, const Ctx&) {
  json out;
  for (CaseId c : {CaseId::G4, CaseId::G5, CaseId::G6Q, CaseId::G6C, CaseId::G8})
    out[varieties::case_name(c)] = varieties::projectivization_dim(c);
  return out;
}

multigraded::CISpec spec_param(const json& params) {
  multigraded::CISpec spec;
  spec.m = params.at("m").get<int>();
  spec.n = params.at("n").get<int>();
  for (const auto& d : params.at("divisors"))
    spec.divisors.push_back({d.at(0).get<int>(), d.at(1).get<int>()});
  return spec;
}

json eng_curve_invariants(const json& params, const Ctx&) {
  auto ci = multigraded::ci_curve_invariants(spec_param(params));
  return {{"d1", ci.d1}, {"d2", ci.d2}, {"g", ci.g}};
}

json eng_canonical_sum(const json& params, const Ctx&) {
  auto ci = multigraded::ci_curve_invariants(spec_param(params));
  return ci.d1 + ci.d2 == 2 * ci.g - 2;
}

json eng_rr_h0(const json& params, const Ctx&) {
  return multigraded::rr_h0(params.at("d").get<long long>(),
                            params.at("g").get<long long>());
}

json eng_quadric_count(const json& params, const Ctx&) {
  return multigraded::canonical_quadric_count(params.at("g").get<long long>());
}

json eng_linear_section(const json& params, const Ctx& ctx) {
  CaseId c = case_param(params);
  int codim = params.at("codim").get<int>();
  int nseeds = params.value("seeds", 3);
  std::vector<varieties::SectionInvariants> runs;
  for (int i = 0; i < nseeds; ++i)
    runs.push_back(varieties::linear_section_invariants(
        c, codim, ctx.field, derive_seed(ctx.seed, i), ctx.limits));
  bool stable = true;
  for (const auto& r : runs)
    if (!(r == runs[0])) stable = false;
  json out = {{"proj_dim", runs[0].proj_dim},
              {"degree", to_ll(runs[0].degree)},
              {"stable", stable}};
  if (params.value("report_hp", true))
    out["hilbert_poly"] = poly_in_t(runs[0].hilbert_poly);
  return out;
}

json eng_cor46(const json& params, const Ctx& ctx) {
  int nseeds = params.value("seeds", 1);
  json out;
  for (int i = 0; i < nseeds; ++i) {
    auto [eta, xi] =
        varieties::random_cor46_input(ctx.field, derive_seed(ctx.seed, i));
    auto dm = varieties::cor46_section(eta, xi);
    auto gb = buchberger(dm.gens, ctx.limits);
    auto hd = hilbert_data(gb);
    if (hd.proj_dim != 1) throw error("section not a curve");
    auto ci = multigraded::ci_curve_invariants(
        {2, 3, {{1, 1}, {1, 1}, {1, 1}, {1, 2}}});
    json one = {{"proj_dim", hd.proj_dim},
                {"degree", to_ll(hd.degree)},
                {"hilbert_poly", poly_in_t(hd.hilbert_poly)},
                {"ci", {ci.d1, ci.d2, ci.g}},
                {"consistent", to_ll(hd.degree) == ci.d1 + ci.d2}};
    if (i == 0)
      out = one;
    else if (out != one)
      throw error("seed instability in curve section");
  }
  return out;
}

json eng_cubic_identity(const json&, const Ctx&) {
  return varieties::cubic_identity_check();
}

json eng_sing_gradient(const json& params, const Ctx&) {
  return varieties::sing_gradient_check(
      params.at("component").get<std::string>());
}

json eng_cor63(const json& params, const Ctx& ctx) {
  int nseeds = params.value("seeds", 5);
  json first;
  bool unanimous = true;
  for (int i = 0; i < nseeds; ++i) {
    auto r = varieties::cor63_probe(ctx.field, derive_seed(ctx.seed, i),
                                    ctx.limits);
    json one = {{"sing_count", to_ll(r.sing_count)},
                {"on_q0", r.on_q0_component},
                {"hessian_rank", r.hessian_rank}};
    if (i == 0)
      first = one;
    else if (one != first)
      unanimous = false;
  }
  first["runs"] = nseeds;
  first["unanimous"] = unanimous;
  return first;
}

json eng_lemma42(const json& params, const Ctx& ctx) {
  std::string kind = params.at("kind").get<std::string>();
  int nseeds = params.value("seeds", 10);
  long long degree = -1;
  bool unanimous = true;
  for (int i = 0; i < nseeds; ++i) {
    auto r = varieties::lemma42_probe(kind == "line2"
                                          ? varieties::Lemma42Kind::line2
                                          : varieties::Lemma42Kind::plane3,
                                      ctx.field, derive_seed(ctx.seed, i));
    if (r.contained) throw error("random draw landed inside the variety");
    long long d = to_ll(r.degree);
    if (degree < 0) degree = d;
    if (d != degree) unanimous = false;
  }
  return {{"seeds", nseeds}, {"degree", degree}, {"unanimous", unanimous}};
}

json eng_containment(const json& params, const Ctx& ctx) {
  int n = params.value("samples", ctx.samples);
  return varieties::containment_check(case_param(params), ctx.field, n,
                                      ctx.seed);
}

json eng_lemma22_random(const json& params, const Ctx& ctx) {
  int n = params.at("n").get<int>();
  int r = params.at("r").get<int>();
  int l = params.at("l").get<int>();
  int trials = params.value("trials", 1000);
  int holds = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(ctx.seed, t));
    auto sample_space = [&](int dim) {
      for (;;) {
        Matrix rows;
        for (int i = 0; i < dim; ++i) rows.push_back(rng.vector(ctx.field, n));
        auto sp = Subspace::from_rows(n, ctx.field, rows);
        if (sp.dim() == dim) return sp;
      }
    };
    auto E = sample_space(r);
    auto L = sample_space(l);
    if (lemma22_verify(E, L).holds) ++holds;
  }
  return {{"trials", trials}, {"holds", holds}};
}

json eng_fiber_orthogonality(const json& params, const Ctx& ctx) {
  CaseId c = case_param(params);
  int n = params.value("samples", ctx.samples);
  auto [E, Ep] = varieties::bundle_chern_data(c);
  bool has_ideal = (c == CaseId::G4 || c == CaseId::G5);
  std::vector<Polynomial> gens;
  if (has_ideal) gens = varieties::build_dual_ideal(c, ctx.field).gens;
  int failures = 0;
  for (int i = 0; i < n; ++i) {
    auto fp = varieties::fiber_sample(c, ctx.field, derive_seed(ctx.seed, i));
    bool ok = fp.E_s.dim() == E.rank &&
              fp.E_s_perp.dim() == fp.section_space_dim - E.rank;
    for (const auto& a : fp.E_s.basis())
      for (const auto& b : fp.E_s_perp.basis()) {
        Scalar dot = Scalar::zero(ctx.field);
        for (std::size_t k = 0; k < a.size(); ++k) dot += a[k] * b[k];
        if (!dot.is_zero()) ok = false;
      }
    if (has_ideal)
      for (const auto& g : gens)
        if (!poly_eval(g, fp.ambient_point).is_zero()) ok = false;
    if (!ok) ++failures;
  }
  return {{"samples", n}, {"failures", failures}};
}

json suite_json(const piclattice::SuiteReport& r) {
  json out;
  for (const auto& [k, v] : r.values) out[k] = v;
  out["pass"] = r.pass;
  return out;
}

json eng_prop73(const json&, const Ctx&) {
  return suite_json(piclattice::prop73_suite());
}

json eng_rem45(const json&, const Ctx&) {
  return suite_json(piclattice::rem45_suite());
}

using Engine = std::function<json(const json&, const Ctx&)>;

const std::map<std::string, Engine>& registry() {
  static const std::map<std::string, Engine> R = {
      {"groebner.ideal_invariants", eng_ideal_invariants},
      {"groebner.span_defect", eng_span_defect},
      {"groebner.reduced_basis", eng_reduced_basis},
      {"groebner.jacobian_rank", eng_jacobian_rank},
      {"chow.pushforward_degree", eng_pushforward_degree},
      {"chow.degree_crosscheck", eng_degree_crosscheck},
      {"chow.b5_product", eng_b5_product},
      {"chow.canonical_class", eng_canonical_class},
      {"chow.ac_hat_identities", eng_ac_hat_identities},
      {"chow.self_duality", eng_self_duality},
      {"chow.self_duality_value", eng_self_duality_value},
      {"chow.projectivization_dims", eng_projectivization_dims},
      {"multigraded.curve_invariants", eng_curve_invariants},
      {"multigraded.canonical_sum", eng_canonical_sum},
      {"multigraded.rr_h0", eng_rr_h0},
      {"multigraded.quadric_count", eng_quadric_count},
      {"varieties.linear_section", eng_linear_section},
      {"varieties.cor46", eng_cor46},
      {"varieties.cubic_identity", eng_cubic_identity},
      {"varieties.sing_gradient", eng_sing_gradient},
      {"varieties.cor63", eng_cor63},
      {"varieties.lemma42", eng_lemma42},
      {"varieties.containment", eng_containment},
      {"lindual.lemma22_random", eng_lemma22_random},
      {"lindual.fiber_orthogonality", eng_fiber_orthogonality},
      {"piclattice.prop73_suite", eng_prop73},
      {"piclattice.rem45_suite", eng_rem45},
  };
  return R;
}

}  // namespace

std::vector<std::string> engine_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : registry()) names.push_back(k);
  return names;
}

ClaimManifest parse_manifest(const json& doc) {
  ClaimManifest m;
  if (doc.contains("field")) {
    const auto& f = doc["field"];
    if (f.is_string() && f.get<std::string>() == "Q")
      m.default_field = QQ();
    else if (f.is_object() && f.contains("prime"))
      m.default_field = GF(f["prime"].get<std::uint64_t>());
    else
      throw error("manifest field config must be \"Q\" or {\"prime\": p}");
  }
  m.seed = doc.value("seed", std::uint64_t{1});
  m.samples = doc.value("samples", 100);
  if (doc.contains("limits")) {
    m.limits.max_pair_degree =
        doc["limits"].value("max_pair_degree", m.limits.max_pair_degree);
    m.limits.max_basis = doc["limits"].value("max_basis", m.limits.max_basis);
  }
  std::vector<std::string> seen;
  for (const auto& c : doc.at("claims")) {
    ClaimRecord r;
    r.id = c.at("id").get<std::string>();
    r.engine = c.at("engine").get<std::string>();
    r.params = c.value("params", json::object());
    r.expected = c.value("expected", json("report-only"));
    r.anchor = c.value("anchor", "");
    r.field_override = c.value("char", "");
    for (const auto& s : seen)
      if (s == r.id) throw error("duplicate claim id: " + r.id);
    seen.push_back(r.id);
    m.claims.push_back(std::move(r));
  }
  return m;
}

ClaimManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open manifest: " + path);
  json doc = json::parse(in);
  return parse_manifest(doc);
}

std::string builtin_manifest_path() {
  return std::string(DUALVAR_DATA_DIR) + "/paper_core.json";
}

std::vector<ClaimReport> run_manifest(const ClaimManifest& manifest,
                                      int parallelism,
                                      const std::vector<std::string>& only) {
  std::vector<const ClaimRecord*> selected;
  for (const auto& c : manifest.claims) {
    if (only.empty()) {
      selected.push_back(&c);
    } else {
      for (const auto& id : only)
        if (c.id == id) {
          selected.push_back(&c);
          break;
        }
    }
  }
  std::vector<ClaimReport> reports(selected.size());

  auto run_one = [&](std::size_t idx) {
    const ClaimRecord& c = *selected[idx];
    ClaimReport rep;
    rep.id = c.id;
    rep.expected = c.expected;
    rep.seed = derive_seed(manifest.seed, fnv1a(c.id));
    Ctx ctx;
    ctx.field = manifest.default_field;
    if (c.field_override == "Q") ctx.field = QQ();
    if (c.field_override == "p") ctx.field = GF(kDefaultPrime);
    ctx.seed = rep.seed;
    ctx.samples = manifest.samples;
    ctx.limits = manifest.limits;
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto it = registry().find(c.engine);
      if (it == registry().end()) throw error("unknown operation: " + c.engine);
      rep.computed = it->second(c.params, ctx);
      bool report_only = c.expected.is_string() &&
                         c.expected.get<std::string>() == "report-only";
      if (report_only)
        rep.status = "report-only";
      else
        rep.status = (rep.computed == c.expected) ? "pass" : "fail";
    } catch (const limit_error& e) {
      rep.status = "limit";
      rep.computed = {{"error", e.what()},
                      {"degree_reached", e.degree_reached},
                      {"basis_size", e.basis_size}};
    } catch (const std::exception& e) {
      rep.status = "fail";
      rep.computed = {{"error", e.what()}};
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    reports[idx] = std::move(rep);
  };

  int jobs = std::max(1, parallelism);
  if (jobs == 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= selected.size()) return;
          run_one(i);
        }
      });
    for (auto& th : pool) th.join();
  }
  return reports;
}

void emit_text(const std::vector<ClaimReport>& reports, std::ostream& os) {
  int pass = 0, fail = 0, limit = 0, report = 0;
  os << std::left << std::setw(28) << "claim" << std::setw(13) << "status"
     << std::setw(10) << "ms"
     << "computed / expected\n";
  os << std::string(86, '-') << "\n";
  for (const auto& r : reports) {
    os << std::left << std::setw(28) << r.id << std::setw(13) << r.status
       << std::setw(10) << r.elapsed_ms;
    if (r.status == "report-only") {
      os << r.computed.dump();
      ++report;
    } else {
      os << r.computed.dump() << " / " << r.expected.dump();
      if (r.status == "pass") ++pass;
      if (r.status == "fail") ++fail;
      if (r.status == "limit") ++limit;
    }
    os << "\n";
  }
  os << std::string(86, '-') << "\n";
  os << pass << " pass / " << fail << " fail / " << limit << " limit";
  if (report) os << " (" << report << " report-only)";
  os << "\n";
}

json report_document(const std::vector<ClaimReport>& reports) {
  json claims = json::array();
  int pass = 0, fail = 0, limit = 0, report = 0;
  for (const auto& r : reports) {
    claims.push_back({{"id", r.id},
                      {"status", r.status},
                      {"expected", r.expected},
                      {"computed", r.computed},
                      {"elapsed_ms", r.elapsed_ms},
                      {"seed", r.seed}});
    if (r.status == "pass") ++pass;
    if (r.status == "fail") ++fail;
    if (r.status == "limit") ++limit;
    if (r.status == "report-only") ++report;
  }
  return {{"claims", claims},
          {"summary",
           {{"pass", pass},
            {"fail", fail},
            {"limit", limit},
            {"report_only", report}}}};
}

int exit_code(const std::vector<ClaimReport>& reports, bool strict_limits) {
  bool any_fail = false, any_limit = false;
  for (const auto& r : reports) {
    if (r.status == "fail") any_fail = true;
    if (r.status == "limit") any_limit = true;
  }
  if (any_fail) return 1;
  if (any_limit && strict_limits) return 3;
  return 0;
}

}  // namespace dualvar::claims
