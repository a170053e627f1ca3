#include "cohomcheck/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>

#include "cohomcheck/atlas.hpp"
#include "cohomcheck/chern.hpp"
#include "cohomcheck/cyclic.hpp"
#include "cohomcheck/models.hpp"
#include "cohomcheck/spectral.hpp"
#include "cohomcheck/symbolic.hpp"

namespace cohomcheck {

using json = nlohmann::ordered_json;

namespace {

struct Outcome {
  bool pass = false;
  json witness;
};

struct Check {
  std::string id, group, paper_ref;
  std::function<Outcome()> run;
};

// Lazily built objects shared between checks.
class Context {
 public:
  explicit Context(int p) : p_(p) {}
  int p() const { return p_; }

  const Atlas& atlas() {
    if (!atlas_) atlas_ = std::make_unique<Atlas>(p_);
    return *atlas_;
  }
  const BHBase& bh() {
    if (!bh_) bh_ = std::make_unique<BHBase>(atlas());
    return *bh_;
  }
  const CentralSS& bh_ss() {
    if (!bh_ss_) {
      bh_ss_ = std::make_unique<CentralSS>(bh().base, 4);
      bh_ss_->set_transgressions(bh().tau2, bh().tau3);
    }
    return *bh_ss_;
  }
  const PiH2Model::Facts& pih2_facts() {
    if (!pih2_facts_) pih2_facts_ = bh().pih2->facts(atlas());
    return *pih2_facts_;
  }
  const BHFacts& bh_facts() {
    if (!bh_facts_) bh_facts_ = bh_spectral_facts(bh(), bh_ss());
    return *bh_facts_;
  }
  const HModel& h() {
    if (!h_) h_ = std::make_unique<HModel>(atlas(), 4);
    return *h_;
  }
  const BocksteinImageReport& bockstein() {
    if (!bock_) bock_ = bockstein_image_check(h());
    return *bock_;
  }
  const CharacterReport& characters() {
    if (!chars_) chars_ = character_report(atlas());
    return *chars_;
  }
  const KernelImageAnalysis& cyclic() {
    if (!cyc_) cyc_ = kernel_image_analysis(p_);
    return *cyc_;
  }
  const E2Terms& e2() {
    if (!e2_) e2_ = e2_terms(p_);
    return *e2_;
  }

 private:
  int p_;
  std::unique_ptr<Atlas> atlas_;
  std::unique_ptr<BHBase> bh_;
  std::unique_ptr<CentralSS> bh_ss_;
  std::optional<PiH2Model::Facts> pih2_facts_;
  std::optional<BHFacts> bh_facts_;
  std::unique_ptr<HModel> h_;
  std::optional<BocksteinImageReport> bock_;
  std::optional<CharacterReport> chars_;
  std::optional<KernelImageAnalysis> cyc_;
  std::optional<E2Terms> e2_;
};

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

json class_json(const CohomologyClass& c) {
  json j;
  j["degree"] = c.degree;
  j["coords"] = json::array();
  for (auto v : c.coords) j["coords"].push_back(static_cast<int>(v));
  return j;
}

Outcome fact(const BHFacts& f, const std::string& name) {
  for (const auto& [n, ok] : f.items)
    if (n == name) return {ok, json{{"fact", n}, {"holds", ok}}};
  throw VerifyError("unknown fact " + name);
}

std::vector<Check> build_checks(Context& C) {
  const int P = C.p();
  std::vector<Check> out;
  auto add = [&](std::string id, std::string group, std::string ref, std::function<Outcome()> f) {
    out.push_back({std::move(id), std::move(group), std::move(ref), std::move(f)});
  };

  // structure
  add("structure.orders", "structure", "group orders", [&C, P] {
    const auto& at = C.atlas();
    json w;
    bool ok = true;
    auto put = [&](const char* name, long long got, long long want) {
      w[name] = {{"order", got}, {"expected", want}};
      ok = ok && got == want;
    };
    put("p^{1+2}", at.extraspecial.order(), ipow(P, 3));
    put("H2", at.h2.order(), ipow(P, P + 1));
    put("A2", at.a2.order(), ipow(P, 2));
    put("piH2", at.pi_h2.order(), ipow(P, P));
    put("H", at.h.order(), ipow(P, P + 3));
    put("A3", at.a3.order(), ipow(P, 3));
    put("A3'", at.a3p.order(), ipow(P, 3));
    return Outcome{ok, w};
  });
  add("structure.identities", "structure", "generator identities", [&C, P] {
    const auto& at = C.atlas();
    const auto& m = at.model();
    json w;
    bool ok = true;
    for (int k = 1; k <= P; ++k) {
      bool e = m.power(at.su("sigma" + std::to_string(k)), P) == at.su("xi");
      w["sigma" + std::to_string(k) + "^p = xi"] = e;
      ok = ok && e;
    }
    if (P == 3) {
      bool e = m.multiply(at.su("sigma2"), m.power(at.su("sigma3"), 2)) ==
               m.multiply(at.su("xi"), m.inverse(at.su("alpha")));
      w["sigma2 sigma3^2 = xi alpha^-1"] = e;
      ok = ok && e;
    }
    return Outcome{ok, w};
  });
  add("structure.pi_h_product", "structure", "pi(H) = A2 x piH2", [&C] {
    const auto& at = C.atlas();
    const auto& ph = at.pi_h;
    std::set<std::pair<int, int>> seen;
    for (int x = 0; x < ph.order(); ++x) seen.insert({(*at.pi_h_to_a2)(x), (*at.pi_h_to_pi_h2)(x)});
    bool injective = static_cast<int>(seen.size()) == ph.order();
    bool sizes = ph.order() == at.a2.order() * at.pi_h2.order();
    bool onto = at.h_to_pi_h->is_surjective() && at.h.order() == at.p() * ph.order();
    json w{{"order", ph.order()}, {"projections_injective", injective}, {"order_product", sizes},
           {"H_onto_with_kernel_order_p", onto}};
    return Outcome{injective && sizes && onto, w};
  });
  add("structure.elementary_abelian", "structure", "A3, A3' elementary abelian", [&C] {
    const auto& at = C.atlas();
    bool ok = is_elementary_abelian(at.a3) && is_elementary_abelian(at.a3p) && at.a3_to_h->is_injective() &&
              at.a3p_to_h->is_injective();
    return Outcome{ok, json{{"A3", is_elementary_abelian(at.a3)}, {"A3'", is_elementary_abelian(at.a3p)},
                            {"g_injective", at.a3_to_h->is_injective()},
                            {"g'_injective", at.a3p_to_h->is_injective()}}};
  });

  // extension classes
  add("extension.pih2_class", "extension", "extension class of H2 -> piH2", [&C] {
    const auto& m = *C.bh().pih2;
    json w{{"raw_class", class_json(m.raw_u2)}, {"normalizing_scalar", m.u2_scale}, {"i*u2", class_json(m.iu2)}};
    return Outcome{!m.iu2.is_zero() && m.u2_scale != 0, w};
  });
  add("extension.bh_class", "extension", "extension class of H -> pi(H)", [&C] {
    auto e = check_bh_extension(C.atlas(), C.bh());
    json w{{"kunneth", e.kunneth_ok}, {"scalar", e.scalar ? json(*e.scalar) : json(nullptr)}};
    return Outcome{e.kunneth_ok && e.scalar == 1, w};
  });

  // H*(piH2)
  auto pih2_fact = [&C](bool PiH2Model::Facts::*field) {
    return [&C, field] {
      const auto& f = C.pih2_facts();
      json w{{"betti", C.bh().pih2->res->betti_numbers()}, {"value", f.*field}};
      return Outcome{f.*field, w};
    };
  };
  add("pih2.restrictions", "pih2", "cohomology of piH2", pih2_fact(&PiH2Model::Facts::restrictions_ok));
  add("pih2.u2v1_nonzero", "pih2", "cohomology of piH2", pih2_fact(&PiH2Model::Facts::u2v1_nonzero));
  add("pih2.u2_squared_nonzero", "pih2", "cohomology of piH2", pih2_fact(&PiH2Model::Facts::u2_squared_nonzero));
  add("pih2.u2w1_zero", "pih2", "cohomology of piH2", pih2_fact(&PiH2Model::Facts::u2w1_zero));
  add("pih2.q0_w1u2_zero", "pih2", "cohomology of piH2", pih2_fact(&PiH2Model::Facts::q0_w1u2_zero));

  // oracles
  add("oracle.bar_pih2", "oracle", "bar complex versus minimal resolution", [&C] {
    const auto& at = C.atlas();
    auto rep = bar_oracle(at.pi_h2, 4);
    MinimalResolution res(at.pi_h2, 4);
    json w{{"bar", rep.betti}, {"resolution", res.betti_numbers()}, {"top_bounds_met", rep.top_bounds_met},
           {"top_columns_scanned", rep.top_columns_scanned}, {"top_columns_total", rep.top_columns_total}};
    return Outcome{rep.betti == res.betti_numbers(), w};
  });
  add("oracle.elemab_betti", "oracle", "elementary abelian Betti numbers", [&C, P] {
    const auto& at = C.atlas();
    json w = json::array();
    bool ok = true;
    std::vector<const FiniteGroup*> gs{&at.cyc_beta, &at.a2, &at.a3};
    for (std::size_t n = 0; n < gs.size(); ++n) {
      MinimalResolution res(*gs[n], 6);
      std::vector<std::string> letters(n + 1, "a");
      for (std::size_t i = 0; i <= n; ++i) letters[i] = std::string(1, static_cast<char>('a' + i));
      SymbolicRing S(P, letters);
      std::vector<int> want;
      for (int d = 0; d <= 6; ++d) want.push_back(S.dim(d));
      ok = ok && res.betti_numbers() == want;
      w.push_back({{"rank", n + 1}, {"resolution", res.betti_numbers()}, {"model", want}});
    }
    return Outcome{ok, w};
  });

  // cyclic module
  add("cyclic.kernel", "cyclic", "cyclic module: ker(1 - g)", [&C] {
    const auto& a = C.cyclic();
    return Outcome{a.ker_one_minus_g.size() == 1 && a.u_tilde_spans_kernel,
                   json{{"dim", a.ker_one_minus_g.size()}, {"u_tilde_spans", a.u_tilde_spans_kernel}}};
  });
  add("cyclic.u_tilde_in_image", "cyclic", "cyclic module: u~ in im(1 - g)", [&C] {
    const auto& a = C.cyclic();
    json u = json::array();
    for (auto v : a.u_tilde) u.push_back(static_cast<int>(v));
    return Outcome{a.u_tilde_in_image, json{{"u_tilde", u}, {"in_image", a.u_tilde_in_image}}};
  });
  add("cyclic.image_dim", "cyclic", "cyclic module: dim im(1 - g)", [&C, P] {
    const auto& a = C.cyclic();
    return Outcome{static_cast<int>(a.im_one_minus_g.size()) == P - 2,
                   json{{"dim", a.im_one_minus_g.size()}, {"expected", P - 2}}};
  });
  add("cyclic.nilpotent", "cyclic", "cyclic module: (1 - g)^{p-1} = 0", [&C] {
    const auto& a = C.cyclic();
    return Outcome{a.power_is_zero && a.g_order_p && a.power_equals_norm,
                   json{{"power_zero", a.power_is_zero}, {"g_order_p", a.g_order_p},
                        {"power_equals_norm", a.power_equals_norm}}};
  });
  add("cyclic.e2_terms", "cyclic", "cyclic module: E2^{0,2}, E2^{1,2}", [&C] {
    const auto& e = C.e2();
    return Outcome{e.dim_e2_02 == 1 && e.dim_e2_12 == 1 && e.rep_02_valid && e.rep_12_valid, e.to_json()};
  });

  // BG case
  add("bg.einf_degree4", "bg", "BG-case spectral sequence", [P] {
    auto base = tensor(bpu_table(P), bpu_table(P), 6);
    auto b2 = base.at("(u2,1)");
    auto a2 = base.sub(b2, base.at("(1,u2)"));
    auto a3 = base.sub(base.at("(u3,1)"), base.at("(1,u3)"));
    CentralSS ss(base, 4);
    ss.set_transgressions(a2, a3);
    json w;
    bool ok = true;
    for (int s = 0; s <= 4; ++s) {
      auto e = ss.e_infinity(s, 4 - s);
      w["E_inf^{" + std::to_string(s) + "," + std::to_string(4 - s) + "}"] = {{"dim", e.dim},
                                                                              {"certificate", to_string(e.certificate)}};
      int want = (s == 2 || s == 4) ? 1 : 0;
      ok = ok && e.dim == want && e.certificate != Certificate::None;
    }
    bool b22 = ss.is_basis_of(4, 2, 2, {b2.coords}), b40 = ss.is_basis_of(4, 4, 0, {base.mul(b2, b2).coords});
    w["b2 z2 spans (2,2)"] = b22;
    w["b2^2 spans (4,0)"] = b40;
    return Outcome{ok && b22 && b40, w};
  });
  add("bg.derivation", "bg", "BG-case spectral sequence", [P] {
    auto base = tensor(bpu_table(P), bpu_table(P), 6);
    auto a2 = base.sub(base.at("(u2,1)"), base.at("(1,u2)"));
    auto a3 = base.sub(base.at("(u3,1)"), base.at("(1,u3)"));
    CentralSS ss(base, 4);
    ss.set_transgressions(a2, a3);
    auto m = ss.check_multiplicativity(), sq = ss.check_square_zero();
    return Outcome{m.empty() && sq.empty(), json{{"leibniz", m.empty() ? std::string("ok") : m},
                                                 {"square_zero", sq.empty() ? std::string("ok") : sq}}};
  });

  // BH case
  const std::vector<std::pair<std::string, std::string>> bh_items{
      {"bh.e2_basis", "E2^{1,0} basis v1 w1 x1 y1"},
      {"bh.einf_03", "Einf^{0,3} = 0"},
      {"bh.einf_12", "Einf^{1,2} = 0"},
      {"bh.einf_04", "Einf^{0,4} = 0"},
      {"bh.einf_13", "Einf^{1,3} = 0"},
      {"bh.einf_21", "Einf^{2,1} = span{w1x1z1, w1y1z1}"},
      {"bh.einf_22", "Einf^{2,2} = span{x1y1z2, w1x1z2, w1y1z2}"},
      {"bh.d2_w1x1z1", "d2(w1x1z1) = 0"},
      {"bh.d2_x1y1z1", "d2(x1y1z1 + i*u2 z1) = -(i*u2)^2 != 0"},
      {"bh.d3_w1x1z2", "d3(w1x1z2) = 0"},
      {"bh.kernel_d2_21", "ker d2 on E2^{2,1} = span{w1x1z1, w1y1z1}"}};
  for (const auto& [id, name] : bh_items)
    add(id, "bh", "BH-case spectral sequence", [&C, name = name] { return fact(C.bh_facts(), name); });
  for (int n : {3, 4})
    add("bh.convergence_n" + std::to_string(n), "bh", "BH-case dimension cross-check", [&C, n] {
      const auto& ss = C.bh_ss();
      int got = ss.assemble_dim(n), want = C.h().res->betti(n);
      json parts;
      for (int s = 0; s <= n; ++s) parts[std::to_string(s) + "," + std::to_string(n - s)] = ss.e_infinity(s, n - s).dim;
      return Outcome{got == want, json{{"sum_E_inf", got}, {"betti_H", want}, {"positions", parts},
                                       {"resolution_seconds", C.h().seconds_resolution}}};
    });

  // Bockstein image
  add("bockstein.image_pairs", "bockstein", "Bockstein image exclusion", [&C] {
    const auto& r = C.bockstein();
    return Outcome{r.all_equal && r.image_dim > 0 && r.zero_pair_equal, r.to_json()};
  });
  add("bockstein.surrogate", "bockstein", "Bockstein image exclusion", [&C] {
    const auto& r = C.bockstein();
    return Outcome{r.surrogate == std::pair{1, 0} && r.surrogate_excluded,
                   json{{"surrogate", {r.surrogate.first, r.surrogate.second}}, {"excluded", r.surrogate_excluded}}};
  });

  // coefficient invariant
  add("sweep.coefficients", "sweep", "coefficient invariant over (alpha, alpha1, alpha2)", [P] {
    SymbolicRing R4(P, {"x", "y", "w", "z"});
    InducedMap g(P, {{1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    InducedMap gp(P, {{1, 0, 0}, {0, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    auto x1 = R4.gen("x1"), y1 = R4.gen("y1"), w1 = R4.gen("w1"), z2 = R4.gen("z2");
    int triples = 0, good = 0;
    for (int a = 0; a < P; ++a)
      for (int a1 = 0; a1 < P; ++a1)
        for (int a2 = 0; a2 < P; ++a2) {
          ++triples;
          auto c = a * (x1 * y1 * z2) + a1 * (w1 * x1 * z2) + a2 * (w1 * y1 * z2);
          auto rg = reduce_mod_M(g(c), 2), rgp = reduce_mod_M(gp(c), 2);
          bool coeffs = x1y1z2_coefficient(g(c)) == ((a - a1) % P + P) % P && x1y1z2_coefficient(gp(c)) == (P - a1) % P;
          bool q1_nonzero = a == 0 || !q1(rg).is_zero() || !q1(rgp).is_zero();
          if (coeffs && q1_nonzero) ++good;
        }
    return Outcome{good == triples, json{{"triples", triples}, {"holding", good}}};
  });

  // characters
  add("chern.delta", "chern", "character identities", [&C] {
    const auto& r = C.characters();
    return Outcome{r.delta_vanishes && r.class_functions, json{{"delta_vanishes", r.delta_vanishes}}};
  });
  add("chern.gamma2", "chern", "character identities", [&C, P] {
    const auto& r = C.characters();
    return Outcome{r.gamma2_equals_p_lambda1,
                   json{{"equal_as_class_functions", r.gamma2_equals_p_lambda1},
                        {"difference", std::to_string(r.gamma2_trivial_defect) + " * trivial"},
                        {"p", P}}};
  });
  add("chern.gamma2_reduced", "chern", "character identities", [&C] {
    const auto& r = C.characters();
    return Outcome{r.gamma2_reduced_equal, json{{"equal_modulo_trivial", r.gamma2_reduced_equal},
                                                {"trivial_defect", r.gamma2_trivial_defect}}};
  });
  add("chern.a3_decomposition", "chern", "decomposition on A3", [&C] {
    const auto& r = C.characters();
    return Outcome{r.a3_decomposition_ok && r.a3_restriction_compatible,
                   json{{"plus_one", r.a3_plus}, {"minus_one", r.a3_minus}, {"other", r.a3_other},
                        {"compatible_through_H", r.a3_restriction_compatible}}};
  });
  add("chern.c2", "chern", "Chern classes via Whitney", [&C] {
    const auto& r = C.characters();
    return Outcome{r.c2_zero && r.c1_zero, json{{"c1_zero", r.c1_zero}, {"c2_zero_mod_p", r.c2_zero}}};
  });

  // Q1
  add("q1.formula", "q1", "Milnor operation Q1", [P] {
    json w;
    bool ok = true;
    std::set<int> ps{P, 5, 7};
    for (int q : ps) {
      SymbolicRing R(q, {"x", "y", "z"});
      auto x1 = R.gen("x1"), y1 = R.gen("y1");
      auto x2 = R.gen("x2"), y2 = R.gen("y2"), z2 = R.gen("z2");
      auto lhs = q1(x1 * y1 * z2);
      bool eq = lhs == pow(x2, q) * y1 * z2 - x1 * pow(y2, q) * z2;
      bool nz = !reduce_mod_M(lhs, 2).is_zero();
      w[std::to_string(q)] = {{"formula", eq}, {"nonzero_mod_M", nz}};
      if (q == 3) w["Q1(x1y1z2)"] = R.to_string(lhs);
      ok = ok && eq && nz;
    }
    return Outcome{ok, w};
  });
  add("q1.m_stable", "q1", "Milnor operation Q1", [P] {
    SymbolicRing R(P, {"x", "y", "z"});
    auto gens = m_generators(R, 2, 4);
    int stable = 0;
    for (const auto& g : gens)
      if (reduce_mod_M(q1(g), 2).is_zero()) ++stable;
    return Outcome{stable == static_cast<int>(gens.size()), json{{"generators", gens.size()}, {"stable", stable}}};
  });
  return out;
}

const std::map<std::string, std::vector<std::string>>& dependencies() {
  static const std::map<std::string, std::vector<std::string>> d{
      {"structure", {}},
      {"extension", {"structure"}},
      {"pih2", {"structure"}},
      {"oracle", {"structure"}},
      {"cyclic", {}},
      {"bg", {}},
      {"bh", {"structure", "extension", "pih2"}},
      {"bockstein", {"structure", "bh"}},
      {"sweep", {}},
      {"chern", {"structure"}},
      {"q1", {}}};
  return d;
}

// Groups that need the p = 3 sized computations.
bool needs_p3(const std::string& group) {
  return group == "extension" || group == "pih2" || group == "oracle" || group == "bh" || group == "bockstein";
}

// Groups that never build the atlas groups.
bool symbolic_only(const std::string& group) {
  return group == "cyclic" || group == "bg" || group == "sweep" || group == "q1";
}

std::string toolchain() {
#if defined(__clang__)
  return "clang " __clang_version__;
#elif defined(__GNUC__)
  return "gcc " __VERSION__;
#else
  return "unknown";
#endif
}

}  // namespace

std::vector<std::string> check_groups() {
  return {"structure", "extension", "pih2", "oracle", "cyclic", "bg", "bh", "bockstein", "sweep", "chern", "q1"};
}

bool VerificationReport::ok() const { return count("fail") == 0; }

int VerificationReport::count(const std::string& status) const {
  int n = 0;
  for (const auto& c : checks) n += c.status == status;
  return n;
}

json VerificationReport::to_json(bool with_runtimes) const {
  json j;
  j["p"] = p;
  j["checks"] = json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"id", c.id},
                           {"paper_ref", c.paper_ref},
                           {"status", c.status},
                           {"witness", c.witness},
                           {"runtime_ms", with_runtimes ? c.runtime_ms : 0.0}});
  j["version"] = version;
  return j;
}

VerificationReport verify_all(const VerifyOptions& opts) {
  const int P = opts.p;
  if (!is_prime(P) || P == 2) throw VerifyError("p is an odd prime number (got " + std::to_string(P) + ")");
  const bool small_only = P >= 7;
  if (P > 13 || (small_only && !opts.long_mode))
    throw VerifyError("supported primes: 3 and 5, or 7, 11, 13 with --long (symbolic and cyclic layers)");

  Context ctx(P);
  auto checks = build_checks(ctx);
  auto selected = [&](const Check& c) {
    if (opts.only.empty()) return true;
    for (const auto& o : opts.only)
      if (o == c.group || o == c.id) return true;
    return false;
  };
  std::set<std::string> known;
  for (const auto& c : checks) known.insert(c.group), known.insert(c.id);
  for (const auto& o : opts.only)
    if (!known.count(o)) throw VerifyError("unknown check or group '" + o + "'");

  VerificationReport rep;
  rep.p = P;
  rep.version = std::string("cohomcheck ") + kVersion + " (" + toolchain() + ")";
  std::set<std::string> broken;  // groups with a failed or skipped check
  for (const auto& c : checks) {
    if (!selected(c)) continue;
    CheckResult r{c.id, c.paper_ref, "", {}, 0};
    std::string blocker;
    for (const auto& d : dependencies().at(c.group))
      if (broken.count(d)) blocker = d;
    if (small_only && !symbolic_only(c.group))
      r.status = "skipped", r.witness = {{"reason", "p >= 7 runs the symbolic and cyclic layers only"}};
    else if (P != 3 && needs_p3(c.group))
      r.status = "skipped", r.witness = {{"reason", "computed at p = 3 only"}};
    else if (!blocker.empty())
      r.status = "skipped", r.witness = {{"reason", "depends on failed or skipped group '" + blocker + "'"}};
    else {
      auto t0 = std::chrono::steady_clock::now();
      try {
        auto o = c.run();
        r.status = o.pass ? "pass" : "fail";
        r.witness = o.witness.is_null() ? json{{"pass", o.pass}} : o.witness;
      } catch (const std::exception& e) {
        r.status = "fail";
        r.witness = {{"error", e.what()}};
      }
      r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
    if (r.status != "pass") broken.insert(c.group);
    rep.checks.push_back(std::move(r));
  }
  return rep;
}

}  // namespace cohomcheck
