#include "cohomcheck/models.hpp"

#include <chrono>
#include <sstream>

namespace cohomcheck {

namespace {

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// The H^1 class taking value 1 on element a and 0 on element b.
CohomologyClass dual_class(const CohomologyRing& ring, int a, int b) {
  const int P = ring.p();
  if (ring.dim(1) != 2) throw std::logic_error("dual_class: H^1 is not 2-dimensional");
  FpMatrix m(P, 2, 2);
  for (int i = 0; i < 2; ++i) {
    auto vals = ring.hom_of_class(ring.basis(1, i));
    m.at(0, static_cast<std::size_t>(i)) = static_cast<std::uint8_t>(vals[static_cast<std::size_t>(a)]);
    m.at(1, static_cast<std::size_t>(i)) = static_cast<std::uint8_t>(vals[static_cast<std::size_t>(b)]);
  }
  auto c = solve(m, FpVec{1, 0});
  if (!c) throw std::logic_error("dual_class: elements are dependent in the abelianization");
  return {1, *c};
}

int value_at(const CohomologyRing& ring, const CohomologyClass& u, const MonomialElement& e) {
  const auto& g = ring.resolution().group();
  return ring.hom_of_class(u)[static_cast<std::size_t>(g.index_of(e))];
}

}  // namespace

PiH2Model::PiH2Model(const Atlas& at, int D) {
  res = std::make_unique<MinimalResolution>(at.pi_h2, D);
  ring = std::make_unique<CohomologyRing>(*res);
  table = ring_table(*ring, D);
  const auto& g = at.pi_h2;
  int ib = g.index_of(at.su("beta")), is = g.index_of(at.su("sigma1"));
  w1 = dual_class(*ring, ib, is);
  v1 = dual_class(*ring, is, ib);
  raw_u2 = extension_class(*at.h2_to_pi_h2, at.su("xi"), *res);

  // u2 is normalized by its restriction x1 y1 to A2 = <alpha, beta>.
  MinimalResolution ra(at.a2, 2);
  CohomologyRing ca(ra);
  auto gi = at.a2.generator_indices();
  ElemabMatch ma(ca, {gi[0], gi[1]}, {"x", "y"}, 2);
  const auto& S = ma.model();
  auto xy = ma.to_ring(S.gen("x1") * S.gen("y1"), 2);
  auto inc = hom(at.a2, at.pi_h2, at.a2.generators());
  Restriction to_a2(inc, ra, *res, 2);
  auto e = to_a2(raw_u2);
  if (e != extension_class(*at.extraspecial_to_a2, at.su("xi"), ra))
    throw std::logic_error("PiH2Model: extension classes are not natural");
  for (int c = 1; c < at.p() && !u2_scale; ++c) {
    auto t = e;
    for (auto& v : t.coords) v = static_cast<std::uint8_t>((v * c) % at.p());
    if (t == xy) u2_scale = c;
  }
  if (!u2_scale) throw std::logic_error("PiH2Model: u2 does not restrict to a multiple of x1 y1");
  iu2 = raw_u2;
  for (auto& v : iu2.coords) v = static_cast<std::uint8_t>((v * u2_scale) % at.p());
  iu3 = ring->bockstein(iu2);
  table.named["v1"] = v1;
  table.named["w1"] = w1;
  table.named["i*u2"] = iu2;
  table.named["i*u3"] = iu3;
}

PiH2Model::Facts PiH2Model::facts(const Atlas& at) const {
  Facts f;
  const auto& R = *ring;
  f.u2v1_nonzero = !R.product(iu2, v1).is_zero();
  f.u2_squared_nonzero = !R.product(iu2, iu2).is_zero();
  auto u2w1 = R.product(iu2, w1);
  f.u2w1_zero = u2w1.is_zero();
  f.q0_w1u2_zero = R.bockstein(R.product(w1, iu2)).is_zero();

  MinimalResolution rs(at.cyc_sigma1, 1), rb(at.cyc_beta, 1);
  CohomologyRing cs(rs), cb(rb);
  SubgroupRestriction to_s(*at.cyc_sigma1_to_pi_h2, rs, *res, 1), to_b(*at.cyc_beta_to_pi_h2, rb, *res, 1);
  const auto s1 = at.su("sigma1"), be = at.su("beta");
  f.restrictions_ok = value_at(cb, to_b(w1), be) == 1 && to_b(v1).is_zero() && to_s(w1).is_zero() &&
                      value_at(cs, to_s(v1), s1) == 1;
  return f;
}

BHBase::BHBase(const Atlas& at, int D) {
  a2_res = std::make_unique<MinimalResolution>(at.a2, D);
  a2_ring = std::make_unique<CohomologyRing>(*a2_res);
  auto gi = at.a2.generator_indices();
  a2_match = std::make_unique<ElemabMatch>(*a2_ring, std::vector<int>{gi[0], gi[1]},
                                           std::vector<std::string>{"x", "y"}, D);
  a2_table = ring_table(*a2_ring, D);
  const auto& S = a2_match->model();
  for (const char* name : {"x1", "y1", "x2", "y2"}) {
    auto u = S.gen(name);
    a2_table.named[name] = a2_match->to_ring(u, name[1] - '0');
  }
  pih2 = std::make_unique<PiH2Model>(at, D);
  base = tensor(a2_table, pih2->table, D);
  x1 = base.at("x1");
  y1 = base.at("y1");
  x2 = base.at("x2");
  y2 = base.at("y2");
  v1 = base.at("v1");
  w1 = base.at("w1");
  iu2 = base.at("i*u2");
  iu3 = base.at("i*u3");
  tau2 = base.sub(base.mul(x1, y1), iu2);
  tau3 = base.sub(base.sub(base.mul(x2, y1), base.mul(x1, y2)), iu3);
  base.named["tau2"] = tau2;
  base.named["tau3"] = tau3;
}

CohomologyClass BHBase::word(const std::string& w) const {
  auto out = base.unit();
  std::stringstream ss(w);
  std::string tok;
  while (std::getline(ss, tok, '*')) out = base.mul(out, base.at(tok));
  return out;
}

ExtensionCheck check_bh_extension(const Atlas& at, const BHBase& b) {
  ExtensionCheck out;
  const int P = at.p();
  MinimalResolution rq(at.pi_h, 2);
  CohomologyRing q(rq);
  const auto& A = *b.a2_ring;
  const auto& Q = *b.pih2->ring;
  Restriction pr1(*at.pi_h_to_a2, rq, *b.a2_res, 2), pr2(*at.pi_h_to_pi_h2, rq, *b.pih2->res, 2);

  // Kunneth in degrees 1 and 2: factor pullbacks and cross products span.
  bool ok = true;
  for (int n = 1; n <= 2; ++n) {
    std::vector<CohomologyClass> gens;
    for (int i = 0; i < A.dim(n); ++i) gens.push_back(pr1(A.basis(n, i)));
    for (int i = 0; i < Q.dim(n); ++i) gens.push_back(pr2(Q.basis(n, i)));
    if (n == 2)
      for (int i = 0; i < A.dim(1); ++i)
        for (int j = 0; j < Q.dim(1); ++j) gens.push_back(q.product(pr1(A.basis(1, i)), pr2(Q.basis(1, j))));
    Echelon e(P, static_cast<std::size_t>(q.dim(n)));
    int count = 0;
    for (const auto& c : gens)
      if (e.insert(c.coords)) ++count;
    if (count != q.dim(n) || static_cast<int>(gens.size()) != q.dim(n)) ok = false;
  }
  out.kunneth_ok = ok;

  auto t2 = q.product(pr1(b.a2_table.at("x1")), pr1(b.a2_table.at("y1")));
  auto u = pr2(b.pih2->iu2);
  for (std::size_t i = 0; i < t2.coords.size(); ++i)
    t2.coords[i] = static_cast<std::uint8_t>((t2.coords[i] + P - u.coords[i]) % P);
  auto ext = extension_class(*at.h_to_pi_h, at.model().gamma2(at.su("xi")), rq);
  if (t2.is_zero()) return out;
  for (int c = 1; c < P; ++c) {
    bool match = true;
    for (std::size_t i = 0; i < t2.coords.size(); ++i)
      if ((c * t2.coords[i]) % P != ext.coords[i]) match = false;
    if (match) out.scalar = c;
  }
  return out;
}

bool BHFacts::all() const {
  for (const auto& [name, ok] : items)
    if (!ok) return false;
  return !items.empty();
}

nlohmann::ordered_json BHFacts::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [name, ok] : items) j[name] = ok;
  return j;
}

BHFacts bh_spectral_facts(const BHBase& b, const CentralSS& ss) {
  BHFacts f;
  auto add = [&](std::string name, bool ok) { f.items.emplace_back(std::move(name), ok); };
  const auto& R = b.base;
  auto W = [&](const char* w) { return b.word(w).coords; };

  add("E2^{1,0} basis v1 w1 x1 y1", ss.is_basis_of(2, 1, 0, {W("v1"), W("w1"), W("x1"), W("y1")}));
  for (auto [s, t] : std::vector<std::pair<int, int>>{{0, 3}, {1, 2}, {0, 4}, {1, 3}}) {
    auto e = ss.e_infinity(s, t);
    add("Einf^{" + std::to_string(s) + "," + std::to_string(t) + "} = 0",
        e.dim == 0 && e.certificate != Certificate::None);
  }
  auto e21 = ss.e_infinity(2, 1), e22 = ss.e_infinity(2, 2);
  add("Einf^{2,1} = span{w1x1z1, w1y1z1}", e21.dim == 2 && e21.certificate != Certificate::None &&
                                                ss.is_basis_of(4, 2, 1, {W("w1*x1"), W("w1*y1")}));
  add("Einf^{2,2} = span{x1y1z2, w1x1z2, w1y1z2}",
      e22.dim == 3 && e22.certificate != Certificate::None &&
          ss.is_basis_of(4, 2, 2, {W("x1*y1"), W("w1*x1"), W("w1*y1")}));

  auto zero4 = R.zero(4).coords;
  add("d2(w1x1z1) = 0", ss.differential(2, 2, 1, W("w1*x1")) == zero4);
  auto lhs = ss.differential(2, 2, 1, R.add(b.word("x1*y1"), b.iu2).coords);
  auto sq = R.mul(b.iu2, b.iu2);
  add("d2(x1y1z1 + i*u2 z1) = -(i*u2)^2 != 0", lhs == R.scale(sq, -1).coords && !sq.is_zero());
  auto d3 = ss.differential(3, 2, 2, W("w1*x1"));
  add("d3(w1x1z2) = 0", ss.is_zero_in(3, 2, 2, W("w1*x1")) == false && ss.is_zero_in(3, 5, 0, d3));
  // the kernel of d2 on E2^{2,1} is exactly span{w1x1z1, w1y1z1}
  auto ker = ss.kernel(2, 2, 1);
  Echelon e(R.p(), static_cast<std::size_t>(R.dim(2)));
  for (const auto& v : ker) e.insert(v);
  bool spans = ker.size() == 2 && e.in_span(W("w1*x1")) && e.in_span(W("w1*y1"));
  add("ker d2 on E2^{2,1} = span{w1x1z1, w1y1z1}", spans);
  return f;
}

HModel::HModel(const Atlas& at, int D) {
  auto t0 = std::chrono::steady_clock::now();
  res = std::make_unique<MinimalResolution>(at.h, D);
  seconds_resolution = since(t0);
  t0 = std::chrono::steady_clock::now();
  ring = std::make_unique<CohomologyRing>(*res);
  a3_res = std::make_unique<MinimalResolution>(at.a3, D);
  a3p_res = std::make_unique<MinimalResolution>(at.a3p, D);
  a3_ring = std::make_unique<CohomologyRing>(*a3_res);
  a3p_ring = std::make_unique<CohomologyRing>(*a3p_res);
  const auto& m = at.model();
  const auto al = at.su("alpha"), be = at.su("beta"), xi = at.su("xi");
  std::vector<std::string> letters{"x", "y", "z"};
  a3_match = std::make_unique<ElemabMatch>(
      *a3_ring,
      std::vector<int>{at.a3.index_of(m.delta(al)), at.a3.index_of(m.delta(be)), at.a3.index_of(m.gamma2(xi))},
      letters, D);
  a3p_match = std::make_unique<ElemabMatch>(
      *a3p_ring,
      std::vector<int>{at.a3p.index_of(m.gamma1(al)), at.a3p.index_of(m.gamma2(be)), at.a3p.index_of(m.gamma2(xi))},
      letters, D);
  g = std::make_unique<SubgroupRestriction>(*at.a3_to_h, *a3_res, *res, D);
  gp = std::make_unique<SubgroupRestriction>(*at.a3p_to_h, *a3p_res, *res, D);
  seconds_rest = since(t0);
}

int x1y1z2_coefficient(const SymbolicClass& u) {
  Monomial m;
  m.ext = 0b011;
  m.exps = {0, 0, 1};
  return reduce_mod_M(u, 2).coefficient(m);
}

nlohmann::ordered_json BocksteinImageReport::to_json() const {
  nlohmann::ordered_json j;
  j["h3_dim"] = h3_dim;
  j["h4_dim"] = h4_dim;
  j["image_dim"] = image_dim;
  j["pairs"] = nlohmann::ordered_json::array();
  for (auto [a, b] : pairs) j["pairs"].push_back({a, b});
  j["all_equal"] = all_equal;
  j["surrogate"] = {surrogate.first, surrogate.second};
  j["surrogate_excluded"] = surrogate_excluded;
  j["zero_pair_equal"] = zero_pair_equal;
  return j;
}

BocksteinImageReport bockstein_image_check(const HModel& h) {
  BocksteinImageReport r;
  const auto& R = *h.ring;
  const int P = R.p();
  r.h3_dim = R.dim(3);
  r.h4_dim = R.dim(4);
  auto img = rank_kernel_image(R.bockstein_matrix(3)).image;
  r.image_dim = static_cast<int>(img.size());
  r.all_equal = true;
  for (const auto& v : img) {
    CohomologyClass y{4, v};
    int a = x1y1z2_coefficient(h.a3_match->from_ring((*h.g)(y)));
    int b = x1y1z2_coefficient(h.a3p_match->from_ring((*h.gp)(y)));
    r.pairs.emplace_back(a, b);
    if (a != b) r.all_equal = false;
  }
  // Q0(x1 y1 z1) on the A3 side; on the A3' side the E_infinity residue
  // x1 y1 z2 is carried by g'* with y1 -> 0.
  const auto& S = h.a3_match->model();
  auto x1 = S.gen("x1"), y1 = S.gen("y1"), z1 = S.gen("z1"), z2 = S.gen("z2");
  int left = x1y1z2_coefficient(q0(x1 * y1 * z1));
  InducedMap gprime(P, {{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}, 3);
  int right = x1y1z2_coefficient(gprime(x1 * y1 * z2));
  r.surrogate = {left, right};
  r.surrogate_excluded = left != right;
  r.zero_pair_equal = x1y1z2_coefficient(S.zero()) == x1y1z2_coefficient(S.zero());
  return r;
}

}  // namespace cohomcheck
