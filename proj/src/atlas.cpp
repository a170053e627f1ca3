#include "cohomcheck/atlas.hpp"

namespace cohomcheck {

Atlas::Atlas(int p, Options opts) : p_(p), model_(p), su_(standard_generators(p)) {
  const auto& m = model_;
  const auto xi = su("xi"), al = su("alpha"), be = su("beta");
  const auto id = m.identity();
  std::vector<MonomialElement> sig;
  for (int k = 1; k <= p; ++k) sig.push_back(su("sigma" + std::to_string(k)));

  auto named = [](FiniteGroup g, const char* n) {
    g.set_name(n);
    return g;
  };
  auto mk = [](const FiniteGroup& s, const FiniteGroup& t, std::vector<MonomialElement> im) {
    return std::make_unique<Homomorphism>(s, t, std::move(im));
  };

  std::vector<MonomialElement> h2_gens{be};
  h2_gens.insert(h2_gens.end(), sig.begin(), sig.end());

  extraspecial = named(generate(p, {al, be, xi}), "p^{1+2}");
  h2 = named(generate(p, h2_gens), "H2");
  a2 = named(generate(p, {al, be, xi}, {xi}), "A2");
  pi_h2 = named(generate(p, h2_gens, {xi}), "piH2");
  beta_xi = named(generate(p, {be, xi}), "<beta,xi>");
  cyc_sigma1 = named(generate(p, {sig[0]}, {xi}), "<sigma1>");
  cyc_beta = named(generate(p, {be}, {xi}), "<beta>");

  extraspecial_to_h2 = mk(extraspecial, h2, extraspecial.generators());
  extraspecial_to_a2 = mk(extraspecial, a2, {al, be, id});
  h2_to_pi_h2 = mk(h2, pi_h2, h2.generators());
  beta_xi_to_h2 = mk(beta_xi, h2, beta_xi.generators());
  cyc_sigma1_to_pi_h2 = mk(cyc_sigma1, pi_h2, {sig[0]});
  cyc_beta_to_pi_h2 = mk(cyc_beta, pi_h2, {be});

  if (!opts.big_groups) return;

  const auto D = [&m](const MonomialElement& x) { return m.delta(x); };
  const auto G1 = [&m](const MonomialElement& x) { return m.gamma1(x); };
  const auto G2 = [&m](const MonomialElement& x) { return m.gamma2(x); };

  std::vector<MonomialElement> h_gens{D(al), D(be), D(xi), G2(be)};
  for (const auto& s : sig) h_gens.push_back(G2(s));

  if (opts.with_hhat) hhat = named(generate(p, h_gens), "Hhat");
  h = named(generate(p, h_gens, {D(xi)}), "H");
  a3 = named(generate(p, {D(al), D(be), D(xi), G2(xi)}, {D(xi)}), "A3");
  a3p = named(generate(p, {G1(al), G2(be), D(xi), G2(xi)}, {D(xi)}), "A3'");
  pi_h = named(generate(p, h_gens, {D(xi), G2(xi)}), "piH");

  a3_to_h = mk(a3, h, a3.generators());
  a3p_to_h = mk(a3p, h, a3p.generators());
  a3_to_a2 = mk(a3, a2, {al, be, id, id});
  a3p_to_a2 = mk(a3p, a2, {al, be, id, id});
  h_to_pi_h = mk(h, pi_h, h.generators());
  a2_diag_to_pi_h = mk(a2, pi_h, {D(al), D(be), id});
  a2_mixed_to_pi_h = mk(a2, pi_h, {G1(al), G2(be), id});

  std::vector<MonomialElement> to_a2{al, be, id, id}, to_h2{al, be, id, be};
  for (const auto& s : sig) {
    to_a2.push_back(id);
    to_h2.push_back(s);
  }
  pi_h_to_a2 = mk(pi_h, a2, to_a2);
  pi_h_to_pi_h2 = mk(pi_h, pi_h2, to_h2);
  a2_to_pi_h = mk(a2, pi_h, {G1(al), G1(be), id});
  std::vector<MonomialElement> h2_in{G2(be)};
  for (const auto& s : sig) h2_in.push_back(G2(s));
  pi_h2_to_pi_h = mk(pi_h2, pi_h, h2_in);
  delta_extraspecial_to_h = mk(extraspecial, h, {D(al), D(be), D(xi)});
  gamma2_extraspecial_to_h = mk(extraspecial, h, {G2(al), G2(be), G2(xi)});
}

std::map<std::string, const FiniteGroup*> Atlas::groups() const {
  std::map<std::string, const FiniteGroup*> out{
      {"p^{1+2}", &extraspecial}, {"H2", &h2},          {"A2", &a2},
      {"piH2", &pi_h2},           {"<beta,xi>", &beta_xi}, {"<sigma1>", &cyc_sigma1},
      {"<beta>", &cyc_beta}};
  if (h.order() > 0) {
    out["H"] = &h;
    out["A3"] = &a3;
    out["A3'"] = &a3p;
    out["piH"] = &pi_h;
  }
  if (hhat.order() > 0) out["Hhat"] = &hhat;
  return out;
}

const FiniteGroup* Atlas::group(const std::string& name) const {
  auto gs = groups();
  auto it = gs.find(name);
  return it == gs.end() ? nullptr : it->second;
}

}  // namespace cohomcheck
