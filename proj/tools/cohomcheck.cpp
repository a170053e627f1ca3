// cohomcheck: command-line front end for the verification suite.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cohomcheck/atlas.hpp"
#include "cohomcheck/chern.hpp"
#include "cohomcheck/cohomology.hpp"
#include "cohomcheck/cyclic.hpp"
#include "cohomcheck/models.hpp"
#include "cohomcheck/resolution.hpp"
#include "cohomcheck/spectral.hpp"
#include "cohomcheck/verify.hpp"

using namespace cohomcheck;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  int p = 3;
  bool json_out = false;
  std::string out;
  bool long_mode = false;
};

struct Result {
  json data;
  std::string text;
  int code = 0;
};

void emit(const Globals& g, const Result& r) {
  std::string s = g.json_out ? r.data.dump(2) + "\n" : r.text;
  if (g.out.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw std::runtime_error("cannot write " + g.out);
  f << s;
}

void check_prime(int p) {
  if (!is_prime(p) || p == 2) throw std::runtime_error("p is an odd prime number (got " + std::to_string(p) + ")");
}

std::unique_ptr<Atlas> make_atlas(int p, bool big) {
  check_prime(p);
  if (p > 5) throw std::runtime_error("the group atlas is built for p = 3 and 5");
  return std::make_unique<Atlas>(p, Atlas::Options{.big_groups = big});
}

const FiniteGroup& find_group(const Atlas& at, const std::string& name) {
  const auto* g = at.group(name);
  if (!g) {
    std::string known;
    for (const auto& [n, _] : at.groups()) known += " " + n;
    throw std::runtime_error("unknown group '" + name + "'; known:" + known);
  }
  return *g;
}

Result cmd_groups(const Globals& gl) {
  auto at = make_atlas(gl.p, true);
  Result r;
  r.data["p"] = gl.p;
  std::ostringstream os;
  for (const auto& [name, g] : at->groups()) {
    auto inv = group_invariants(*g);
    r.data["groups"][name] = {{"order", inv.order},
                              {"exponent", inv.exponent},
                              {"center_order", inv.center.size()},
                              {"abelianization", inv.abelianization},
                              {"elementary_abelian", is_elementary_abelian(*g)}};
    os << name << ": order " << inv.order << ", exponent " << inv.exponent << ", |Z| " << inv.center.size()
       << ", abelianization (";
    for (std::size_t i = 0; i < inv.abelianization.size(); ++i) os << (i ? "," : "") << inv.abelianization[i];
    os << ")\n";
  }
  r.text = os.str();
  return r;
}

Result cmd_betti(const Globals& gl, const std::string& group, int degree, bool oracle) {
  auto at = make_atlas(gl.p, group == "H" || group == "A3" || group == "A3'" || group == "piH");
  const auto& g = find_group(*at, group);
  MinimalResolution res(g, degree);
  Result r;
  r.data = {{"p", gl.p}, {"group", group}, {"order", g.order()}, {"betti", res.betti_numbers()}};
  std::ostringstream os;
  os << group << " betti:";
  for (int b : res.betti_numbers()) os << ' ' << b;
  os << '\n';
  if (oracle) {
    auto o = bar_oracle(g, degree);
    bool agree = o.betti == res.betti_numbers();
    r.data["oracle"] = {{"betti", o.betti}, {"agrees", agree}, {"top_bounds_met", o.top_bounds_met},
                        {"top_columns_scanned", o.top_columns_scanned}, {"top_columns_total", o.top_columns_total},
                        {"seconds", o.seconds}};
    os << "bar complex:";
    for (int b : o.betti) os << ' ' << b;
    os << (agree ? "  (agrees)\n" : "  (DIFFERS)\n");
    r.code = agree ? 0 : 1;
  }
  r.text = os.str();
  return r;
}

Result cmd_ring(const Globals& gl, const std::string& which) {
  auto at = make_atlas(gl.p, false);
  Result r;
  if (which == "piH2") {
    PiH2Model m(*at);
    auto f = m.facts(*at);
    r.data = {{"p", gl.p},
              {"ring", which},
              {"dims", m.table.dims()},
              {"table", m.table.to_json()},
              {"u2_scale", m.u2_scale},
              {"facts",
               {{"u2v1_nonzero", f.u2v1_nonzero},
                {"u2_squared_nonzero", f.u2_squared_nonzero},
                {"u2w1_zero", f.u2w1_zero},
                {"q0_w1u2_zero", f.q0_w1u2_zero},
                {"restrictions_ok", f.restrictions_ok}}}};
    r.code = f.all() ? 0 : 1;
  } else if (which == "A2" || which == "BH") {
    BHBase b(*at);
    const auto& t = which == "A2" ? b.a2_table : b.base;
    r.data = {{"p", gl.p}, {"ring", which}, {"dims", t.dims()}, {"table", t.to_json()}};
  } else {
    throw std::runtime_error("ring: expected piH2, A2 or BH");
  }
  std::ostringstream os;
  os << which << " dims:";
  for (int d : r.data["dims"]) os << ' ' << d;
  os << '\n';
  if (r.data.contains("facts"))
    for (const auto& [k, v] : r.data["facts"].items()) os << "  " << k << ": " << (v.get<bool>() ? "yes" : "no") << '\n';
  r.text = os.str();
  return r;
}

Result cmd_ss(const Globals& gl, const std::string& which) {
  check_prime(gl.p);
  Result r;
  std::unique_ptr<Atlas> at;
  std::unique_ptr<BHBase> bh;
  RingTable base;
  CohomologyClass t2, t3;
  if (which == "BG") {
    base = tensor(bpu_table(gl.p), bpu_table(gl.p), 6);
    t2 = base.sub(base.at("(u2,1)"), base.at("(1,u2)"));
    t3 = base.sub(base.at("(u3,1)"), base.at("(1,u3)"));
  } else if (which == "BH") {
    if (gl.p != 3) throw std::runtime_error("ss --case BH is computed at p = 3");
    at = make_atlas(3, false);
    bh = std::make_unique<BHBase>(*at);
    base = bh->base;
    t2 = bh->tau2;
    t3 = bh->tau3;
  } else {
    throw std::runtime_error("ss: --case is BG or BH");
  }
  CentralSS ss(base, 4);
  ss.set_transgressions(t2, t3);
  std::ostringstream os;
  r.data = {{"p", gl.p}, {"case", which}};
  for (int n = 0; n <= 4; ++n) {
    os << "n=" << n << ':';
    for (int s = 0; s <= n; ++s) {
      auto e = ss.e_infinity(s, n - s);
      r.data["e_infinity"].push_back({{"s", s}, {"t", n - s}, {"dim", e.dim}, {"certificate", to_string(e.certificate)}});
      os << " (" << s << ',' << n - s << ")=" << e.dim;
    }
    os << "  total " << ss.assemble_dim(n) << '\n';
  }
  if (bh) {
    auto f = bh_spectral_facts(*bh, ss);
    r.data["facts"] = f.to_json();
    for (const auto& [name, ok] : f.items) os << (ok ? "  ok   " : "  FAIL ") << name << '\n';
    r.code = f.all() ? 0 : 1;
  }
  r.text = os.str();
  return r;
}

Result cmd_cyclic(const Globals& gl) {
  check_prime(gl.p);
  auto a = kernel_image_analysis(gl.p);
  auto e = e2_terms(gl.p);
  Result r;
  r.data = {{"p", gl.p}, {"kernel_image", a.to_json()}, {"e2", e.to_json()}};
  std::ostringstream os;
  os << "dim ker(1-g) = " << a.ker_one_minus_g.size() << ", dim im(1-g) = " << a.im_one_minus_g.size()
     << ", u~ in image: " << (a.u_tilde_in_image ? "yes" : "no")
     << ", (1-g)^{p-1} = 0: " << (a.power_is_zero ? "yes" : "no") << '\n'
     << "dim E2^{0,2} = " << e.dim_e2_02 << ", dim E2^{1,2} = " << e.dim_e2_12 << '\n';
  r.text = os.str();
  return r;
}

Result cmd_chern(const Globals& gl, const std::string& target, const std::string& rep_name) {
  auto rep = rep_from_string(rep_name);
  bool big = target == "H" || target == "A3" || target == "A3'" || target == "piH";
  auto at = make_atlas(gl.p, big);
  const auto& g = find_group(*at, target);
  auto chi = character_of(rep, g);
  Result r;
  std::ostringstream os;
  r.data = {{"p", gl.p}, {"target", target}, {"rep", to_string(rep)}, {"dimension", chi.dimension()},
            {"class_function", chi.is_class_function()}};
  os << to_string(rep) << " on " << target << ": dimension " << chi.dimension() << '\n';
  if (is_elementary_abelian(g)) {
    const auto& m = at->model();
    const auto al = at->su("alpha"), be = at->su("beta"), xi = at->su("xi");
    std::vector<int> basis;
    if (target == "A3")
      basis = {g.index_of(m.delta(al)), g.index_of(m.delta(be)), g.index_of(m.gamma2(xi))};
    else if (target == "A3'")
      basis = {g.index_of(m.gamma1(al)), g.index_of(m.gamma2(be)), g.index_of(m.gamma2(xi))};
    else
      basis = irredundant_generators(g);
    LinearCharacters lc(g, basis);
    auto dec = decompose_abelian(chi, lc);
    std::vector<std::string> letters;
    for (int i = 0; i < lc.rank(); ++i)
      letters.push_back(lc.rank() <= 3 ? std::string(1, static_cast<char>('x' + i)) : std::string(1, static_cast<char>('a' + i)));
    SymbolicRing S(gl.p, letters);
    auto total = total_chern_class(dec, S, 4);
    for (const auto& [w, k] : dec) {
      if (k == 0) continue;
      r.data["decomposition"].push_back({{"weights", w}, {"multiplicity", k}});
    }
    os << "nonzero multiplicities: " << r.data["decomposition"].size() << '\n';
    for (int i = 1; i <= 2; ++i) {
      auto c = chern_component(total, i);
      r.data["c" + std::to_string(i)] = S.to_string(c);
      os << 'c' << i << " = " << S.to_string(c) << '\n';
    }
  }
  r.text = os.str();
  return r;
}

Result cmd_verify(const Globals& gl, const std::vector<std::string>& only) {
  VerifyOptions o;
  o.p = gl.p;
  o.only = only;
  o.long_mode = gl.long_mode;
  auto rep = verify_all(o);
  Result r;
  r.data = rep.to_json();
  std::ostringstream os;
  for (const auto& c : rep.checks) {
    std::string tag = c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "SKIP";
    os << tag << "  " << c.id << "  [" << c.paper_ref << "]  " << static_cast<long>(c.runtime_ms) << " ms\n";
    if (c.status != "pass") os << "      " << c.witness.dump() << '\n';
  }
  os << rep.count("pass") << " passed, " << rep.count("fail") << " failed, " << rep.count("skipped")
     << " skipped (" << rep.version << ")\n";
  r.text = os.str();
  r.code = rep.ok() ? 0 : 1;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology checks for monomial subgroups of PU(p) x PU(p)"};
  app.set_version_flag("--version", std::string("cohomcheck ") + kVersion);
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--p", gl.p, "odd prime")->capture_default_str();
  app.add_flag("--json", gl.json_out, "print JSON");
  app.add_option("--out", gl.out, "write output to this file");
  app.add_flag("--long", gl.long_mode, "allow the slower primes");

  auto* groups = app.add_subcommand("groups", "orders and invariants of the atlas groups");
  auto* betti = app.add_subcommand("betti", "Betti numbers from the minimal resolution");
  std::string bgroup = "piH2";
  int bdeg = 4;
  bool boracle = false;
  betti->add_option("--group", bgroup)->capture_default_str();
  betti->add_option("--degree", bdeg)->capture_default_str()->check(CLI::Range(0, 12));
  betti->add_flag("--oracle", boracle, "compare with the bar complex");

  auto* ring = app.add_subcommand("ring", "ring tables: piH2, A2 or BH");
  std::string rname = "piH2";
  ring->add_option("--group", rname)->capture_default_str();

  auto* ss = app.add_subcommand("ss", "E_infinity of the central extension spectral sequences");
  std::string scase = "BG";
  ss->add_option("--case", scase)->capture_default_str()->check(CLI::IsMember({"BG", "BH"}));

  auto* cyclic = app.add_subcommand("cyclic", "the (p-1)-dimensional C_p-module");

  auto* chern = app.add_subcommand("chern", "restricted characters and Chern classes");
  std::string ctarget = "A3", crep = "lambda_dd";
  chern->add_option("--target", ctarget)->capture_default_str();
  chern->add_option("--rep", crep)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::vector<std::string> only;
  verify->add_option("--only", only, "check groups or check ids");

  // accept the global flags after the subcommand too
  for (auto* sub : {groups, betti, ring, ss, cyclic, chern, verify}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  try {
    Result r;
    if (*groups) r = cmd_groups(gl);
    else if (*betti) r = cmd_betti(gl, bgroup, bdeg, boracle);
    else if (*ring) r = cmd_ring(gl, rname);
    else if (*ss) r = cmd_ss(gl, scase);
    else if (*cyclic) r = cmd_cyclic(gl);
    else if (*chern) r = cmd_chern(gl, ctarget, crep);
    else r = cmd_verify(gl, only);
    emit(gl, r);
    return r.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
