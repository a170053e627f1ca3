#include "cohomcheck/chern.hpp"

#include <sstream>

#include "cohomcheck/elemab.hpp"

namespace cohomcheck {

namespace {

long long floor_mod(long long a, long long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

}  // namespace

Cyclotomic::Cyclotomic(int p) : p_(p), c_(static_cast<std::size_t>(p * (p - 1)), 0) {}

Cyclotomic Cyclotomic::integer(int p, long long n) {
  Cyclotomic c(p);
  c.c_[0] = n;
  return c;
}

Cyclotomic Cyclotomic::reduce(int p, std::vector<long long> full) {
  const int n = p * (p - 1);
  // x^{p(p-1)} = -(1 + x^p + ... + x^{p(p-2)})
  for (int k = p * p - 1; k >= n; --k) {
    long long c = full[static_cast<std::size_t>(k)];
    if (!c) continue;
    full[static_cast<std::size_t>(k)] = 0;
    for (int j = 0; j <= p - 2; ++j) full[static_cast<std::size_t>(k - n + j * p)] -= c;
  }
  Cyclotomic out(p);
  for (int i = 0; i < n; ++i) out.c_[static_cast<std::size_t>(i)] = full[static_cast<std::size_t>(i)];
  return out;
}

Cyclotomic Cyclotomic::root(int p, long long e) {
  std::vector<long long> full(static_cast<std::size_t>(p * p), 0);
  full[static_cast<std::size_t>(floor_mod(e, p * p))] = 1;
  return reduce(p, std::move(full));
}

bool Cyclotomic::is_zero() const {
  for (auto v : c_)
    if (v) return false;
  return true;
}

std::optional<long long> Cyclotomic::as_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i]) return std::nullopt;
  return c_.empty() ? 0 : c_[0];
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<long long> full(static_cast<std::size_t>(p_ * p_), 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    full[static_cast<std::size_t>(floor_mod(-static_cast<long long>(i), p_ * p_))] += c_[i];
  return reduce(p_, std::move(full));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (p_ != o.p_) throw ChernError("cyclotomic: mixed primes");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (p_ != o.p_) throw ChernError("cyclotomic: mixed primes");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.p_ != b.p_) throw ChernError("cyclotomic: mixed primes");
  const int P = a.p_, N = P * P;
  std::vector<long long> full(static_cast<std::size_t>(N), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      full[(i + j) % static_cast<std::size_t>(N)] += a.c_[i] * b.c_[j];
  }
  return Cyclotomic::reduce(P, std::move(full));
}

Cyclotomic operator*(long long k, Cyclotomic a) {
  for (auto& v : a.c_) v *= k;
  return a;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    long long a = c_[i] < 0 ? -c_[i] : c_[i];
    if (i == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "w";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

long long VirtualCharacter::dimension() const {
  auto v = values.at(static_cast<std::size_t>(group->identity_index())).as_integer();
  if (!v) throw ChernError("character value at the identity is not an integer");
  return *v;
}

bool VirtualCharacter::is_class_function() const {
  const auto& g = *group;
  for (int x = 0; x < g.order(); ++x)
    for (int h = 0; h < g.order(); ++h) {
      int c = g.mul(g.mul(h, x), g.inv(h));
      if (!(values[static_cast<std::size_t>(c)] == values[static_cast<std::size_t>(x)])) return false;
    }
  return true;
}

namespace {

VirtualCharacter combine(const VirtualCharacter& a, const VirtualCharacter& b, long long sb) {
  if (a.group != b.group) throw ChernError("characters on different groups");
  VirtualCharacter out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += sb * b.values[i];
  return out;
}

}  // namespace

VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b) { return combine(a, b, 1); }
VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b) { return combine(a, b, -1); }

VirtualCharacter operator*(long long k, const VirtualCharacter& a) {
  VirtualCharacter out = a;
  for (auto& v : out.values) v = k * v;
  return out;
}

bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
  return a.group == b.group && a.values == b.values;
}

Rep rep_from_string(const std::string& s) {
  if (s == "lambda1") return Rep::Lambda1;
  if (s == "lambda") return Rep::Lambda;
  if (s == "lambda_prime") return Rep::LambdaPrime;
  if (s == "lambda_dd") return Rep::LambdaDD;
  throw ChernError("unknown representation '" + s + "' (lambda1, lambda, lambda_prime, lambda_dd)");
}

std::string to_string(Rep r) {
  switch (r) {
    case Rep::Lambda1: return "lambda1";
    case Rep::Lambda: return "lambda";
    case Rep::LambdaPrime: return "lambda_prime";
    case Rep::LambdaDD: return "lambda_dd";
  }
  return "?";
}

namespace {

Cyclotomic trace(const MonomialModel& m, const MonomialFactor& f) {
  const int P = m.p();
  auto ex = m.trace_exponents(f);
  Cyclotomic t(P);
  if (!ex) return t;
  for (int e : *ex) t += Cyclotomic::root(P, e);
  return t;
}

}  // namespace

Cyclotomic character_value(const MonomialModel& m, Rep r, const MonomialElement& e) {
  auto t1 = trace(m, e.f1);
  switch (r) {
    case Rep::Lambda1: return t1;
    case Rep::Lambda: return t1.conj() * trace(m, e.f2);
    case Rep::LambdaPrime: return t1.conj() * t1;
    case Rep::LambdaDD: return t1.conj() * trace(m, e.f2) - t1.conj() * t1;
  }
  return t1;
}

VirtualCharacter character_of(Rep r, const FiniteGroup& k,
                              const std::function<MonomialElement(const MonomialElement&)>& phi) {
  const auto& m = k.model();
  VirtualCharacter chi{&k, {}};
  chi.values.reserve(static_cast<std::size_t>(k.order()));
  for (const auto& e : k.elements()) {
    auto v = character_value(m, r, phi(e));
    for (const auto& c : k.central_subgroup())
      if (!(character_value(m, r, phi(m.multiply(e, c))) == v))
        throw ChernError(to_string(r) + " is not constant on the cosets of the central subgroup of " + k.name());
    chi.values.push_back(std::move(v));
  }
  return chi;
}

VirtualCharacter character_of(Rep r, const FiniteGroup& k) {
  return character_of(r, k, [](const MonomialElement& e) { return e; });
}

long long inner_product(const VirtualCharacter& a, const VirtualCharacter& b) {
  if (a.group != b.group) throw ChernError("characters on different groups");
  Cyclotomic s(a.group->p());
  for (std::size_t i = 0; i < a.values.size(); ++i) s += a.values[i] * b.values[i].conj();
  auto v = s.as_integer();
  const long long n = a.group->order();
  if (!v || *v % n) throw ChernError("inner product is not an integer: " + s.to_string());
  return *v / n;
}

LinearCharacters::LinearCharacters(const FiniteGroup& a, std::vector<int> basis)
    : group_(&a), basis_(std::move(basis)), coords_(elemab_coordinates(a, basis_)) {}

std::vector<std::vector<int>> LinearCharacters::all_weights() const {
  const int P = group_->p(), n = rank();
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out)
      for (int k = 0; k < P; ++k) {
        auto v = w;
        v.push_back(k);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

VirtualCharacter LinearCharacters::character(const std::vector<int>& weights) const {
  const int P = group_->p();
  VirtualCharacter chi{group_, {}};
  for (const auto& c : coords_) {
    long long e = 0;
    for (std::size_t i = 0; i < c.size(); ++i) e += static_cast<long long>(weights[i]) * c[i];
    chi.values.push_back(Cyclotomic::root(P, P * e));  // xi = omega^p
  }
  return chi;
}

std::map<std::vector<int>, long long> decompose_abelian(const VirtualCharacter& chi, const LinearCharacters& lc) {
  if (chi.group != &lc.group()) throw ChernError("decompose: character lives on another group");
  std::map<std::vector<int>, long long> out;
  long long total = 0;
  for (const auto& w : lc.all_weights()) {
    long long m = inner_product(chi, lc.character(w));
    total += m;
    if (m) out[w] = m;
  }
  if (total != chi.dimension()) throw ChernError("decompose: multiplicities do not add up to the dimension");
  return out;
}

SymbolicClass truncate(const SymbolicClass& u, int max_degree) {
  SymbolicClass out(u.p(), u.rank());
  for (const auto& [m, c] : u.terms())
    if (m.degree() <= max_degree) out.add_term(m, c);
  return out;
}

SymbolicClass chern_component(const SymbolicClass& total, int i) {
  SymbolicClass out(total.p(), total.rank());
  for (const auto& [m, c] : total.terms())
    if (m.degree() == 2 * i) out.add_term(m, c);
  return out;
}

SymbolicClass total_chern_class(const std::map<std::vector<int>, long long>& decomposition, const SymbolicRing& ring,
                                int max_degree) {
  const int P = ring.p();
  auto result = ring.one();
  for (const auto& [w, mult] : decomposition) {
    if (static_cast<int>(w.size()) != ring.rank()) throw ChernError("weight vector does not match the model rank");
    auto c1 = ring.zero();
    for (int i = 0; i < ring.rank(); ++i) c1 = c1 + w[static_cast<std::size_t>(i)] * ring.poly(i);
    auto factor = ring.one() + c1;
    if (mult < 0) {
      // (1 + c)^{-1} = sum (-c)^k, truncated
      auto inv = ring.one(), term = ring.one();
      for (int k = 1; 2 * k <= max_degree; ++k) {
        term = truncate(term * ((P - 1) * c1), max_degree);
        inv = inv + term;
      }
      factor = inv;
    }
    long long e = mult < 0 ? -mult : mult;
    for (long long k = 0; k < e; ++k) result = truncate(result * factor, max_degree);
  }
  return result;
}

nlohmann::ordered_json CharacterReport::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["class_functions"] = class_functions;
  j["delta_vanishes"] = delta_vanishes;
  j["gamma2_equals_p_lambda1"] = gamma2_equals_p_lambda1;
  j["gamma2_trivial_defect"] = gamma2_trivial_defect;
  j["gamma2_reduced_equal"] = gamma2_reduced_equal;
  j["a3_decomposition_ok"] = a3_decomposition_ok;
  j["a3_multiplicities"] = {{"plus_one", a3_plus}, {"minus_one", a3_minus}, {"other", a3_other}};
  j["a3_restriction_compatible"] = a3_restriction_compatible;
  j["c1_zero"] = c1_zero;
  j["c2_zero"] = c2_zero;
  return j;
}

CharacterReport character_report(const Atlas& at) {
  CharacterReport r;
  const int P = at.p();
  r.p = P;
  const auto& m = at.model();
  const auto al = at.su("alpha"), be = at.su("beta"), xi = at.su("xi");

  const auto& e = at.extraspecial;
  auto delta = [&](const MonomialElement& x) { return m.delta(x); };
  auto gamma2 = [&](const MonomialElement& x) { return m.gamma2(x); };
  auto dd_delta = character_of(Rep::LambdaDD, e, delta);
  auto dd_gamma = character_of(Rep::LambdaDD, e, gamma2);
  auto l1 = character_of(Rep::Lambda1, e);
  r.delta_vanishes = true;
  for (const auto& v : dd_delta.values) r.delta_vanishes = r.delta_vanishes && v.is_zero();
  auto diff = dd_gamma - static_cast<long long>(P) * l1;
  r.gamma2_equals_p_lambda1 = true;
  for (const auto& v : diff.values) r.gamma2_equals_p_lambda1 = r.gamma2_equals_p_lambda1 && v.is_zero();
  // the difference is a multiple of the trivial character exactly when it is constant and integral
  auto d0 = diff.values.front().as_integer();
  bool constant = d0.has_value();
  for (const auto& v : diff.values) constant = constant && v == diff.values.front();
  r.gamma2_reduced_equal = constant;
  r.gamma2_trivial_defect = constant ? *d0 : 0;

  FiniteGroup local;
  const FiniteGroup* a3 = &at.a3;
  if (a3->order() == 0) {
    local = generate(P, {m.delta(al), m.delta(be), m.delta(xi), m.gamma2(xi)}, {m.delta(xi)});
    a3 = &local;
  }
  std::vector<int> basis{a3->index_of(m.delta(al)), a3->index_of(m.delta(be)), a3->index_of(m.gamma2(xi))};
  LinearCharacters lc(*a3, basis);
  auto dd = character_of(Rep::LambdaDD, *a3);
  r.class_functions = dd.is_class_function() && dd_gamma.is_class_function() && l1.is_class_function();
  auto dec = decompose_abelian(dd, lc);
  r.a3_decomposition_ok = true;
  for (const auto& w : lc.all_weights()) {
    auto it = dec.find(w);
    long long mult = it == dec.end() ? 0 : it->second;
    long long expect = w[2] == 1 ? 1 : w[2] == 0 ? -1 : 0;
    if (mult == 1) ++r.a3_plus;
    else if (mult == -1) ++r.a3_minus;
    else if (mult != 0) ++r.a3_other;
    if (mult != expect) r.a3_decomposition_ok = false;
  }

  if (at.h.order() > 0 && at.a3_to_h) {
    auto on_h = character_of(Rep::LambdaDD, at.h);
    VirtualCharacter pulled{&at.a3, {}};
    for (int i = 0; i < at.a3.order(); ++i) pulled.values.push_back(on_h.values[static_cast<std::size_t>((*at.a3_to_h)(i))]);
    r.a3_restriction_compatible = decompose_abelian(pulled, lc) == dec;
  }

  SymbolicRing S(P, {"x", "y", "z"});
  auto total = total_chern_class(dec, S, 2 * P + 4);
  r.c1_zero = chern_component(total, 1).is_zero();
  r.c2_zero = chern_component(total, 2).is_zero();
  return r;
}

}  // namespace cohomcheck
