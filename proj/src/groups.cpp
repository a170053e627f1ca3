#include "cohomcheck/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace cohomcheck {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_odd_prime(int p) {
  if (p == 2 || !is_prime(p))
    throw GroupError("p must be an odd prime, got " + std::to_string(p));
}

std::size_t MonomialElementHash::operator()(const MonomialElement& e) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint8_t b) {
    h ^= b;
    h *= 1099511628211ull;
  };
  for (const MonomialFactor* f : {&e.f1, &e.f2}) {
    mix(f->shift);
    for (auto w : f->weights) mix(w);
  }
  return static_cast<std::size_t>(h);
}

MonomialModel::MonomialModel(int p) : p_(p) {
  require_odd_prime(p);
  if (p > kMaxMonomialPrime)
    throw GroupError("monomial model supports p <= " + std::to_string(kMaxMonomialPrime));
}

MonomialFactor MonomialModel::mul_factor(const MonomialFactor& a, const MonomialFactor& b) const {
  MonomialFactor r;
  const int q = p2();
  for (int i = 0; i < p_; ++i) {
    int j = (i + a.shift) % p_;
    r.weights[i] = static_cast<std::uint8_t>((a.weights[i] + b.weights[j]) % q);
  }
  r.shift = static_cast<std::uint8_t>((a.shift + b.shift) % p_);
  return r;
}

MonomialElement MonomialModel::multiply(const MonomialElement& a, const MonomialElement& b) const {
  return {mul_factor(a.f1, b.f1), mul_factor(a.f2, b.f2)};
}

MonomialElement MonomialModel::inverse(const MonomialElement& a) const {
  auto inv = [this](const MonomialFactor& f) {
    MonomialFactor r;
    const int q = p2();
    int s = (p_ - f.shift) % p_;
    for (int i = 0; i < p_; ++i) {
      int j = ((i - f.shift) % p_ + p_) % p_;
      r.weights[i] = static_cast<std::uint8_t>((q - f.weights[j]) % q);
    }
    r.shift = static_cast<std::uint8_t>(s);
    return r;
  };
  return {inv(a.f1), inv(a.f2)};
}

MonomialElement MonomialModel::power(const MonomialElement& a, long long k) const {
  MonomialElement base = k < 0 ? inverse(a) : a;
  unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
  MonomialElement r = identity();
  while (e) {
    if (e & 1) r = multiply(r, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return r;
}

int MonomialModel::order_of(const MonomialElement& a) const {
  MonomialElement x = a;
  int n = 1;
  while (x != identity()) {
    x = multiply(x, a);
    ++n;
  }
  return n;
}

std::optional<std::vector<int>> MonomialModel::trace_exponents(const MonomialFactor& f) const {
  if (f.shift != 0) return std::nullopt;
  return std::vector<int>(f.weights.begin(), f.weights.begin() + p_);
}

std::string MonomialModel::to_string(const MonomialElement& e) const {
  std::ostringstream os;
  auto put = [&](const MonomialFactor& f) {
    os << "D(";
    for (int i = 0; i < p_; ++i) os << (i ? "," : "") << int(f.weights[i]);
    os << ")B^" << int(f.shift);
  };
  os << "(";
  put(e.f1);
  os << "; ";
  put(e.f2);
  os << ")";
  return os.str();
}

nlohmann::ordered_json MonomialModel::to_json(const MonomialElement& e) const {
  nlohmann::ordered_json j;
  auto ws = [this](const MonomialFactor& f) {
    return std::vector<int>(f.weights.begin(), f.weights.begin() + p_);
  };
  j["shift1"] = int(e.f1.shift);
  j["weights1"] = ws(e.f1);
  j["shift2"] = int(e.f2.shift);
  j["weights2"] = ws(e.f2);
  return j;
}

MonomialElement MonomialModel::from_json(const nlohmann::json& j) const {
  auto read = [this, &j](const char* sk, const char* wk) {
    MonomialFactor f;
    int s = j.value(sk, 0);
    f.shift = static_cast<std::uint8_t>(((s % p_) + p_) % p_);
    if (j.contains(wk)) {
      const auto& w = j.at(wk);
      if (static_cast<int>(w.size()) != p_)
        throw GroupError(std::string("expected ") + std::to_string(p_) + " entries in " + wk);
      for (int i = 0; i < p_; ++i) {
        int v = w[static_cast<std::size_t>(i)].get<int>();
        f.weights[i] = static_cast<std::uint8_t>(((v % p2()) + p2()) % p2());
      }
    }
    return f;
  };
  return {read("shift1", "weights1"), read("shift2", "weights2")};
}

std::map<std::string, MonomialElement> standard_generators(int p) {
  require_odd_prime(p);
  std::map<std::string, MonomialElement> out;
  MonomialElement xi, alpha, beta;
  for (int i = 0; i < p; ++i) {
    xi.f1.weights[i] = static_cast<std::uint8_t>(p);
    alpha.f1.weights[i] = static_cast<std::uint8_t>(p * i);
  }
  beta.f1.shift = 1;
  out["xi"] = xi;
  out["alpha"] = alpha;
  out["beta"] = beta;
  for (int k = 1; k <= p; ++k) {
    MonomialElement s;
    for (int i = 0; i < p; ++i) s.f1.weights[i] = 1;
    s.f1.weights[k - 1] = static_cast<std::uint8_t>(1 + p * (p - 1));
    out["sigma" + std::to_string(k)] = s;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<int> FiniteGroup::generator_indices() const {
  std::vector<int> out;
  for (const auto& g : generators_) out.push_back(index_of(g));
  return out;
}

MonomialElement FiniteGroup::canonical(const MonomialElement& x) const {
  if (central_.size() <= 1) return x;
  MonomialElement best = x;
  for (const auto& c : central_) best = std::min(best, model_.multiply(x, c));
  return best;
}

std::optional<int> FiniteGroup::find(const MonomialElement& x) const {
  auto it = index_.find(canonical(x));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FiniteGroup::index_of(const MonomialElement& x) const {
  auto r = find(x);
  if (!r) throw GroupError("element " + model_.to_string(x) + " is not in group " + name_);
  return *r;
}

int FiniteGroup::mul(int a, int b) const {
  if (!table_.empty())
    return table_[static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b)];
  return index_.at(canonical(model_.multiply(element(a), element(b))));
}

int FiniteGroup::pow(int a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int r = identity_, base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

int FiniteGroup::order_of(int a) const {
  int x = a, n = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

nlohmann::ordered_json FiniteGroup::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p();
  auto& gens = j["generators"] = nlohmann::ordered_json::array();
  for (const auto& g : generators_) gens.push_back(model_.to_json(g));
  if (central_gens_.empty()) {
    j["quotient_center"] = nullptr;
  } else {
    auto& q = j["quotient_center"] = nlohmann::ordered_json::array();
    for (const auto& c : central_gens_) q.push_back(model_.to_json(c));
  }
  return j;
}

namespace {

std::vector<MonomialElement> ambient_closure(const MonomialModel& m,
                                             const std::vector<MonomialElement>& gens,
                                             std::size_t cap) {
  std::vector<MonomialElement> out{m.identity()};
  std::unordered_map<MonomialElement, int, MonomialElementHash> seen{{m.identity(), 0}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      auto y = m.multiply(g, out[i]);
      if (seen.emplace(y, 0).second) {
        out.push_back(y);
        if (out.size() > cap)
          throw GroupError("subgroup enumeration exceeded cap " + std::to_string(cap));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FiniteGroup generate(int p, const std::vector<MonomialElement>& gens,
                     const std::vector<MonomialElement>& central_gens, std::size_t cap) {
  FiniteGroup g;
  g.model_ = MonomialModel(p);
  g.central_gens_ = central_gens;
  g.central_ = ambient_closure(g.model_, central_gens, cap);
  for (const auto& x : gens) g.generators_.push_back(g.canonical(x));

  std::vector<MonomialElement> elems{g.canonical(g.model_.identity())};
  std::unordered_map<MonomialElement, int, MonomialElementHash> seen{{elems[0], 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : g.generators_) {
      auto y = g.canonical(g.model_.multiply(s, elems[i]));
      if (seen.emplace(y, 0).second) {
        elems.push_back(y);
        if (elems.size() > cap)
          throw GroupError("group enumeration exceeded cap " + std::to_string(cap));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  g.elements_ = std::move(elems);
  g.index_.reserve(g.elements_.size() * 2);
  for (std::size_t i = 0; i < g.elements_.size(); ++i)
    g.index_.emplace(g.elements_[i], static_cast<int>(i));
  g.identity_ = g.index_.at(g.canonical(g.model_.identity()));

  const std::size_t n = g.elements_.size();
  if (n <= static_cast<std::size_t>(kTableOrderCap)) {
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g.table_[a * n + b] =
            g.index_.at(g.canonical(g.model_.multiply(g.elements_[a], g.elements_[b])));
  }
  g.inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    g.inv_[a] = g.index_.at(g.canonical(g.model_.inverse(g.elements_[a])));
  return g;
}

FiniteGroup group_from_json(const nlohmann::json& j, std::size_t cap) {
  int p = j.at("p").get<int>();
  MonomialModel m(p);
  std::vector<MonomialElement> gens, central;
  for (const auto& x : j.at("generators")) gens.push_back(m.from_json(x));
  if (j.contains("quotient_center") && !j.at("quotient_center").is_null()) {
    const auto& q = j.at("quotient_center");
    if (q.is_array()) {
      for (const auto& x : q) central.push_back(m.from_json(x));
    } else {
      central.push_back(m.from_json(q));
    }
  }
  return generate(p, gens, central, cap);
}

// ---------------------------------------------------------------------------

Homomorphism::Homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                           std::vector<MonomialElement> images)
    : source_(&source), target_(&target), images_(std::move(images)) {
  const auto& gens = source.generators();
  if (images_.size() != gens.size())
    throw GroupError("homomorphism needs " + std::to_string(gens.size()) + " images, got " +
                     std::to_string(images_.size()));
  std::vector<int> gi = source.generator_indices();
  std::vector<int> ti;
  for (const auto& x : images_) ti.push_back(target.index_of(x));

  const int n = source.order();
  map_.assign(static_cast<std::size_t>(n), -1);
  map_[static_cast<std::size_t>(source.identity_index())] = target.identity_index();
  std::vector<int> queue{source.identity_index()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int x = queue[q];
    for (std::size_t s = 0; s < gi.size(); ++s) {
      int y = source.mul(gi[s], x);
      int want = target.mul(ti[s], map_[static_cast<std::size_t>(x)]);
      int& slot = map_[static_cast<std::size_t>(y)];
      if (slot < 0) {
        slot = want;
        queue.push_back(y);
      } else if (slot != want) {
        throw GroupError("not a homomorphism: generator " + std::to_string(s) + " applied to " +
                         source.model().to_string(source.element(x)) + " in " + source.name());
      }
    }
  }
}

bool Homomorphism::is_injective() const {
  std::vector<char> hit(static_cast<std::size_t>(target_->order()), 0);
  for (int y : map_) {
    if (hit[static_cast<std::size_t>(y)]) return false;
    hit[static_cast<std::size_t>(y)] = 1;
  }
  return true;
}

bool Homomorphism::is_surjective() const {
  std::vector<char> hit(static_cast<std::size_t>(target_->order()), 0);
  for (int y : map_) hit[static_cast<std::size_t>(y)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool Homomorphism::operator==(const Homomorphism& other) const {
  return source_ == other.source_ && target_ == other.target_ && map_ == other.map_;
}

nlohmann::ordered_json Homomorphism::to_json() const {
  nlohmann::ordered_json j;
  j["source"] = source_->to_json();
  j["target"] = target_->to_json();
  auto& im = j["images"] = nlohmann::ordered_json::array();
  for (const auto& x : images_) im.push_back(target_->model().to_json(x));
  return j;
}

Homomorphism hom(const FiniteGroup& source, const FiniteGroup& target,
                 std::vector<MonomialElement> images) {
  return Homomorphism(source, target, std::move(images));
}

Homomorphism inclusion(const FiniteGroup& sub, const FiniteGroup& super) {
  return Homomorphism(sub, super, sub.generators());
}

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
  if (&inner.target() != &outer.source())
    throw GroupError("compose: inner target is not outer source");
  std::vector<MonomialElement> imgs;
  for (int g : inner.source().generator_indices())
    imgs.push_back(outer.target().element(outer(inner(g))));
  return Homomorphism(inner.source(), outer.target(), std::move(imgs));
}

QuotientResult central_quotient(const FiniteGroup& g, const MonomialElement& z, std::size_t cap) {
  if (!g.contains(z)) throw GroupError("central_quotient: element not in group");
  const auto& m = g.model();
  for (std::size_t s = 0; s < g.generators().size(); ++s) {
    const auto& x = g.generators()[s];
    if (g.canonical(m.multiply(x, z)) != g.canonical(m.multiply(z, x)))
      throw GroupError("central_quotient: element does not commute with generator " +
                       std::to_string(s) + " = " + m.to_string(x));
  }
  auto central = g.central_generators();
  central.push_back(z);
  QuotientResult r{generate(g.p(), g.generators(), central, cap), {}};
  for (const auto& x : g.generators()) r.projection_images.push_back(r.quotient.canonical(x));
  r.quotient.set_name(g.name() + "/<z>");
  return r;
}

// ---------------------------------------------------------------------------

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> out{g.identity_index()};
  in[static_cast<std::size_t>(g.identity_index())] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int s : gens) {
      int y = g.mul(s, out[i]);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> irredundant_generators(const FiniteGroup& g) {
  std::vector<int> out;
  std::size_t reached = 1;
  for (int s : g.generator_indices()) {
    if (reached == static_cast<std::size_t>(g.order())) break;
    auto trial = out;
    trial.push_back(s);
    std::size_t sz = subgroup_closure(g, trial).size();
    if (sz > reached) {
      out = std::move(trial);
      reached = sz;
    }
  }
  return out;
}

bool is_abelian(const FiniteGroup& g) {
  auto gi = g.generator_indices();
  for (int a : gi)
    for (int b : gi)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_elementary_abelian(const FiniteGroup& g) {
  if (!is_abelian(g)) return false;
  for (int i = 0; i < g.order(); ++i)
    if (i != g.identity_index() && g.order_of(i) != g.p()) return false;
  return true;
}

GroupInvariants group_invariants(const FiniteGroup& g) {
  GroupInvariants inv;
  inv.order = g.order();
  auto gi = g.generator_indices();
  inv.exponent = 1;
  for (int i = 0; i < g.order(); ++i) inv.exponent = std::lcm(inv.exponent, g.order_of(i));
  for (int i = 0; i < g.order(); ++i) {
    bool central = std::all_of(gi.begin(), gi.end(),
                               [&](int s) { return g.mul(s, i) == g.mul(i, s); });
    if (central) inv.center.push_back(i);
  }

  // Normal closure of generator commutators.
  std::vector<int> comms;
  for (int a : gi)
    for (int b : gi) comms.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  std::vector<int> derived = subgroup_closure(g, comms);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (int x : derived) in[static_cast<std::size_t>(x)] = 1;
    std::vector<int> extra;
    for (int x : derived)
      for (int s : gi) {
        int y = g.mul(g.mul(g.inv(s), x), s);
        if (!in[static_cast<std::size_t>(y)]) extra.push_back(y);
      }
    if (!extra.empty()) {
      extra.insert(extra.end(), derived.begin(), derived.end());
      derived = subgroup_closure(g, extra);
      grew = true;
    }
  }
  inv.commutator_subgroup = derived;

  // Abelianization of a p-group: |Omega_k(G/G')| = #{x : x^{p^k} in G'} / |G'|
  // determines the cyclic factors.
  std::vector<char> in_derived(static_cast<std::size_t>(g.order()), 0);
  for (int x : derived) in_derived[static_cast<std::size_t>(x)] = 1;
  const int q = g.order() / static_cast<int>(derived.size());
  std::vector<int> log_omega{0};
  for (long long pk = g.p(); ; pk *= g.p()) {
    int cnt = 0;
    for (int x = 0; x < g.order(); ++x)
      if (in_derived[static_cast<std::size_t>(g.pow(x, pk))]) ++cnt;
    int om = cnt / static_cast<int>(derived.size());
    int lg = 0;
    for (int t = om; t > 1; t /= g.p()) ++lg;
    log_omega.push_back(lg);
    if (om == q) break;
  }
  // Number of cyclic factors of order >= p^k is log_omega[k] - log_omega[k-1].
  std::vector<int> at_least;
  for (std::size_t k = 1; k < log_omega.size(); ++k)
    at_least.push_back(log_omega[k] - log_omega[k - 1]);
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    int exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
    int ord = 1;
    for (std::size_t t = 0; t <= k; ++t) ord *= g.p();
    for (int c = 0; c < exact; ++c) inv.abelianization.push_back(ord);
  }
  std::sort(inv.abelianization.rbegin(), inv.abelianization.rend());
  return inv;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  auto gi = g.generator_indices();
  std::vector<int> cls(static_cast<std::size_t>(g.order()), -1);
  std::vector<ConjugacyClass> out;
  for (int x = 0; x < g.order(); ++x) {
    if (cls[static_cast<std::size_t>(x)] >= 0) continue;
    int id = static_cast<int>(out.size());
    ConjugacyClass c{x, {x}};
    cls[static_cast<std::size_t>(x)] = id;
    for (std::size_t i = 0; i < c.members.size(); ++i)
      for (int s : gi) {
        int y = g.mul(g.mul(s, c.members[i]), g.inv(s));
        if (cls[static_cast<std::size_t>(y)] < 0) {
          cls[static_cast<std::size_t>(y)] = id;
          c.members.push_back(y);
        }
      }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace cohomcheck
