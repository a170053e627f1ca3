#include "cohomcheck/symbolic.hpp"

#include <bit>
#include <functional>
#include <sstream>

namespace cohomcheck {

int Monomial::degree() const {
  int d = std::popcount(ext);
  for (int e : exps) d += 2 * e;
  return d;
}

int SymbolicClass::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void SymbolicClass::add_term(const Monomial& m, int c) {
  c = ((c % p_) + p_) % p_;
  if (!c) return;
  if (m.exps.size() != static_cast<std::size_t>(rank_)) throw SymbolicError("monomial rank mismatch");
  int& slot = terms_[m];
  slot = (slot + c) % p_;
  if (!slot) terms_.erase(m);
}

namespace {

void require_same(const SymbolicClass& u, const SymbolicClass& v) {
  if (u.p() != v.p() || u.rank() != v.rank()) throw SymbolicError("classes from different rings");
}

// Sign of the shuffle merging exterior subsets a and b, 0 if they meet.
int merge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int inv = 0;
  for (std::uint32_t x = b; x; x &= x - 1) {
    int j = std::countr_zero(x);
    inv += std::popcount(a >> (j + 1));
  }
  return inv % 2 ? -1 : 1;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m{a.ext | b.ext, a.exps};
  for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += b.exps[i];
  return m;
}

// Derivation with a_i -> A_i^e, A_i -> 0.
SymbolicClass derivation(const SymbolicClass& u, int e) {
  SymbolicClass out(u.p(), u.rank());
  for (const auto& [m, c] : u.terms()) {
    int pos = 0;
    for (int i = 0; i < u.rank(); ++i) {
      if (!(m.ext >> i & 1u)) continue;
      Monomial t = m;
      t.ext &= ~(1u << i);
      t.exps[static_cast<std::size_t>(i)] += e;
      out.add_term(t, pos % 2 ? -c : c);
      ++pos;
    }
  }
  return out;
}

}  // namespace

SymbolicClass operator+(const SymbolicClass& u, const SymbolicClass& v) {
  require_same(u, v);
  SymbolicClass out = u;
  for (const auto& [m, c] : v.terms()) out.add_term(m, c);
  return out;
}

SymbolicClass operator*(int c, const SymbolicClass& u) {
  SymbolicClass out(u.p(), u.rank());
  for (const auto& [m, a] : u.terms()) out.add_term(m, a * (c % u.p()));
  return out;
}

SymbolicClass operator-(const SymbolicClass& u, const SymbolicClass& v) { return u + (-1) * v; }

SymbolicClass operator*(const SymbolicClass& u, const SymbolicClass& v) {
  require_same(u, v);
  SymbolicClass out(u.p(), u.rank());
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) {
      int s = merge_sign(a.ext, b.ext);
      if (s) out.add_term(mono_mul(a, b), s * ca * cb);
    }
  return out;
}

SymbolicClass pow(const SymbolicClass& u, int e) {
  SymbolicClass out(u.p(), u.rank());
  out.add_term(Monomial{0, std::vector<int>(static_cast<std::size_t>(u.rank()), 0)}, 1);
  for (int i = 0; i < e; ++i) out = out * u;
  return out;
}

SymbolicClass q0(const SymbolicClass& u) { return derivation(u, 1); }
SymbolicClass q1(const SymbolicClass& u) { return derivation(u, u.p()); }

// ---------------------------------------------------------------------------

SymbolicRing::SymbolicRing(int p, std::vector<std::string> letters) : p_(p), letters_(std::move(letters)) {
  if (letters_.empty() || letters_.size() > 16) throw SymbolicError("rank must be between 1 and 16");
}

int SymbolicRing::index_of(const std::string& letter) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == letter) return static_cast<int>(i);
  throw SymbolicError("unknown variable " + letter);
}

SymbolicClass SymbolicRing::constant(int c) const {
  SymbolicClass u = zero();
  u.add_term(Monomial{0, std::vector<int>(static_cast<std::size_t>(rank()), 0)}, c);
  return u;
}

SymbolicClass SymbolicRing::one() const { return constant(1); }

SymbolicClass SymbolicRing::ext(int i) const {
  SymbolicClass u = zero();
  u.add_term(Monomial{1u << i, std::vector<int>(static_cast<std::size_t>(rank()), 0)}, 1);
  return u;
}

SymbolicClass SymbolicRing::poly(int i) const {
  Monomial m{0, std::vector<int>(static_cast<std::size_t>(rank()), 0)};
  m.exps[static_cast<std::size_t>(i)] = 1;
  SymbolicClass u = zero();
  u.add_term(m, 1);
  return u;
}

SymbolicClass SymbolicRing::gen(const std::string& name) const {
  if (name.size() < 2) throw SymbolicError("bad generator name " + name);
  int i = index_of(name.substr(0, name.size() - 1));
  char d = name.back();
  if (d == '1') return ext(i);
  if (d == '2') return poly(i);
  throw SymbolicError("bad generator name " + name);
}

std::vector<Monomial> SymbolicRing::basis(int n) const {
  std::vector<Monomial> out;
  const int r = rank();
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    int rest = n - std::popcount(mask);
    if (rest < 0 || rest % 2) continue;
    std::vector<int> exps(static_cast<std::size_t>(r), 0);
    std::function<void(int, int)> fill = [&](int i, int left) {
      if (i == r - 1) {
        exps[static_cast<std::size_t>(i)] = left;
        out.push_back({mask, exps});
        return;
      }
      for (int e = 0; e <= left; ++e) {
        exps[static_cast<std::size_t>(i)] = e;
        fill(i + 1, left - e);
      }
    };
    fill(0, rest / 2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string SymbolicRing::to_string(const SymbolicClass& u) const {
  if (u.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : u.terms()) {
    int signed_c = c > p_ / 2 ? c - p_ : c;
    if (!first) os << (signed_c < 0 ? " - " : " + ");
    else if (signed_c < 0) os << "-";
    first = false;
    int a = signed_c < 0 ? -signed_c : signed_c;
    std::string body;
    for (int i = 0; i < rank(); ++i)
      if (m.ext >> i & 1u) body += letters_[static_cast<std::size_t>(i)] + "1";
    for (int i = 0; i < rank(); ++i) {
      int e = m.exps[static_cast<std::size_t>(i)];
      if (!e) continue;
      body += letters_[static_cast<std::size_t>(i)] + "2";
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (a != 1 || body.empty()) os << a;
    os << body;
  }
  return os.str();
}

nlohmann::ordered_json SymbolicRing::to_json(const SymbolicClass& u) const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [m, c] : u.terms()) {
    std::vector<int> ext;
    for (int i = 0; i < rank(); ++i)
      if (m.ext >> i & 1u) ext.push_back(i);
    arr.push_back({{"ext", ext}, {"exps", m.exps}, {"coeff", c}});
  }
  return arr;
}

SymbolicClass SymbolicRing::from_json(const nlohmann::json& j) const {
  SymbolicClass u = zero();
  for (const auto& t : j) {
    Monomial m;
    for (int i : t.at("ext").get<std::vector<int>>()) m.ext |= 1u << i;
    m.exps = t.at("exps").get<std::vector<int>>();
    u.add_term(m, t.at("coeff").get<int>());
  }
  return u;
}

// ---------------------------------------------------------------------------

InducedMap::InducedMap(int p, std::vector<std::vector<int>> m, int target_rank)
    : p_(p), target_rank_(target_rank), m_(std::move(m)) {
  for (const auto& row : m_)
    if (static_cast<int>(row.size()) != target_rank_) throw SymbolicError("induced map: row length mismatch");
}

InducedMap InducedMap::identity(int p, int rank) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return {p, std::move(m), rank};
}

SymbolicClass InducedMap::operator()(const SymbolicClass& u) const {
  if (u.rank() != source_rank() || u.p() != p_) throw SymbolicError("induced map: source ring mismatch");
  const SymbolicRing tgt(p_, std::vector<std::string>(static_cast<std::size_t>(target_rank_), "t"));
  std::vector<SymbolicClass> a, A;
  for (const auto& row : m_) {
    SymbolicClass x = tgt.zero(), X = tgt.zero();
    for (int j = 0; j < target_rank_; ++j) {
      x = x + row[static_cast<std::size_t>(j)] * tgt.ext(j);
      X = X + row[static_cast<std::size_t>(j)] * tgt.poly(j);
    }
    a.push_back(x);
    A.push_back(X);
  }
  SymbolicClass out = tgt.zero();
  for (const auto& [m, c] : u.terms()) {
    SymbolicClass t = tgt.constant(c);
    for (int i = 0; i < source_rank(); ++i)
      if (m.ext >> i & 1u) t = t * a[static_cast<std::size_t>(i)];
    for (int i = 0; i < source_rank(); ++i) t = t * pow(A[static_cast<std::size_t>(i)], m.exps[static_cast<std::size_t>(i)]);
    out = out + t;
  }
  return out;
}

SymbolicClass reduce_mod_M(const SymbolicClass& u, int z_index) {
  if (z_index < 0 || z_index >= u.rank()) throw SymbolicError("reduce_mod_M: bad z index");
  SymbolicClass out(u.p(), u.rank());
  for (const auto& [m, c] : u.terms())
    if (!(m.ext >> z_index & 1u) && m.exps[static_cast<std::size_t>(z_index)] == 1) out.add_term(m, c);
  return out;
}

std::vector<SymbolicClass> m_generators(const SymbolicRing& ring, int z_index, int max_exp) {
  auto z1 = ring.ext(z_index), z2 = ring.poly(z_index);
  std::vector<SymbolicClass> out{ring.one(), z1, z1 * z2};
  for (int i = 2; i <= max_exp; ++i) {
    out.push_back(pow(z2, i));
    out.push_back(z1 * pow(z2, i));
  }
  return out;
}

}  // namespace cohomcheck
