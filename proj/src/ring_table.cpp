#include "cohomcheck/ring_table.hpp"

#include <sstream>

namespace cohomcheck {

RingTable::RingTable(int p, int max_degree, std::vector<int> dims)
    : p_(p), D_(max_degree), dims_(std::move(dims)) {
  if (static_cast<int>(dims_.size()) != D_ + 1) throw LinalgError("RingTable: dims length mismatch");
  prod_.resize(static_cast<std::size_t>((D_ + 1) * (D_ + 1)));
  for (int m = 0; m <= D_; ++m)
    for (int n = 0; m + n <= D_; ++n)
      prod_[key(m, n)].assign(static_cast<std::size_t>(dim(m) * dim(n) * dim(m + n)), 0);
  q0_.resize(static_cast<std::size_t>(D_ + 1));
  has_q0_.assign(static_cast<std::size_t>(D_ + 1), 0);
  labels.resize(static_cast<std::size_t>(D_ + 1));
  for (int n = 0; n <= D_; ++n)
    for (int i = 0; i < dim(n); ++i)
      labels[static_cast<std::size_t>(n)].push_back(n == 0 ? "1" : "h" + std::to_string(n) + "_" + std::to_string(i));
}

CohomologyClass RingTable::zero(int n) const { return {n, FpVec(static_cast<std::size_t>(dim(n)), 0)}; }

CohomologyClass RingTable::unit() const {
  auto u = zero(0);
  u.coords.at(0) = 1;
  return u;
}

CohomologyClass RingTable::basis(int n, int i) const {
  auto u = zero(n);
  u.coords.at(static_cast<std::size_t>(i)) = 1;
  return u;
}

const CohomologyClass& RingTable::at(const std::string& name) const {
  auto it = named.find(name);
  if (it == named.end()) throw LinalgError("RingTable: no class named " + name);
  return it->second;
}

const FpVec& RingTable::basis_product(int m, int i, int n, int j) const {
  static thread_local FpVec scratch;
  const auto& blk = prod_.at(key(m, n));
  const std::size_t d = static_cast<std::size_t>(dim(m + n));
  const std::size_t off = (static_cast<std::size_t>(i) * static_cast<std::size_t>(dim(n)) + static_cast<std::size_t>(j)) * d;
  scratch.assign(blk.begin() + static_cast<long>(off), blk.begin() + static_cast<long>(off + d));
  return scratch;
}

void RingTable::set_basis_product(int m, int i, int n, int j, FpVec v) {
  auto& blk = prod_.at(key(m, n));
  const std::size_t d = static_cast<std::size_t>(dim(m + n));
  const std::size_t off = (static_cast<std::size_t>(i) * static_cast<std::size_t>(dim(n)) + static_cast<std::size_t>(j)) * d;
  for (std::size_t k = 0; k < d; ++k) blk[off + k] = static_cast<std::uint8_t>(v[k] % p_);
}

void RingTable::set_q0(int n, FpMatrix m) {
  q0_.at(static_cast<std::size_t>(n)) = std::move(m);
  has_q0_.at(static_cast<std::size_t>(n)) = 1;
}

bool RingTable::has_q0(int n) const {
  return n >= 0 && n <= D_ && has_q0_[static_cast<std::size_t>(n)];
}

CohomologyClass RingTable::mul(const CohomologyClass& u, const CohomologyClass& v) const {
  const int m = u.degree, n = v.degree;
  if (m + n > D_) throw LinalgError("RingTable::mul: degree " + std::to_string(m + n) + " exceeds table");
  CohomologyClass out = zero(m + n);
  const auto& blk = prod_[key(m, n)];
  const std::size_t d = static_cast<std::size_t>(dim(m + n)), dn = static_cast<std::size_t>(dim(n));
  std::vector<int> acc(d, 0);
  for (std::size_t i = 0; i < u.coords.size(); ++i) {
    if (!u.coords[i]) continue;
    for (std::size_t j = 0; j < v.coords.size(); ++j) {
      if (!v.coords[j]) continue;
      const int c = u.coords[i] * v.coords[j];
      const std::uint8_t* row = blk.data() + (i * dn + j) * d;
      for (std::size_t k = 0; k < d; ++k) acc[k] += c * row[k];
    }
  }
  for (std::size_t k = 0; k < d; ++k) out.coords[k] = static_cast<std::uint8_t>(acc[k] % p_);
  return out;
}

CohomologyClass RingTable::q0(const CohomologyClass& u) const {
  if (!has_q0(u.degree)) throw LinalgError("RingTable::q0: not available in degree " + std::to_string(u.degree));
  return {u.degree + 1, q0_[static_cast<std::size_t>(u.degree)].apply(u.coords)};
}

CohomologyClass RingTable::add(const CohomologyClass& u, const CohomologyClass& v) const {
  if (u.degree != v.degree) throw LinalgError("RingTable::add: degree mismatch");
  auto out = u;
  for (std::size_t k = 0; k < out.coords.size(); ++k)
    out.coords[k] = static_cast<std::uint8_t>((u.coords[k] + v.coords[k]) % p_);
  return out;
}

CohomologyClass RingTable::scale(const CohomologyClass& u, int c) const {
  auto out = u;
  c = ((c % p_) + p_) % p_;
  for (auto& x : out.coords) x = static_cast<std::uint8_t>((x * c) % p_);
  return out;
}

CohomologyClass RingTable::sub(const CohomologyClass& u, const CohomologyClass& v) const {
  return add(u, scale(v, -1));
}

std::string RingTable::validate() const {
  auto sign = [this](int e) { return (e % 2 == 0) ? 1 : p_ - 1; };
  for (int m = 0; m <= D_; ++m)
    for (int n = 0; m + n <= D_; ++n)
      for (int i = 0; i < dim(m); ++i)
        for (int j = 0; j < dim(n); ++j) {
          auto a = basis(m, i), b = basis(n, j);
          auto ab = mul(a, b), ba = mul(b, a);
          if (ab != scale(ba, sign(m * n))) {
            std::ostringstream os;
            os << "graded commutativity fails for (" << m << "," << i << ") (" << n << "," << j << ")";
            return os.str();
          }
          if (has_q0(m) && has_q0(n) && has_q0(m + n) && m + n + 1 <= D_) {
            auto lhs = q0(ab);
            auto rhs = add(mul(q0(a), b), scale(mul(a, q0(b)), sign(m)));
            if (lhs != rhs) {
              std::ostringstream os;
              os << "Q0 derivation fails for (" << m << "," << i << ") (" << n << "," << j << ")";
              return os.str();
            }
          }
          for (int k = 0; m + n + k <= D_; ++k)
            for (int l = 0; l < dim(k); ++l) {
              auto c = basis(k, l);
              if (mul(ab, c) != mul(a, mul(b, c))) {
                std::ostringstream os;
                os << "associativity fails for degrees " << m << "," << n << "," << k;
                return os.str();
              }
            }
        }
  for (int n = 0; n + 2 <= D_; ++n)
    if (has_q0(n) && has_q0(n + 1))
      for (int i = 0; i < dim(n); ++i)
        if (!q0(q0(basis(n, i))).is_zero()) return "Q0^2 != 0 in degree " + std::to_string(n);
  return {};
}

nlohmann::ordered_json RingTable::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p_;
  j["D"] = D_;
  j["basis"] = labels;
  auto& prods = j["products"] = nlohmann::ordered_json::array();
  for (int m = 0; m <= D_; ++m)
    for (int n = 0; m + n <= D_; ++n)
      for (int a = 0; a < dim(m); ++a)
        for (int b = 0; b < dim(n); ++b) {
          const auto& v = basis_product(m, a, n, b);
          for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k]) prods.push_back({{m, a}, {n, b}, {static_cast<int>(k), v[k]}});
        }
  auto& q = j["q0"] = nlohmann::ordered_json::object();
  for (int n = 0; n <= D_; ++n) {
    if (!has_q0(n)) continue;
    const auto& m = q0_[static_cast<std::size_t>(n)];
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows; ++r) rows.push_back(m.row(r));
    q[std::to_string(n)] = rows;
  }
  auto& nm = j["named"] = nlohmann::ordered_json::object();
  for (const auto& [name, c] : named) nm[name] = {c.degree, c.coords};
  return j;
}

RingTable RingTable::from_json(const nlohmann::json& j) {
  int p = j.at("p").get<int>(), D = j.at("D").get<int>();
  auto basis = j.at("basis").get<std::vector<std::vector<std::string>>>();
  std::vector<int> dims;
  for (const auto& b : basis) dims.push_back(static_cast<int>(b.size()));
  RingTable t(p, D, dims);
  t.labels = basis;
  std::map<std::tuple<int, int, int, int>, FpVec> acc;
  for (const auto& e : j.at("products")) {
    int m = e[0][0], a = e[0][1], n = e[1][0], b = e[1][1], k = e[2][0], v = e[2][1];
    auto& vec = acc[{m, a, n, b}];
    if (vec.empty()) vec.assign(static_cast<std::size_t>(t.dim(m + n)), 0);
    vec[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(v);
  }
  for (auto& [k, v] : acc) t.set_basis_product(std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k), v);
  for (const auto& [deg, rows] : j.at("q0").items()) {
    int n = std::stoi(deg);
    FpMatrix m(p, static_cast<std::size_t>(t.dim(n + 1)), static_cast<std::size_t>(t.dim(n)));
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c].get<std::uint8_t>();
    t.set_q0(n, std::move(m));
  }
  for (const auto& [name, val] : j.at("named").items())
    t.named[name] = {val[0].get<int>(), val[1].get<FpVec>()};
  return t;
}

// ---------------------------------------------------------------------------

RingTable ring_table(const CohomologyRing& ring, int D) {
  if (D > ring.max_degree()) throw ResolutionError("ring_table: degree exceeds the resolution");
  std::vector<int> dims;
  for (int n = 0; n <= D; ++n) dims.push_back(ring.dim(n));
  RingTable t(ring.p(), D, dims);
  for (int m = 0; m <= D; ++m)
    for (int n = 0; m + n <= D; ++n)
      for (int i = 0; i < ring.dim(m); ++i)
        for (int j = 0; j < ring.dim(n); ++j)
          t.set_basis_product(m, i, n, j, ring.product(ring.basis(m, i), ring.basis(n, j)).coords);
  for (int n = 0; n + 1 <= D; ++n) t.set_q0(n, ring.bockstein_matrix(n));
  return t;
}

namespace {

struct TensorIndex {
  const RingTable* a;
  const RingTable* b;
  int D;
  // offset of the (i, n - i) block inside total degree n
  int offset(int n, int i) const {
    int off = 0;
    for (int k = 0; k < i; ++k) off += a->dim(k) * b->dim(n - k);
    return off;
  }
  int index(int n, int i, int x, int y) const { return offset(n, i) + x * b->dim(n - i) + y; }
  int dim(int n) const { return offset(n, n + 1); }
};

}  // namespace

RingTable tensor(const RingTable& a, const RingTable& b, int D) {
  if (a.p() != b.p()) throw LinalgError("tensor: prime mismatch");
  if (D > a.max_degree() || D > b.max_degree()) throw LinalgError("tensor: factor too shallow");
  const int P = a.p();
  TensorIndex T{&a, &b, D};
  std::vector<int> dims;
  for (int n = 0; n <= D; ++n) dims.push_back(T.dim(n));
  RingTable t(P, D, dims);
  for (int n = 0; n <= D; ++n) {
    auto& lab = t.labels[static_cast<std::size_t>(n)];
    lab.clear();
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < a.dim(i); ++x)
        for (int y = 0; y < b.dim(n - i); ++y) {
          const auto& la = a.labels[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)];
          const auto& lb = b.labels[static_cast<std::size_t>(n - i)][static_cast<std::size_t>(y)];
          lab.push_back(la == "1" ? lb : lb == "1" ? la : la + "*" + lb);
        }
  }
  auto sign = [P](int e) { return e % 2 == 0 ? 1 : P - 1; };
  for (int m = 0; m <= D; ++m)
    for (int n = 0; m + n <= D; ++n)
      for (int i = 0; i <= m; ++i)
        for (int x = 0; x < a.dim(i); ++x)
          for (int y = 0; y < b.dim(m - i); ++y)
            for (int k = 0; k <= n; ++k)
              for (int u = 0; u < a.dim(k); ++u)
                for (int w = 0; w < b.dim(n - k); ++w) {
                  const FpVec aa = a.basis_product(i, x, k, u);
                  const FpVec bb = b.basis_product(m - i, y, n - k, w);
                  const int s = sign((m - i) * k);
                  FpVec out(static_cast<std::size_t>(T.dim(m + n)), 0);
                  for (std::size_t r = 0; r < aa.size(); ++r) {
                    if (!aa[r]) continue;
                    for (std::size_t q = 0; q < bb.size(); ++q) {
                      if (!bb[q]) continue;
                      auto& o = out[static_cast<std::size_t>(T.index(m + n, i + k, static_cast<int>(r), static_cast<int>(q)))];
                      o = static_cast<std::uint8_t>((o + s * aa[r] * bb[q]) % P);
                    }
                  }
                  t.set_basis_product(m, T.index(m, i, x, y), n, T.index(n, k, u, w), std::move(out));
                }
  for (int n = 0; n + 1 <= D; ++n) {
    bool ok = true;
    for (int i = 0; i <= n; ++i) ok = ok && (a.dim(i) == 0 || a.has_q0(i)) && (b.dim(n - i) == 0 || b.has_q0(n - i));
    if (!ok) continue;
    FpMatrix q(P, static_cast<std::size_t>(T.dim(n + 1)), static_cast<std::size_t>(T.dim(n)));
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < a.dim(i); ++x)
        for (int y = 0; y < b.dim(n - i); ++y) {
          const std::size_t col = static_cast<std::size_t>(T.index(n, i, x, y));
          auto qa = a.q0(a.basis(i, x));
          for (int r = 0; r < a.dim(i + 1); ++r)
            if (qa.coords[static_cast<std::size_t>(r)]) {
              auto& e = q.at(static_cast<std::size_t>(T.index(n + 1, i + 1, r, y)), col);
              e = static_cast<std::uint8_t>((e + qa.coords[static_cast<std::size_t>(r)]) % P);
            }
          auto qb = b.q0(b.basis(n - i, y));
          for (int r = 0; r < b.dim(n - i + 1); ++r)
            if (qb.coords[static_cast<std::size_t>(r)]) {
              auto& e = q.at(static_cast<std::size_t>(T.index(n + 1, i, x, r)), col);
              e = static_cast<std::uint8_t>((e + sign(i) * qb.coords[static_cast<std::size_t>(r)]) % P);
            }
        }
    t.set_q0(n, std::move(q));
  }
  // Names used by both factors become "(name,1)" and "(1,name)".
  for (const auto& [name, c] : a.named)
    if (c.degree <= D) t.named[b.named.count(name) ? "(" + name + ",1)" : name] = tensor_left(a, b, D, c);
  for (const auto& [name, c] : b.named)
    if (c.degree <= D) t.named[a.named.count(name) ? "(1," + name + ")" : name] = tensor_right(a, b, D, c);
  return t;
}

CohomologyClass tensor_left(const RingTable& a, const RingTable& b, int D, const CohomologyClass& u) {
  TensorIndex T{&a, &b, D};
  CohomologyClass out{u.degree, FpVec(static_cast<std::size_t>(T.dim(u.degree)), 0)};
  for (int x = 0; x < a.dim(u.degree); ++x)
    out.coords[static_cast<std::size_t>(T.index(u.degree, u.degree, x, 0))] = u.coords[static_cast<std::size_t>(x)];
  return out;
}

CohomologyClass tensor_right(const RingTable& a, const RingTable& b, int D, const CohomologyClass& v) {
  TensorIndex T{&a, &b, D};
  CohomologyClass out{v.degree, FpVec(static_cast<std::size_t>(T.dim(v.degree)), 0)};
  for (int y = 0; y < b.dim(v.degree); ++y)
    out.coords[static_cast<std::size_t>(T.index(v.degree, 0, 0, y))] = v.coords[static_cast<std::size_t>(y)];
  return out;
}

}  // namespace cohomcheck
