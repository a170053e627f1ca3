#include "cohomcheck/spectral.hpp"

#include <sstream>

namespace cohomcheck {

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::Split: return "split";
    case Certificate::ZeroAtE4: return "zero_at_E4";
    case Certificate::StableRange: return "stable_range";
    default: return "none";
  }
}

namespace {

int sgn(int e, int p) { return e % 2 == 0 ? 1 : p - 1; }

FpVec scaled(const FpVec& v, int c, int p) {
  FpVec out(v.size());
  c = ((c % p) + p) % p;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::uint8_t>((v[i] * c) % p);
  return out;
}

FpVec add(const FpVec& a, const FpVec& b, int p) {
  FpVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint8_t>((a[i] + b[i]) % p);
  return out;
}

bool is_zero(const FpVec& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

Echelon span_of(int p, std::size_t n, const std::vector<FpVec>& vs) {
  Echelon e(p, n);
  for (const auto& v : vs) e.insert(v);
  return e;
}

// Independent basis of the span.
std::vector<FpVec> basis_of(int p, std::size_t n, const std::vector<FpVec>& vs) {
  Echelon e(p, n);
  std::vector<FpVec> out;
  for (const auto& v : vs)
    if (e.insert(v)) out.push_back(v);
  return out;
}

}  // namespace

CentralSS::CentralSS(const RingTable& base, int total_degree)
    : base_(&base), D_(total_degree), Dpages_(std::min(total_degree, base.max_degree() - 2)) {
  if (total_degree < 0) throw SpectralError("negative total degree");
}

std::string CentralSS::fibre_label(int t) {
  std::string s;
  if (t % 2) s += "z1";
  int k = t / 2;
  if (k >= 1) s += "z2";
  if (k >= 2) s += "^" + std::to_string(k);
  return s.empty() ? "1" : s;
}

FpMatrix CentralSS::mul_matrix(int s, const CohomologyClass& c) const {
  const int n = base_->dim(s), m = base_->dim(s + c.degree);
  FpMatrix out(p(), static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto prod = base_->mul(base_->basis(s, i), c);
    for (int r = 0; r < m; ++r) out.at(static_cast<std::size_t>(r), static_cast<std::size_t>(i)) = prod.coords[static_cast<std::size_t>(r)];
  }
  return out;
}

void CentralSS::set_transgressions(const CohomologyClass& tau2, const CohomologyClass& tau3) {
  if (tau2.degree != 2 || tau3.degree != 3) throw SpectralError("transgressions must have degrees 2 and 3");
  tau2_ = tau2;
  tau3_ = tau3;
  configured_ = true;
  pages_.clear();
  m2_.clear();
  m3_.clear();
  for (int s = 0; s + 2 <= base_->max_degree(); ++s) m2_[{s, 0}] = mul_matrix(s, tau2_);
  for (int s = 0; s + 3 <= base_->max_degree(); ++s) m3_[{s, 0}] = mul_matrix(s, tau3_);
  auto err = check_square_zero();
  if (!err.empty()) throw SpectralError("inconsistent transgressions: " + err);
}

FpVec CentralSS::differential(int r, int s, int t, const FpVec& b) const {
  if (!configured_) throw SpectralError("transgressions not set");
  const int P = p();
  if (r == 2) {
    if (t % 2 == 0) return FpVec(static_cast<std::size_t>(base_->dim(s + 2)), 0);
    auto it = m2_.find({s, 0});
    if (it == m2_.end()) throw SpectralError("d2 target beyond the base degree");
    return scaled(it->second.apply(b), sgn(s, P), P);
  }
  if (r == 3) {
    if (t < 2) return FpVec(static_cast<std::size_t>(base_->dim(s + 3)), 0);
    auto it = m3_.find({s, 0});
    if (it == m3_.end()) throw SpectralError("d3 target beyond the base degree");
    return scaled(it->second.apply(b), sgn(s, P) * (t / 2), P);
  }
  throw SpectralError("only d2 and d3 are modelled");
}

const Subquotient& CentralSS::page(int r, int s, int t) const {
  if (r < 2 || r > 4) throw SpectralError("pages E2..E4 only");
  if (s < 0 || t < 0 || s > base_->max_degree()) throw SpectralError("position outside the base range");
  auto key = std::make_tuple(r, s, t);
  if (auto it = pages_.find(key); it != pages_.end()) return it->second;
  const int P = p();
  const std::size_t n = static_cast<std::size_t>(base_->dim(s));
  Subquotient out;
  out.ambient = n;
  if (r == 2) {
    for (std::size_t i = 0; i < n; ++i) {
      FpVec e(n, 0);
      e[i] = 1;
      out.z.push_back(std::move(e));
    }
  } else {
    if (!configured_) throw SpectralError("transgressions not set");
    const int q = r - 1;  // previous page
    const auto& prev = page(q, s, t);
    // Z_r: elements of Z_{r-1} whose d_{r-1} lies in B_{r-1}(target).
    const int ts = s + q, tt = t - q + 1;
    if (tt < 0) {
      out.z = prev.z;
    } else {
      const auto& tgt = page(q, ts, tt);
      Echelon bt = span_of(P, tgt.ambient, tgt.b);
      const std::size_t k = prev.z.size();
      Echelon ker(P, tgt.ambient, k);
      std::vector<FpVec> combos;
      for (std::size_t i = 0; i < k; ++i) {
        FpVec v(tgt.ambient + k, 0);
        auto img = differential(q, s, t, prev.z[i]);
        std::copy(img.begin(), img.end(), v.begin());
        bt.reduce(v.data());  // only the main part matters; tags untouched
        v[tgt.ambient + i] = 1;
        FpVec red = v;
        if (ker.reduce(red)) {
          FpVec c(red.begin() + static_cast<long>(tgt.ambient), red.end());
          combos.push_back(std::move(c));
        } else {
          ker.insert(std::move(v));
        }
      }
      std::vector<FpVec> zs;
      for (const auto& c : combos) {
        FpVec z(n, 0);
        for (std::size_t i = 0; i < k; ++i)
          if (c[i]) z = add(z, scaled(prev.z[i], c[i], P), P);
        zs.push_back(std::move(z));
      }
      // B_{r-1} lies inside Z_r; list it first so the basis extends it.
      std::vector<FpVec> all = prev.b;
      all.insert(all.end(), zs.begin(), zs.end());
      out.z = basis_of(P, n, all);
    }
    // B_r: B_{r-1} plus the image of d_{r-1} from (s - q, t + q - 1).
    std::vector<FpVec> bs = prev.b;
    if (s - q >= 0) {
      const auto& src = page(q, s - q, t + q - 1);
      for (const auto& z : src.z) bs.push_back(differential(q, s - q, t + q - 1, z));
    }
    out.b = basis_of(P, n, bs);
  }
  return pages_.emplace(key, std::move(out)).first->second;
}

bool CentralSS::is_zero_in(int r, int s, int t, const FpVec& v) const {
  const auto& pg = page(r, s, t);
  return span_of(p(), pg.ambient, pg.b).in_span(v);
}

bool CentralSS::is_basis_of(int r, int s, int t, const std::vector<FpVec>& vs) const {
  const auto& pg = page(r, s, t);
  if (static_cast<int>(vs.size()) != pg.dim()) return false;
  Echelon z = span_of(p(), pg.ambient, pg.z);
  for (const auto& v : vs)
    if (!z.in_span(v)) return false;
  Echelon e = span_of(p(), pg.ambient, pg.b);
  for (const auto& v : vs)
    if (!e.insert(v)) return false;
  return true;
}

std::vector<FpVec> CentralSS::kernel(int r, int s, int t) const {
  if (r == 4) throw SpectralError("no differential modelled on E4");
  return page(r + 1, s, t).z;
}

EInfinityEntry CentralSS::e_infinity(int s, int t) const {
  EInfinityEntry e{s, t, 0, Certificate::None, ""};
  if (!configured_) throw SpectralError("transgressions not set");
  if (tau2_.is_zero() && tau3_.is_zero()) {
    e.dim = page(2, s, t).dim();
    e.certificate = Certificate::Split;
    e.reason = "zero extension class: the extension splits and E2 = E_infinity";
    return e;
  }
  if (s + t > Dpages_) {
    e.dim = -1;
    e.reason = "outside the computed page range";
    return e;
  }
  e.dim = page(4, s, t).dim();
  if (e.dim == 0) {
    e.certificate = Certificate::ZeroAtE4;
    e.reason = "E4 vanishes";
    return e;
  }
  std::ostringstream why;
  for (int r = 4; r <= t + 1; ++r) {
    try {
      if (page(4, s + r, t - r + 1).dim() != 0) {
        e.reason = "d" + std::to_string(r) + " may leave a nonzero target";
        return e;
      }
    } catch (const SpectralError&) {
      e.reason = "target of d" + std::to_string(r) + " not computed";
      return e;
    }
    why << "d" << r << " out hits zero; ";
  }
  for (int r = 4; r <= s; ++r) {
    if (page(4, s - r, t + r - 1).dim() != 0) {
      e.reason = "d" + std::to_string(r) + " may arrive from a nonzero source";
      return e;
    }
    why << "d" << r << " in comes from zero; ";
  }
  e.certificate = Certificate::StableRange;
  e.reason = why.str().empty() ? "s <= 3 and t <= 2: no d_r with r >= 4 in or out" : why.str();
  return e;
}

int CentralSS::assemble_dim(int n) const {
  int total = 0;
  for (int s = 0; s <= n; ++s) {
    auto e = e_infinity(s, n - s);
    if (e.certificate == Certificate::None)
      throw SpectralError("uncertified position (" + std::to_string(s) + "," + std::to_string(n - s) + "): " + e.reason);
    total += e.dim;
  }
  return total;
}

std::string CentralSS::check_square_zero() const {
  const int bmax = base_->max_degree();
  for (int s = 0; s + 4 <= bmax; ++s)
    for (int t = 3; s + t <= D_; t += 2)
      for (int i = 0; i < base_->dim(s); ++i) {
        auto v = differential(2, s, t, base_->basis(s, i).coords);
        if (!is_zero(differential(2, s + 2, t - 1, v))) return "d2 d2 != 0 at (" + std::to_string(s) + "," + std::to_string(t) + ")";
      }
  for (int s = 0; s + 6 <= bmax; ++s)
    for (int t = 4; s + t + 2 <= Dpages_; ++t)
      for (const auto& z : page(3, s, t).z) {
        auto v = differential(3, s + 3, t - 2, differential(3, s, t, z));
        if (!is_zero_in(3, s + 6, t - 4, v)) return "d3 d3 != 0 at (" + std::to_string(s) + "," + std::to_string(t) + ")";
      }
  return {};
}

std::string CentralSS::check_multiplicativity() const {
  const int P = p(), bmax = base_->max_degree();
  // E2 product of (b at row t1) and (c at row t2).
  auto prod = [&](const FpVec& b, int s1, int t1, const FpVec& c, int s2, int t2) -> std::optional<FpVec> {
    if (t1 % 2 && t2 % 2) return std::nullopt;  // z1^2 = 0
    auto bc = base_->mul({s1, b}, {s2, c});
    return scaled(bc.coords, sgn(t1 * s2, P), P);
  };
  for (int s1 = 0; s1 <= bmax; ++s1)
    for (int t1 = 0; s1 + t1 <= D_; ++t1)
      for (int s2 = 0; s1 + s2 + 2 <= bmax; ++s2)
        for (int t2 = 0; s1 + t1 + s2 + t2 <= D_; ++t2) {
          if ((t1 % 2 && t2 % 2)) continue;
          for (int i = 0; i < base_->dim(s1); ++i)
            for (int j = 0; j < base_->dim(s2); ++j) {
              auto x = base_->basis(s1, i).coords, y = base_->basis(s2, j).coords;
              auto xy = prod(x, s1, t1, y, s2, t2);
              FpVec lhs = differential(2, s1 + s2, t1 + t2, *xy);
              FpVec rhs(lhs.size(), 0);
              if (auto a = prod(differential(2, s1, t1, x), s1 + 2, t1 - 1, y, s2, t2); a && t1 % 2)
                rhs = add(rhs, *a, P);
              if (auto b = prod(x, s1, t1, differential(2, s2, t2, y), s2 + 2, t2 - 1); b && t2 % 2)
                rhs = add(rhs, scaled(*b, sgn(s1 + t1, P), P), P);
              if (lhs != rhs) {
                std::ostringstream os;
                os << "d2 Leibniz fails for (" << s1 << "," << t1 << "," << i << ") (" << s2 << "," << t2 << "," << j << ")";
                return os.str();
              }
            }
        }
  for (int s1 = 0; s1 <= bmax; ++s1)
    for (int s2 = 0; s1 + s2 + 3 <= bmax; ++s2)
      for (int t = 2; s1 + s2 + t <= Dpages_; ++t)
        for (int i = 0; i < base_->dim(s1); ++i)
          for (const auto& z : page(3, s2, t).z) {
            auto b = base_->basis(s1, i);
            auto bz = base_->mul(b, {s2, z}).coords;
            auto lhs = differential(3, s1 + s2, t, bz);
            auto rhs = scaled(base_->mul(b, {s2 + 3, differential(3, s2, t, z)}).coords, sgn(s1, P), P);
            auto diff = add(lhs, scaled(rhs, -1, P), P);
            if (!is_zero_in(3, s1 + s2 + 3, t - 2, diff)) {
              std::ostringstream os;
              os << "d3 Leibniz fails for base (" << s1 << "," << i << ") at (" << s2 << "," << t << ")";
              return os.str();
            }
          }
  return {};
}

nlohmann::ordered_json CentralSS::to_json() const {
  nlohmann::ordered_json j;
  j["total_degree"] = D_;
  j["page_degree"] = Dpages_;
  j["tau2"] = tau2_.coords;
  j["tau3"] = tau3_.coords;
  for (int r = 2; r <= 4; ++r) {
    auto& pg = j["E" + std::to_string(r)] = nlohmann::ordered_json::array();
    const int top = r == 2 ? D_ : Dpages_;
    for (int n = 0; n <= top; ++n)
      for (int s = 0; s <= n && s <= base_->max_degree(); ++s)
        pg.push_back({{"s", s}, {"t", n - s}, {"fibre", fibre_label(n - s)}, {"dim", dim(r, s, n - s)}});
  }
  auto& inf = j["E_infinity"] = nlohmann::ordered_json::array();
  for (int n = 0; n <= Dpages_; ++n)
    for (int s = 0; s <= n; ++s) {
      auto e = e_infinity(s, n - s);
      inf.push_back({{"s", s}, {"t", n - s}, {"dim", e.dim}, {"certificate", to_string(e.certificate)}, {"reason", e.reason}});
    }
  return j;
}

RingTable bpu_table(int p) {
  RingTable t(p, 6, {1, 0, 1, 1, 1, 0, 1});
  t.labels = {{"1"}, {}, {"u2"}, {"u3"}, {"u2^2"}, {}, {"u2^3"}};
  const std::vector<int> dims{1, 0, 1, 1, 1, 0, 1};
  for (int n = 0; n <= 6; ++n)
    for (int j = 0; j < dims[static_cast<std::size_t>(n)]; ++j) {
      FpVec e(static_cast<std::size_t>(dims[static_cast<std::size_t>(n)]), 0);
      e[static_cast<std::size_t>(j)] = 1;
      t.set_basis_product(0, 0, n, j, e);
      t.set_basis_product(n, j, 0, 0, e);
    }
  t.set_basis_product(2, 0, 2, 0, {1});
  t.set_basis_product(2, 0, 4, 0, {1});
  t.set_basis_product(4, 0, 2, 0, {1});
  // u2 u3 = 0 and u3^2 = 0 are the zero defaults
  for (int n = 0; n <= 5; ++n) {
    FpMatrix q(p, static_cast<std::size_t>(dims[static_cast<std::size_t>(n + 1)]), static_cast<std::size_t>(dims[static_cast<std::size_t>(n)]));
    if (n == 2) q.at(0, 0) = 1;
    t.set_q0(n, std::move(q));
  }
  t.named["u2"] = t.basis(2, 0);
  t.named["u3"] = t.basis(3, 0);
  return t;
}

}  // namespace cohomcheck
