// Cohomology models assembled from the atlas at p = 3 and beyond: piH2 with
// its named classes, the BH base A2 x piH2 with the transgressions of
// H -> pi(H), and H with its restrictions to A3 and A3'.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cohomcheck/atlas.hpp"
#include "cohomcheck/cohomology.hpp"
#include "cohomcheck/elemab.hpp"
#include "cohomcheck/ring_table.hpp"
#include "cohomcheck/spectral.hpp"

namespace cohomcheck {

/// H*(piH2) through degree D with v1, w1 (dual to sigma1, beta on the two
/// cyclic subgroups), i*u2 = u2_scale times the class of H2 -> piH2, scaled
/// so that it restricts to x1 y1 on A2, and i*u3 = Q0 i*u2.
struct PiH2Model {
  PiH2Model(const Atlas& at, int D = 6);
  PiH2Model(const PiH2Model&) = delete;

  std::unique_ptr<MinimalResolution> res;
  std::unique_ptr<CohomologyRing> ring;
  RingTable table;  // named "v1", "w1", "i*u2", "i*u3"
  CohomologyClass v1, w1, iu2, iu3;
  CohomologyClass raw_u2;
  int u2_scale = 0;

  struct Facts {
    bool u2v1_nonzero = false;
    bool u2_squared_nonzero = false;
    bool u2w1_zero = false;
    bool q0_w1u2_zero = false;
    bool restrictions_ok = false;  // v1, w1 restrict to the stated duals
    bool all() const { return u2v1_nonzero && u2_squared_nonzero && u2w1_zero && q0_w1u2_zero && restrictions_ok; }
  };
  Facts facts(const Atlas& at) const;
};

/// H*(A2) (x) H*(piH2) through degree 6 with x, y dual to alpha, beta.
struct BHBase {
  explicit BHBase(const Atlas& at, int D = 6);
  BHBase(const BHBase&) = delete;

  std::unique_ptr<MinimalResolution> a2_res;
  std::unique_ptr<CohomologyRing> a2_ring;
  std::unique_ptr<ElemabMatch> a2_match;
  RingTable a2_table;
  std::unique_ptr<PiH2Model> pih2;
  RingTable base;
  CohomologyClass x1, y1, x2, y2, v1, w1, iu2, iu3;
  /// x1 y1 - i*u2 and x2 y1 - x1 y2 - i*u3.
  CohomologyClass tau2, tau3;

  /// Product of base classes named by a word such as "w1*x1".
  CohomologyClass word(const std::string& w) const;
};

/// Compares tau2 with the class of H -> pi(H) pulled back to pi(H) along the
/// two factor projections. Returns c with ext = c * tau2, or nothing.
struct ExtensionCheck {
  std::optional<int> scalar;
  bool kunneth_ok = false;  // the factor pullbacks span H^1, H^2 of pi(H)
};
ExtensionCheck check_bh_extension(const Atlas& at, const BHBase& b);

/// The facts of the BH-case spectral sequence in total degree <= 4.
struct BHFacts {
  std::vector<std::pair<std::string, bool>> items;
  bool all() const;
  nlohmann::ordered_json to_json() const;
};
BHFacts bh_spectral_facts(const BHBase& b, const CentralSS& ss);

/// H*(H) through degree D (at most 4 in practice) with the restrictions g*
/// and g'* and the symbolic identifications of A3, A3' by (x, y, z).
struct HModel {
  explicit HModel(const Atlas& at, int D = 4);
  HModel(const HModel&) = delete;

  std::unique_ptr<MinimalResolution> res, a3_res, a3p_res;
  std::unique_ptr<CohomologyRing> ring, a3_ring, a3p_ring;
  std::unique_ptr<ElemabMatch> a3_match, a3p_match;
  std::unique_ptr<SubgroupRestriction> g, gp;
  double seconds_resolution = 0, seconds_rest = 0;
};

struct BocksteinImageReport {
  int h3_dim = 0, h4_dim = 0, image_dim = 0;
  std::vector<std::pair<int, int>> pairs;  // (via g mod M, via g' mod M') per image basis vector
  bool all_equal = false;
  std::pair<int, int> surrogate{0, 0};
  bool surrogate_excluded = false;
  bool zero_pair_equal = false;
  nlohmann::ordered_json to_json() const;
};
BocksteinImageReport bockstein_image_check(const HModel& h);

/// Coefficient of x1 y1 z2 after reduction modulo M, in a model with letters x, y, z.
int x1y1z2_coefficient(const SymbolicClass& u);

}  // namespace cohomcheck
