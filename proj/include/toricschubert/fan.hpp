#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include <json.hpp>

#include "toricschubert/lattice.hpp"
#include "toricschubert/weyl.hpp"

namespace toricschubert {

enum class SpaceTag { Flag, Grassmannian };

/// Rays are primitive and pairwise distinct; each maximal cone is an
/// ascending list of ray indices, labeled by its torus-fixed point.
struct Fan {
  std::size_t ambient_dim = 0;
  SpaceTag space = SpaceTag::Flag;
  std::vector<LatticeVector> rays;
  std::vector<std::vector<std::size_t>> max_cones;
  std::vector<Permutation> labels;

  std::vector<LatticeVector> cone_rays(std::size_t cone) const;
  Cone cone(std::size_t index) const { return Cone(cone_rays(index), ambient_dim); }
};

/// Fan of the toric Schubert variety of a distinct-letter word in the full
/// flag variety: rays v_1..v_m then w_1..w_m, one cone per subset J of
/// positions, listed in graded lexicographic order of J.
Fan flag_fan(const ReducedWord& word);

/// One merged cone of the Grassmannian fan and the flag cones it is built from.
struct MergedCone {
  Permutation label;
  std::vector<IndexSet> members;
  Cone merged;
  std::vector<Cone> pieces;
};

/// Groups the flag cones of the canonical toric word of w by parabolic coset.
std::vector<MergedCone> merged_cones(const Permutation& w, int d, int n);

Fan grassmannian_fan(const Permutation& w, int d, int n);

/// Fan of X_{w_d} in Gr(d,2d) assembled directly from its five families of
/// maximal cones. Rays are v_1, v_d, w_1, ..., w_{2d-1} (v_1 = v_d when d = 1).
Fan wd_fan(int d);

/// v_i + w_i = v_{i+1} (i != d-1, 2d-1), v_{d-1} + w_{d-1} = v_{2d-1} and
/// v_{2d-1} + w_{2d-1} = 0 on the flag rays of w_d.
bool verify_ray_relations(int d);

struct CartierData {
  std::vector<RationalVector> per_cone_m;
  bool is_integral = true;
  std::optional<bool> is_fano;
};

struct NotGorenstein {
  enum class Reason { Inconsistent, NonIntegral };
  std::size_t cone = 0;
  Reason reason = Reason::Inconsistent;
  /// The rational solution when one exists.
  std::optional<RationalVector> m;
};

using CartierOutcome = std::variant<CartierData, NotGorenstein>;

/// Solves <m_sigma, u_rho> = -1 over the rays of each maximal cone.
CartierOutcome anticanonical_cartier(const Fan& f);

struct FanoViolation {
  std::size_t cone;
  std::size_t ray;
  Rational value;
};

/// First (cone, ray) pair with rho outside sigma and <m_sigma, u_rho> <= -1.
std::optional<FanoViolation> fano_violation(const Fan& f, const CartierData& c);
bool is_fano(const Fan& f, const CartierData& c);

/// Deterministic: the same seed always draws the same points.
bool is_complete_sampled(const Fan& f, std::size_t samples, std::uint64_t seed);

/// Returns l when the fan is the fan of P^l.
std::optional<int> is_projective_space_fan(const Fan& f);

/// Checks that the pieces cover `merged`: containment both ways plus equal
/// volume of the slices cut by a linear form positive on `merged`, the
/// merged volume coming from a pulling triangulation driven by its facets.
bool cone_union_equals(const Cone& merged, const std::vector<Cone>& pieces);

/// Same ambient dimension, same ray set and, label by label, the same cone
/// as a set of ray vectors. Ray and cone order are ignored.
bool same_labeled_fan(const Fan& a, const Fan& b);

nlohmann::ordered_json to_json(const Fan& f);
nlohmann::ordered_json to_json(const CartierOutcome& outcome, bool fano);

}  // namespace toricschubert
