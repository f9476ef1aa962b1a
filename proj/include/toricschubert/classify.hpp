#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "toricschubert/partition.hpp"
#include "toricschubert/weyl.hpp"

namespace toricschubert {

struct ClassificationReport {
  Permutation w;
  int d = 0;
  int n = 0;
  Partition lambda;
  bool is_toric = false;
  bool is_smooth = false;
  bool is_gorenstein = false;
  std::optional<Hook> hook;
  int dimension = 0;
  Partition iso_canonical;
};

/// Evaluates the hook-partition, reduced-word and one-line-pattern criteria
/// and throws ClassifierBug if they ever disagree.
bool is_toric(const Permutation& w, int d, int n);

/// s_{d+x-1} ... s_{d+1} s_{d-y} s_{d-y+1} ... s_d in S_n.
ReducedWord toric_word(int x, int y, int d, int n);

/// s_{2d-1} ... s_{d+1} s_1 ... s_d in S_{2d}.
ReducedWord wd_word(int d);

/// s_{2d-a-1} ... s_{d+1} s_{b+1} ... s_d, the Grassmannian permutations below
/// w_d; b = d gives the identity.
ReducedWord wd_fixed_point_word(int d, int a, int b);

/// Canonical toric word of a toric Grassmannian permutation (empty for e).
ReducedWord toric_word_of(const Permutation& w, int d);

bool is_smooth(const Permutation& w, int d, int n);
bool is_gorenstein(const Permutation& w, int d, int n);

/// The lexicographically smaller of lambda and its transpose.
Partition iso_canonical(const Partition& lambda);

ClassificationReport classify_report(const Permutation& w, int d, int n);

/// Flat object: perm, d, n, lambda, toric, smooth, gorenstein, hook_x,
/// hook_y, dim, iso_canonical.
nlohmann::ordered_json to_json(const ClassificationReport& report);

}  // namespace toricschubert
