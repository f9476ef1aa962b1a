#pragma once

// Brute-force cross-checks. Each one recomputes a fact by the slowest
// obvious route and compares it against the library's fast path.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toricschubert/weyl.hpp"

namespace toricschubert {

/// Some reduced word of w, found by peeling off right descents.
ReducedWord reduced_word_of(const Permutation& w);

/// {u : u <= w} as the set of all subword products of a reduced word of w.
std::set<Permutation> lower_interval_by_subwords(const Permutation& w);

/// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

/// Grassmannian permutations with descent at d, in lexicographic order of
/// their partitions.
std::vector<Permutation> grassmannian_permutations(int d, int n);

struct OracleReport {
  std::size_t comparisons = 0;
  std::size_t classes = 0;
  std::size_t size_sum = 0;
  /// Unimodular flag cones tiling the merged cone of the identity.
  std::size_t identity_pieces = 0;
  std::optional<std::string> counterexample;

  bool ok() const { return !counterexample.has_value(); }
};

/// bruhat_leq against the subword oracle on every pair in S_n.
OracleReport check_bruhat_subwords(int n);

/// bruhat_leq against componentwise partition order on Grassmannian pairs.
OracleReport check_bruhat_partitions(int n);

/// coset_classes over w_d against lifts_of_v_closed_form, class by class.
OracleReport check_lifts(int d);

/// cone_union_equals on every merged cone of w_d, plus the class count
/// against the Grassmannian lower interval of w_d.
OracleReport check_cones(int d);

}  // namespace toricschubert
