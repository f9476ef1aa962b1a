#include "toricschubert/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "toricschubert/classify.hpp"
#include "toricschubert/errors.hpp"
#include "toricschubert/fan.hpp"
#include "toricschubert/partition.hpp"

namespace toricschubert {

ReducedWord reduced_word_of(const Permutation& w) {
  std::vector<int> letters;
  Permutation x = w;
  const int n = w.size();
  while (!x.is_identity()) {
    for (int i = 1; i < n; ++i) {
      if (x(i) > x(i + 1)) {
        letters.push_back(i);
        x = x.times_simple(i);
        break;
      }
    }
  }
  std::reverse(letters.begin(), letters.end());
  return ReducedWord(letters, n);
}

std::set<Permutation> lower_interval_by_subwords(const Permutation& w) {
  const ReducedWord word = reduced_word_of(w);
  std::set<Permutation> reached{Permutation::identity(w.size())};
  for (int letter : word.letters()) {
    std::vector<Permutation> grown;
    for (const auto& x : reached) grown.push_back(x.times_simple(letter));
    reached.insert(grown.begin(), grown.end());
  }
  return reached;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> line(static_cast<std::size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(line);
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::vector<Permutation> grassmannian_permutations(int d, int n) {
  std::vector<Permutation> out;
  for (const auto& lambda : partitions_in_box(d, n - d)) out.push_back(perm_of(lambda, d, n));
  return out;
}

OracleReport check_bruhat_subwords(int n) {
  OracleReport report;
  const auto perms = all_permutations(n);
  for (const auto& w : perms) {
    const auto below = lower_interval_by_subwords(w);
    for (const auto& u : perms) {
      ++report.comparisons;
      if (bruhat_leq(u, w) != below.contains(u)) {
        report.counterexample = "u=" + u.to_string() + " w=" + w.to_string();
        return report;
      }
    }
  }
  return report;
}

OracleReport check_bruhat_partitions(int n) {
  OracleReport report;
  for (int d = 1; d < n; ++d) {
    const auto perms = grassmannian_permutations(d, n);
    for (const auto& w : perms) {
      for (const auto& u : perms) {
        ++report.comparisons;
        if (bruhat_leq(u, w) != leq(lambda_of(u, d), lambda_of(w, d))) {
          report.counterexample = "d=" + std::to_string(d) + " u=" + u.to_string() + " w=" + w.to_string();
          return report;
        }
      }
    }
  }
  return report;
}

OracleReport check_lifts(int d) {
  OracleReport report;
  const auto classes = coset_classes(wd_word(d), d);
  report.classes = classes.size();
  for (const auto& cls : classes) {
    report.size_sum += cls.members.size();
    std::optional<std::pair<int, int>> params;
    for (int a = 0; a <= d - 1 && !params; ++a) {
      for (int b = 0; b <= d && !params; ++b) {
        if (wd_fixed_point_word(d, a, b).permutation() == cls.representative) params = {a, b};
      }
    }
    ++report.comparisons;
    if (!params) {
      report.counterexample = "class of " + cls.representative.to_string() + " has no closed form";
      return report;
    }
    const auto closed = lifts_of_v_closed_form(d, params->first, params->second);
    const std::set<IndexSet> lhs(cls.members.begin(), cls.members.end());
    const std::set<IndexSet> rhs(closed.begin(), closed.end());
    if (lhs != rhs) {
      report.counterexample = "class of " + cls.representative.to_string() + ": " +
                              std::to_string(lhs.size()) + " subwords vs " + std::to_string(rhs.size()) +
                              " from the closed form";
      return report;
    }
  }
  const std::size_t expected = std::size_t{1} << (2 * d - 1);
  if (report.size_sum != expected) {
    report.counterexample = "class sizes sum to " + std::to_string(report.size_sum) + ", expected " +
                            std::to_string(expected);
  }
  return report;
}

OracleReport check_cones(int d) {
  OracleReport report;
  const int n = 2 * d;
  const Permutation wd = wd_word(d).permutation();
  const auto merged = merged_cones(wd, d, n);
  report.classes = merged.size();

  std::size_t below = 0;
  for (const auto& v : grassmannian_permutations(d, n)) below += bruhat_leq(v, wd) ? 1 : 0;
  if (below != merged.size()) {
    report.counterexample = std::to_string(merged.size()) + " merged cones but " + std::to_string(below) +
                            " Grassmannian permutations below w_d";
    return report;
  }

  for (const auto& mc : merged) {
    report.size_sum += mc.pieces.size();
    if (mc.label.is_identity()) report.identity_pieces = mc.pieces.size();
    ++report.comparisons;
    if (!cone_union_equals(mc.merged, mc.pieces)) {
      report.counterexample = "C_" + mc.label.to_string() + " is not the union of its " +
                              std::to_string(mc.pieces.size()) + " flag cones";
      return report;
    }
  }
  return report;
}

}  // namespace toricschubert
