#include "toricschubert/classify.hpp"

#include <algorithm>

#include "toricschubert/errors.hpp"

namespace toricschubert {

namespace {

void require_grassmannian(const Permutation& w, int d, int n) {
  if (w.size() != n) {
    throw Error(ErrorCode::InvalidParam, w.to_string() + " is not a permutation of S_" + std::to_string(n));
  }
  if (!is_grassmannian(w, d)) {
    throw Error(ErrorCode::NotGrassmannian, w.to_string() + " has a descent outside position " + std::to_string(d));
  }
}

std::vector<int> descending(int hi, int lo) {
  std::vector<int> out;
  for (int i = hi; i >= lo; --i) out.push_back(i);
  return out;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool matches_word_form(const Permutation& w, int d, int n) {
  if (w.is_identity()) return true;
  for (int x = 1; x <= n - d; ++x) {
    for (int y = 0; y <= d - 1; ++y) {
      if (toric_word(x, y, d, n).permutation() == w) return true;
    }
  }
  return false;
}

// One-line patterns: 1..p, p+2..d, f | p+1, d+1..f-1, f+1..n with
// 0 <= p < d-1, and 1..d-1, f | d..f-1, f+1..n.
bool matches_one_line_form(const Permutation& w, int d, int n) {
  if (w.is_identity()) return true;
  for (int f = d + 1; f <= n; ++f) {
    for (int p = 0; p < d - 1; ++p) {
      std::vector<int> line = concat(interval(1, p), interval(p + 2, d));
      line.push_back(f);
      line.push_back(p + 1);
      line = concat(concat(line, interval(d + 1, f - 1)), interval(f + 1, n));
      if (line == w.one_line()) return true;
    }
    std::vector<int> line = interval(1, d - 1);
    line.push_back(f);
    line = concat(concat(line, interval(d, f - 1)), interval(f + 1, n));
    if (line == w.one_line()) return true;
  }
  return false;
}

[[noreturn]] void classifier_bug(const std::string& what, const Permutation& w, int d) {
  throw Error(ErrorCode::ClassifierBug, what + " disagree on " + w.to_string() + " at d=" + std::to_string(d));
}

}  // namespace

ReducedWord toric_word(int x, int y, int d, int n) {
  if (d < 1 || d > n - 1 || x < 1 || x > n - d || y < 0 || y > d - 1) {
    throw Error(ErrorCode::InvalidHookParams, "hook (" + std::to_string(x) + ",1^" + std::to_string(y) +
                                                  ") does not fit in Gr(" + std::to_string(d) + "," +
                                                  std::to_string(n) + ")");
  }
  return ReducedWord(concat(descending(d + x - 1, d + 1), interval(d - y, d)), n);
}

ReducedWord wd_word(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidParam, "w_d needs d >= 1");
  return ReducedWord(concat(descending(2 * d - 1, d + 1), interval(1, d)), 2 * d);
}

ReducedWord wd_fixed_point_word(int d, int a, int b) {
  if (d < 1 || a < 0 || a > d - 1 || b < 0 || b > d) {
    throw Error(ErrorCode::InvalidHookParams, "fixed point parameters out of range");
  }
  if (b == d) return ReducedWord({}, 2 * d);
  return ReducedWord(concat(descending(2 * d - a - 1, d + 1), interval(b + 1, d)), 2 * d);
}

ReducedWord toric_word_of(const Permutation& w, int d) {
  const int n = w.size();
  if (!is_toric(w, d, n)) throw Error(ErrorCode::NotToric, w.to_string() + " is not toric at d=" + std::to_string(d));
  if (w.is_identity()) return ReducedWord({}, n);
  const Hook hook = *is_hook(lambda_of(w, d));
  return toric_word(hook.x, hook.y, d, n);
}

bool is_toric(const Permutation& w, int d, int n) {
  require_grassmannian(w, d, n);
  const Partition lambda = lambda_of(w, d);
  const bool by_partition = lambda.empty() || is_hook(lambda).has_value();
  const bool by_word = matches_word_form(w, d, n);
  const bool by_one_line = matches_one_line_form(w, d, n);
  if (by_partition != by_word || by_partition != by_one_line) classifier_bug("toric criteria", w, d);
  return by_partition;
}

bool is_smooth(const Permutation& w, int d, int n) {
  require_grassmannian(w, d, n);
  const bool smooth = is_single_rectangle(lambda_of(w, d));
  if (is_toric(w, d, n)) {
    bool word_form = w.is_identity();
    for (int x = 2; x <= n - d && !word_form; ++x) {
      word_form = perm_from_word(descending(d + x - 1, d), n) == w;
    }
    for (int y = 0; y <= d - 1 && !word_form; ++y) {
      word_form = perm_from_word(interval(d - y, d), n) == w;
    }
    if (word_form != smooth) classifier_bug("smoothness criteria", w, d);
  }
  return smooth;
}

bool is_gorenstein(const Permutation& w, int d, int n) {
  require_grassmannian(w, d, n);
  const bool gorenstein = corners_same_antidiagonal(lambda_of(w, d), d, n);
  if (is_toric(w, d, n)) {
    bool word_form = is_smooth(w, d, n);
    for (int k = 1; k <= std::min(d, n - d) && !word_form; ++k) {
      word_form = perm_from_word(concat(descending(d + k - 1, d + 1), interval(d - k + 1, d)), n) == w;
    }
    if (word_form != gorenstein) classifier_bug("Gorenstein criteria", w, d);
  }
  return gorenstein;
}

Partition iso_canonical(const Partition& lambda) { return std::min(lambda, transpose(lambda)); }

ClassificationReport classify_report(const Permutation& w, int d, int n) {
  require_grassmannian(w, d, n);
  ClassificationReport report;
  report.w = w;
  report.d = d;
  report.n = n;
  report.lambda = lambda_of(w, d);
  report.is_toric = is_toric(w, d, n);
  report.is_smooth = is_smooth(w, d, n);
  report.is_gorenstein = is_gorenstein(w, d, n);
  report.hook = is_hook(report.lambda);
  report.dimension = length(w);
  report.iso_canonical = iso_canonical(report.lambda);
  return report;
}

nlohmann::ordered_json to_json(const ClassificationReport& report) {
  nlohmann::ordered_json j;
  j["perm"] = report.w.to_string();
  j["d"] = report.d;
  j["n"] = report.n;
  j["lambda"] = report.lambda.to_string();
  j["toric"] = report.is_toric;
  j["smooth"] = report.is_smooth;
  j["gorenstein"] = report.is_gorenstein;
  j["hook_x"] = report.hook ? nlohmann::ordered_json(report.hook->x) : nlohmann::ordered_json(nullptr);
  j["hook_y"] = report.hook ? nlohmann::ordered_json(report.hook->y) : nlohmann::ordered_json(nullptr);
  j["dim"] = report.dimension;
  j["iso_canonical"] = report.iso_canonical.to_string();
  return j;
}

}  // namespace toricschubert
