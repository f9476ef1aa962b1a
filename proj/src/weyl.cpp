#include "toricschubert/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "toricschubert/errors.hpp"

namespace toricschubert {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int value : one_line_) {
    if (value < 1 || value > n || seen[static_cast<std::size_t>(value)]) {
      throw Error(ErrorCode::InvalidPermutation,
                  "one-line notation is not a bijection on {1.." + std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(value)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidParam, "negative rank");
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values));
}

Permutation Permutation::parse(std::string_view text) {
  if (text.find(',') != std::string_view::npos) {
    return Permutation(parse_int_list(text));
  }
  std::vector<int> values;
  for (char c : text) {
    if (c < '1' || c > '9') {
      throw Error(ErrorCode::ParseError, "bad permutation digit in '" + std::string(text) + "'");
    }
    values.push_back(c - '0');
  }
  return Permutation(std::move(values));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    if (one_line_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.size() != size()) throw Error(ErrorCode::DimensionMismatch, "composing permutations of different rank");
  std::vector<int> values(one_line_.size());
  for (int i = 1; i <= size(); ++i) values[static_cast<std::size_t>(i - 1)] = (*this)(rhs(i));
  Permutation out;
  out.one_line_ = std::move(values);
  return out;
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1 || i >= size()) {
    throw Error(ErrorCode::InvalidLetter, "s_" + std::to_string(i) + " is not a simple reflection of S_" +
                                              std::to_string(size()));
  }
  Permutation out = *this;
  std::swap(out.one_line_[static_cast<std::size_t>(i - 1)], out.one_line_[static_cast<std::size_t>(i)]);
  return out;
}

std::string Permutation::to_string() const {
  if (size() <= 9) {
    std::string out;
    for (int v : one_line_) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  return format_int_list(one_line_);
}

Permutation perm_from_word(std::span<const int> letters, int n) {
  Permutation w = Permutation::identity(n);
  for (int letter : letters) w = w.times_simple(letter);
  return w;
}

int length(const Permutation& w) {
  const auto& a = w.one_line();
  int inversions = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] > a[j]) ++inversions;
    }
  }
  return inversions;
}

bool is_reduced(std::span<const int> letters, int n) {
  return length(perm_from_word(letters, n)) == static_cast<int>(letters.size());
}

ReducedWord::ReducedWord(std::vector<int> letters, int n) : letters_(std::move(letters)), n_(n) {
  if (!is_reduced(letters_, n_)) {
    throw Error(ErrorCode::NotReduced, "word " + format_int_list(letters_) + " is not reduced");
  }
}

ReducedWord ReducedWord::parse(std::string_view text, int n) { return ReducedWord(parse_int_list(text), n); }

bool ReducedWord::has_distinct_letters() const {
  std::vector<int> sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::string ReducedWord::to_string() const { return format_int_list(letters_); }

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  if (text.empty()) return values;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(',', start);
    std::string_view token = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::ParseError, "cannot parse integer list '" + std::string(text) + "'");
    }
    values.push_back(value);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return values;
}

std::string format_int_list(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

bool is_grassmannian(const Permutation& w, int d) {
  const int n = w.size();
  if (d < 1 || d > n - 1) {
    throw Error(ErrorCode::InvalidDescent, "descent position " + std::to_string(d) + " outside [1," +
                                               std::to_string(n - 1) + "]");
  }
  for (int i = 1; i < n; ++i) {
    if (i != d && w(i) > w(i + 1)) return false;
  }
  return true;
}

Permutation min_coset_rep(const Permutation& u, int d) {
  const int n = u.size();
  if (d < 1 || d > n - 1) throw Error(ErrorCode::InvalidDescent, "descent position out of range");
  std::vector<int> values = u.one_line();
  std::sort(values.begin(), values.begin() + d);
  std::sort(values.begin() + d, values.end());
  return Permutation(std::move(values));
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw Error(ErrorCode::DimensionMismatch, "Bruhat comparison across ranks");
  const int n = u.size();
  std::vector<int> pu;
  std::vector<int> pw;
  pu.reserve(static_cast<std::size_t>(n));
  pw.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k < n; ++k) {
    pu.insert(std::upper_bound(pu.begin(), pu.end(), u(k)), u(k));
    pw.insert(std::upper_bound(pw.begin(), pw.end(), w(k)), w(k));
    for (std::size_t i = 0; i < pu.size(); ++i) {
      if (pu[i] > pw[i]) return false;
    }
  }
  return true;
}

std::vector<IndexSet> subsets_graded_lex(std::span<const int> ground) {
  std::vector<int> sorted(ground.begin(), ground.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();
  std::vector<IndexSet> out;
  out.reserve(std::size_t{1} << m);
  for (std::size_t k = 0; k <= m; ++k) {
    // mask with k leading ones; prev_permutation walks combinations lexicographically
    std::vector<bool> mask(m, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      IndexSet subset;
      subset.reserve(k);
      for (std::size_t i = 0; i < m; ++i) {
        if (mask[i]) subset.push_back(sorted[i]);
      }
      out.push_back(std::move(subset));
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return out;
}

std::vector<IndexSet> subsets_graded_lex(int m) { return subsets_graded_lex(interval(1, m)); }

std::vector<int> interval(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

Permutation subword_perm(const ReducedWord& word, const IndexSet& indices) {
  Permutation w = Permutation::identity(word.rank());
  for (int j : indices) w = w.times_simple(word[static_cast<std::size_t>(j - 1)]);
  return w;
}

std::vector<Subword> subwords(const ReducedWord& word) {
  std::vector<Subword> out;
  for (auto& subset : subsets_graded_lex(static_cast<int>(word.size()))) {
    Permutation perm = subword_perm(word, subset);
    out.push_back({std::move(subset), std::move(perm)});
  }
  return out;
}

std::vector<CosetClass> coset_classes(const ReducedWord& word, int d) {
  if (!word.has_distinct_letters()) {
    throw Error(ErrorCode::NotDistinctWord, "word " + word.to_string() + " repeats a letter");
  }
  std::vector<CosetClass> classes;
  std::map<Permutation, std::size_t> slot;
  for (auto& sub : subwords(word)) {
    Permutation rep = min_coset_rep(sub.perm, d);
    auto [it, inserted] = slot.try_emplace(rep, classes.size());
    if (inserted) classes.push_back({rep, {}});
    classes[it->second].members.push_back(std::move(sub.indices));
  }
  return classes;
}

std::vector<IndexSet> lifts_of_v_closed_form(int d, int a, int b) {
  if (d < 1 || a < 0 || a > d - 1 || b < 0 || b > d) {
    throw Error(ErrorCode::InvalidHookParams, "lift parameters (d=" + std::to_string(d) + ", a=" +
                                                  std::to_string(a) + ", b=" + std::to_string(b) + ")");
  }
  if (b == d) return subsets_graded_lex(2 * d - 2);

  std::vector<int> free = interval(1, a - 1);
  for (int i : interval(d, d + b - 2)) free.push_back(i);
  std::vector<int> fixed = interval(a + 1, d - 1);
  for (int i : interval(d + b, 2 * d - 1)) fixed.push_back(i);

  std::vector<IndexSet> out;
  for (const auto& chosen : subsets_graded_lex(free)) {
    IndexSet subset = chosen;
    subset.insert(subset.end(), fixed.begin(), fixed.end());
    std::sort(subset.begin(), subset.end());
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& x, const IndexSet& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

}  // namespace toricschubert
