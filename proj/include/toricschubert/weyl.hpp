#pragma once

// Type-A Weyl group combinatorics: permutations in one-line notation, words in
// the simple transpositions s_1..s_{n-1}, Bruhat order and parabolic cosets
// for the maximal parabolic subgroup fixing the block split {1..d}|{d+1..n}.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toricschubert {

/// A permutation of {1,...,n}; position i holds w(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  /// Compact digits for n <= 9 ("2413"), comma separated otherwise.
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(one_line_.size()); }
  /// 1-based evaluation w(i).
  int operator()(int i) const { return one_line_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const noexcept { return one_line_; }
  bool is_identity() const noexcept;

  /// Function composition: (a * b)(i) = a(b(i)).
  Permutation operator*(const Permutation& rhs) const;

  /// Right multiplication by s_i, i.e. swapping positions i and i+1.
  Permutation times_simple(int i) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

/// Letters i denote s_i; the product s_{i_1} ... s_{i_m} is composed with the
/// rightmost factor applied first, so [1,2] in S_4 is 2314.
Permutation perm_from_word(std::span<const int> letters, int n);

/// Inversion count.
int length(const Permutation& w);

bool is_reduced(std::span<const int> letters, int n);

/// A word whose length equals the length of its product.
class ReducedWord {
 public:
  ReducedWord(std::vector<int> letters, int n);

  /// Comma-separated letters ("1,3,2"); the empty string is the empty word.
  static ReducedWord parse(std::string_view text, int n);

  std::span<const int> letters() const noexcept { return letters_; }
  int rank() const noexcept { return n_; }
  std::size_t size() const noexcept { return letters_.size(); }
  int operator[](std::size_t k) const { return letters_[k]; }

  bool has_distinct_letters() const;
  Permutation permutation() const { return perm_from_word(letters_, n_); }
  std::string to_string() const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  std::vector<int> letters_;
  int n_;
};

std::vector<int> parse_int_list(std::string_view text);
std::string format_int_list(std::span<const int> values);

bool is_grassmannian(const Permutation& w, int d);

/// Minimal representative of u W_P: each block of positions sorted ascending.
Permutation min_coset_rep(const Permutation& u, int d);

/// Bruhat order via the sorted-prefix (tableau) criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// 1-based, strictly increasing positions into a word.
using IndexSet = std::vector<int>;

/// All subsets of `ground`, ordered by size and then lexicographically,
/// matching the order in which cone tables are usually listed.
std::vector<IndexSet> subsets_graded_lex(std::span<const int> ground);
std::vector<IndexSet> subsets_graded_lex(int m);

std::vector<int> interval(int lo, int hi);

struct Subword {
  IndexSet indices;
  Permutation perm;
};

/// Subword permutation w(J) for the positions in J.
Permutation subword_perm(const ReducedWord& word, const IndexSet& indices);

/// All 2^m subwords in graded lexicographic order of their index sets.
std::vector<Subword> subwords(const ReducedWord& word);

struct CosetClass {
  Permutation representative;
  std::vector<IndexSet> members;
};

/// Groups the subwords of a distinct-letter word by min_coset_rep of their
/// product. Classes appear in order of their first member.
std::vector<CosetClass> coset_classes(const ReducedWord& word, int d);

/// Closed form of the lift class [v] for v <= w_d.  With 0 <= a <= d-1 and
/// 0 <= b <= d-1 the fixed point is s_{2d-a-1}..s_{d+1} s_{b+1}..s_d; b = d
/// encodes v = e. Subsets index the word s_{2d-1}..s_{d+1} s_1..s_d.
std::vector<IndexSet> lifts_of_v_closed_form(int d, int a, int b);

}  // namespace toricschubert
