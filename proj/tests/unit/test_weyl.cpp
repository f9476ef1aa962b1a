#include <doctest.h>

#include "check_error.hpp"
#include "test_oracles.hpp"
#include "toricschubert/classify.hpp"
#include "toricschubert/weyl.hpp"

using namespace toricschubert;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<int> letters_of(const ReducedWord& w) { return {w.letters().begin(), w.letters().end()}; }

}  // namespace

TEST_SUITE("weyl") {
  TEST_CASE("permutation parsing and validation") {
    CHECK(P("2413").one_line() == std::vector<int>{2, 4, 1, 3});
    CHECK(P("2,4,1,3") == P("2413"));
    const Permutation big = Permutation::parse("1,2,3,4,5,6,7,8,10,9");
    CHECK(big.size() == 10);
    CHECK(big.to_string() == "1,2,3,4,5,6,7,8,10,9");
    CHECK_ERROR_CODE(P("1224"), ErrorCode::InvalidPermutation);
    CHECK_ERROR_CODE(P("1250"), ErrorCode::ParseError);
    CHECK_ERROR_CODE(P("12a"), ErrorCode::ParseError);
    CHECK_ERROR_CODE(Permutation(std::vector<int>{0, 1}), ErrorCode::InvalidPermutation);
  }

  TEST_CASE("words compose with the rightmost letter first") {
    CHECK(perm_from_word(std::vector<int>{1, 2}, 4) == P("2314"));
    CHECK(perm_from_word(std::vector<int>{1, 3, 2}, 4) == P("2413"));
    CHECK(perm_from_word(std::vector<int>{}, 5) == P("12345"));
    CHECK_ERROR_CODE(perm_from_word(std::vector<int>{0}, 4), ErrorCode::InvalidLetter);
    CHECK_ERROR_CODE(perm_from_word(std::vector<int>{4}, 4), ErrorCode::InvalidLetter);

    // Against value-swapping composition on every word of length <= 5 in S_5.
    std::vector<std::vector<int>> frontier{{}};
    for (int len = 0; len <= 5; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& word : frontier) {
        CHECK(perm_from_word(word, 5).one_line() == oracle::compose(word, 5));
        for (int i = 1; i <= 4; ++i) {
          auto grown = word;
          grown.push_back(i);
          next.push_back(grown);
        }
      }
      frontier = std::move(next);
    }
  }

  TEST_CASE("length is the inversion count") {
    CHECK(length(P("2413")) == 3);
    CHECK(length(Permutation::identity(6)) == 0);
    CHECK(length(P("34125")) == oracle::inversions({3, 4, 1, 2, 5}));
    CHECK(length(P("34125")) == 4);
    for (const auto& line : oracle::all_lines(6)) {
      CHECK(length(Permutation(line)) == oracle::inversions(line));
    }
  }

  TEST_CASE("reducedness") {
    CHECK(is_reduced(std::vector<int>{1, 3, 2}, 4));
    CHECK_FALSE(is_reduced(std::vector<int>{1, 1}, 4));
    CHECK_FALSE(is_reduced(std::vector<int>{2, 1, 2, 1}, 4));
    CHECK(oracle::inversions(oracle::compose({2, 1, 2, 1}, 4)) == 2);
    CHECK_ERROR_CODE(ReducedWord({1, 1}, 3), ErrorCode::NotReduced);
    CHECK(ReducedWord::parse("1,3,2", 4).permutation() == P("2413"));
    CHECK(ReducedWord::parse("", 4).size() == 0);
  }

  TEST_CASE("Grassmannian permutations") {
    CHECK(is_grassmannian(P("2413"), 2));
    CHECK_FALSE(is_grassmannian(P("2143"), 2));
    for (int d = 1; d <= 5; ++d) CHECK(is_grassmannian(Permutation::identity(6), d));
    CHECK_ERROR_CODE(is_grassmannian(P("2413"), 0), ErrorCode::InvalidDescent);
    CHECK_ERROR_CODE(is_grassmannian(P("2413"), 4), ErrorCode::InvalidDescent);
  }

  TEST_CASE("minimal coset representatives") {
    CHECK(min_coset_rep(P("2431"), 2) == P("2413"));
    CHECK(min_coset_rep(P("2413"), 2) == P("2413"));
    CHECK(min_coset_rep(P("4321"), 2) == P("3412"));
    for (const auto& line : oracle::all_lines(5)) {
      for (int d = 1; d <= 4; ++d) {
        const Permutation r = min_coset_rep(Permutation(line), d);
        CHECK(r.one_line() == oracle::sort_blocks(line, d));
        CHECK(min_coset_rep(r, d) == r);
        CHECK(is_grassmannian(r, d));
      }
    }
  }

  TEST_CASE("projection to cosets stays below w_d") {
    for (int d = 1; d <= 3; ++d) {
      const Permutation wd = wd_word(d).permutation();
      for (const auto& line : oracle::all_lines(2 * d)) {
        const Permutation u(line);
        if (bruhat_leq(u, wd)) CHECK(bruhat_leq(min_coset_rep(u, d), wd));
      }
    }
  }

  TEST_CASE("Bruhat order") {
    CHECK(bruhat_leq(P("1324"), P("2413")));
    CHECK(bruhat_leq(Permutation::identity(4), P("3412")));
    CHECK_FALSE(bruhat_leq(P("1423"), P("2314")));
    CHECK_ERROR_CODE(bruhat_leq(P("123"), P("1234")), ErrorCode::DimensionMismatch);

    const auto lines = oracle::all_lines(5);
    for (const auto& w : lines) {
      const auto lower = oracle::below(w);
      for (const auto& u : lines) CHECK(bruhat_leq(Permutation(u), Permutation(w)) == lower.contains(u));
    }
  }

  TEST_CASE("subwords") {
    const auto s = subwords(ReducedWord({1, 2}, 4));
    REQUIRE(s.size() == 4);
    CHECK(s[0].indices == IndexSet{});
    CHECK(s[0].perm == P("1234"));
    CHECK(s[1].indices == IndexSet{1});
    CHECK(s[1].perm == P("2134"));
    CHECK(s[2].indices == IndexSet{2});
    CHECK(s[2].perm == P("1324"));
    CHECK(s[3].indices == IndexSet{1, 2});
    CHECK(s[3].perm == P("2314"));

    const auto empty = subwords(ReducedWord({}, 3));
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].perm.is_identity());

    CHECK(subwords(ReducedWord({5, 4, 1, 2, 3}, 6)).size() == 32);
  }

  TEST_CASE("distinct-letter words have 2^m distinct subword products") {
    const auto distinct = [](const ReducedWord& word) {
      std::set<Permutation> seen;
      for (const auto& s : subwords(word)) seen.insert(s.perm);
      return seen.size() == (std::size_t{1} << word.size());
    };
    for (int n = 2; n <= 9; ++n) {
      for (int d = 1; d < n; ++d) {
        for (int x = 1; x <= n - d; ++x) {
          for (int y = 0; y <= d - 1; ++y) CHECK(distinct(toric_word(x, y, d, n)));
        }
      }
    }
    const ReducedWord longest = toric_word(7, 5, 6, 13);
    REQUIRE(longest.size() == 12);
    CHECK(distinct(longest));
  }

  TEST_CASE("graded lexicographic subset order") {
    const auto subsets = subsets_graded_lex(3);
    const std::vector<IndexSet> expected = {{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    CHECK(subsets == expected);
    CHECK(subsets_graded_lex(std::vector<int>{2, 5}) == std::vector<IndexSet>{{}, {2}, {5}, {2, 5}});
  }

  TEST_CASE("coset classes") {
    const auto cls = coset_classes(ReducedWord({1, 2}, 4), 2);
    REQUIRE(cls.size() == 3);
    CHECK(cls[0].representative.is_identity());
    CHECK(cls[0].members == std::vector<IndexSet>{{}, {1}});
    CHECK(cls[1].representative == P("1324"));
    CHECK(cls[1].members == std::vector<IndexSet>{{2}});
    CHECK(cls[2].representative == P("2314"));
    CHECK(cls[2].members == std::vector<IndexSet>{{1, 2}});

    const auto single = coset_classes(ReducedWord({2}, 4), 2);
    REQUIRE(single.size() == 2);
    CHECK(single[0].members.size() == 1);
    CHECK(single[1].members.size() == 1);

    const auto w3 = coset_classes(wd_word(3), 3);
    CHECK(w3.size() == 10);
    std::size_t total = 0;
    for (const auto& c : w3) total += c.members.size();
    CHECK(total == 32);

    CHECK_ERROR_CODE(coset_classes(ReducedWord({1, 2, 1}, 4), 2), ErrorCode::NotDistinctWord);
  }

  TEST_CASE("coset classes match a block-sorting oracle") {
    for (int d = 1; d <= 4; ++d) {
      const ReducedWord word = wd_word(d);
      const auto expected = oracle::classes(letters_of(word), 2 * d, d);
      const auto got = coset_classes(word, d);
      REQUIRE(got.size() == expected.size());
      for (const auto& c : got) {
        const auto it = expected.find(c.representative.one_line());
        REQUIRE(it != expected.end());
        CHECK(std::set<IndexSet>(c.members.begin(), c.members.end()) == it->second);
      }
    }
  }

  TEST_CASE("lift classes in closed form") {
    CHECK(lifts_of_v_closed_form(2, 0, 2) == std::vector<IndexSet>{{}, {1}, {2}, {1, 2}});
    CHECK(lifts_of_v_closed_form(3, 0, 0) == std::vector<IndexSet>{{1, 2, 3, 4, 5}});
    CHECK_ERROR_CODE(lifts_of_v_closed_form(3, 3, 0), ErrorCode::InvalidHookParams);
    CHECK_ERROR_CODE(lifts_of_v_closed_form(3, 0, 4), ErrorCode::InvalidHookParams);
    CHECK_ERROR_CODE(lifts_of_v_closed_form(0, 0, 0), ErrorCode::InvalidHookParams);

    for (int d = 1; d <= 6; ++d) {
      std::size_t total = lifts_of_v_closed_form(d, 0, d).size();
      for (int a = 0; a <= d - 1; ++a) {
        for (int b = 0; b <= d - 1; ++b) total += lifts_of_v_closed_form(d, a, b).size();
      }
      CHECK(total == std::size_t{1} << (2 * d - 1));
    }

    for (int d = 1; d <= 4; ++d) {
      const auto brute = oracle::classes(letters_of(wd_word(d)), 2 * d, d);
      for (int a = 0; a <= d - 1; ++a) {
        for (int b = 0; b <= d; ++b) {
          if (b == d && a > 0) continue;
          const auto v = wd_fixed_point_word(d, a, b).permutation();
          const auto closed = lifts_of_v_closed_form(d, a, b);
          CHECK(std::set<IndexSet>(closed.begin(), closed.end()) == brute.at(v.one_line()));
        }
      }
    }
  }

  TEST_CASE("class sizes over w_d sum to 2^(2d-1)") {
    for (int d = 1; d <= 6; ++d) {
      std::size_t total = 0;
      for (const auto& c : coset_classes(wd_word(d), d)) total += c.members.size();
      CHECK(total == std::size_t{1} << (2 * d - 1));
    }
  }
}
