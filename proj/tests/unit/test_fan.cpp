#include <doctest.h>

#include <set>

#include "check_error.hpp"
#include "test_oracles.hpp"
#include "toricschubert/classify.hpp"
#include "toricschubert/fan.hpp"
#include "toricschubert/oracles.hpp"

using namespace toricschubert;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
LatticeVector V(std::initializer_list<long long> c) { return lattice_vector(c); }

std::set<LatticeVector> cone_set(const Fan& f, std::size_t c) {
  const auto rays = f.cone_rays(c);
  return {rays.begin(), rays.end()};
}

Fan hand_fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<std::vector<std::size_t>> cones) {
  Fan f;
  f.ambient_dim = dim;
  f.space = SpaceTag::Grassmannian;
  f.rays = std::move(rays);
  f.max_cones = std::move(cones);
  return f;
}

// Hirzebruch surface F_2: complete, smooth, so Gorenstein, but not Fano.
Fan hirzebruch2() {
  return hand_fan(2, {V({1, 0}), V({0, 1}), V({-1, 2}), V({0, -1})}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

// Cone over a square with one vertex pushed off the plane z = 1.
Fan bent_square() {
  return hand_fan(3, {V({1, 1, 2}), V({-1, 1, 1}), V({-1, -1, 1}), V({1, -1, 1})}, {{0, 1, 2, 3}});
}

std::size_t grassmannian_below(const Permutation& w, int d, int n) {
  const auto lower = oracle::below(w.one_line());
  std::size_t count = 0;
  for (const auto& line : lower) {
    if (is_grassmannian(Permutation(line), d)) ++count;
  }
  return count;
}

}  // namespace

TEST_SUITE("fan") {
  TEST_CASE("flag fan of s_1 s_2") {
    const Fan f = flag_fan(ReducedWord({1, 2}, 4));
    CHECK(f.ambient_dim == 2);
    CHECK(f.space == SpaceTag::Flag);
    // Columns of [[1,0,-1,0],[0,1,1,-1]].
    CHECK(f.rays == std::vector<LatticeVector>{V({1, 0}), V({0, 1}), V({-1, 1}), V({0, -1})});
    // e: v1 v2, s_1: w1 v2, s_2: v1 w2, s_1 s_2: w1 w2.
    CHECK(f.max_cones == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}, {0, 3}, {2, 3}});
    CHECK(f.labels == std::vector<Permutation>{P("1234"), P("2134"), P("1324"), P("2314")});
  }

  TEST_CASE("flag fan of s_1 s_3 s_2") {
    const Fan f = flag_fan(ReducedWord({1, 3, 2}, 4));
    CHECK(f.rays == std::vector<LatticeVector>{V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1}), V({-1, 0, 1}),
                                               V({0, -1, 1}), V({0, 0, -1})});
    const std::vector<std::vector<std::size_t>> table = {{0, 1, 2}, {1, 2, 3}, {0, 2, 4}, {0, 1, 5},
                                                         {2, 3, 4}, {1, 3, 5}, {0, 4, 5}, {3, 4, 5}};
    CHECK(f.max_cones == table);
    const std::vector<Permutation> labels = {P("1234"), P("2134"), P("1243"), P("1324"),
                                             P("2143"), P("2314"), P("1423"), P("2413")};
    CHECK(f.labels == labels);
  }

  TEST_CASE("flag fan of a single reflection is P^1") {
    const Fan f = flag_fan(ReducedWord({1}, 2));
    CHECK(f.rays == std::vector<LatticeVector>{V({1}), V({-1})});
    CHECK(f.max_cones.size() == 2);
    CHECK(is_projective_space_fan(f) == 1);
    CHECK_ERROR_CODE(flag_fan(ReducedWord({1, 2, 1}, 3)), ErrorCode::NotDistinctWord);
  }

  TEST_CASE("flag rays follow the Cartan matrix") {
    for (int n = 2; n <= 7; ++n) {
      for (int d = 1; d < n; ++d) {
        for (int x = 1; x <= n - d; ++x) {
          for (int y = 0; y <= d - 1; ++y) {
            const ReducedWord word = toric_word(x, y, d, n);
            const Fan f = flag_fan(word);
            const std::size_t m = word.size();
            for (std::size_t k = 0; k < m; ++k) {
              for (std::size_t j = 0; j < m; ++j) {
                CHECK(f.rays[k][j] == (j == k ? 1 : 0));
                long long expected = 0;
                if (j == k) expected = -1;
                if (j > k && std::abs(word[j] - word[k]) == 1) expected = 1;
                CHECK(f.rays[m + k][j] == expected);
              }
            }
            for (std::size_t c = 0; c < f.max_cones.size(); ++c) CHECK(is_unimodular(f.cone(c)));
          }
        }
      }
    }
  }

  TEST_CASE("Grassmannian fan of 2314 is P^2") {
    const Fan f = grassmannian_fan(P("2314"), 2, 4);
    CHECK(f.rays == std::vector<LatticeVector>{V({1, 0}), V({-1, 1}), V({0, -1})});
    CHECK(f.max_cones == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(f.labels == std::vector<Permutation>{P("1234"), P("1324"), P("2314")});
    CHECK(is_projective_space_fan(f) == 2);

    const auto merged = merged_cones(P("2314"), 2, 4);
    REQUIRE(merged.size() == 3);
    CHECK(merged[0].members == std::vector<IndexSet>{{}, {1}});
    CHECK(merged[1].members == std::vector<IndexSet>{{2}});
    CHECK(merged[2].members == std::vector<IndexSet>{{1, 2}});
  }

  TEST_CASE("Grassmannian fan of the identity is a point") {
    const Fan f = grassmannian_fan(Permutation::identity(4), 2, 4);
    CHECK(f.ambient_dim == 0);
    CHECK(f.rays.empty());
    CHECK(f.max_cones == std::vector<std::vector<std::size_t>>{{}});
    CHECK(is_projective_space_fan(f) == 0);
    CHECK(is_complete_sampled(f, 10, 1));
    const auto c = anticanonical_cartier(f);
    REQUIRE(std::holds_alternative<CartierData>(c));
    CHECK(is_fano(f, std::get<CartierData>(c)));
  }

  TEST_CASE("Grassmannian fan errors") {
    CHECK_ERROR_CODE(grassmannian_fan(P("3412"), 2, 4), ErrorCode::NotToric);
    CHECK_ERROR_CODE(grassmannian_fan(P("2143"), 2, 4), ErrorCode::NotGrassmannian);
  }

  TEST_CASE("cone count equals the number of Grassmannian fixed points") {
    for (int n = 2; n <= 6; ++n) {
      for (int d = 1; d < n; ++d) {
        for (const auto& w : grassmannian_permutations(d, n)) {
          if (!is_toric(w, d, n)) continue;
          const Fan f = grassmannian_fan(w, d, n);
          CHECK(f.max_cones.size() == grassmannian_below(w, d, n));
          for (const auto& v : f.labels) CHECK(is_grassmannian(v, d));
        }
      }
    }
  }

  TEST_CASE("fan structure: rays used, no nested cones, pointed cones") {
    for (int n = 2; n <= 7; ++n) {
      for (int d = 1; d < n; ++d) {
        for (const auto& w : grassmannian_permutations(d, n)) {
          if (!is_toric(w, d, n)) continue;
          const Fan f = grassmannian_fan(w, d, n);
          std::set<std::size_t> used;
          for (const auto& c : f.max_cones) used.insert(c.begin(), c.end());
          CHECK(used.size() == f.rays.size());
          CHECK(std::set<LatticeVector>(f.rays.begin(), f.rays.end()).size() == f.rays.size());
          for (std::size_t a = 0; a < f.max_cones.size(); ++a) {
            CHECK(f.cone(a).dimension() == f.ambient_dim);
            for (std::size_t b = 0; b < f.max_cones.size(); ++b) {
              if (a == b) continue;
              CHECK_FALSE(std::includes(f.max_cones[a].begin(), f.max_cones[a].end(), f.max_cones[b].begin(),
                                        f.max_cones[b].end()));
            }
          }
        }
      }
    }
  }

  TEST_CASE("w_2 fan") {
    const Fan f = wd_fan(2);
    CHECK(f.rays ==
          std::vector<LatticeVector>{V({1, 0, 0}), V({0, 1, 0}), V({-1, 0, 1}), V({0, -1, 1}), V({0, 0, -1})});
    // v1 v2 w1 w2 w3 are indices 0..4.
    const std::vector<std::vector<std::size_t>> cones = {{0, 3, 4}, {1, 2, 4}, {0, 1, 4}, {2, 3, 4}, {0, 1, 2, 3}};
    CHECK(f.max_cones == cones);
    CHECK(f.labels.back().is_identity());
    CHECK(f.labels[3] == P("2413"));
    CHECK(same_labeled_fan(f, grassmannian_fan(P("2413"), 2, 4)));
    CHECK_FALSE(is_projective_space_fan(f).has_value());
  }

  TEST_CASE("w_d fans") {
    const Fan one = wd_fan(1);
    CHECK(one.rays.size() == 2);
    CHECK(is_projective_space_fan(one) == 1);
    const Fan three = wd_fan(3);
    CHECK(three.rays.size() == 7);
    CHECK(three.max_cones.size() == 10);
    for (int d = 2; d <= 6; ++d) {
      const Fan f = wd_fan(d);
      CHECK(f.rays.size() == static_cast<std::size_t>(2 * d + 1));
      CHECK(f.max_cones.size() == static_cast<std::size_t>(d * d + 1));
    }
    for (int d = 1; d <= 4; ++d) {
      CHECK(same_labeled_fan(wd_fan(d), grassmannian_fan(wd_word(d).permutation(), d, 2 * d)));
    }
    CHECK_ERROR_CODE(wd_fan(0), ErrorCode::InvalidParam);
  }

  TEST_CASE("ray relations") {
    CHECK(verify_ray_relations(2));
    CHECK(verify_ray_relations(3));
    CHECK(verify_ray_relations(6));
    CHECK_ERROR_CODE(verify_ray_relations(1), ErrorCode::InvalidParam);
  }

  TEST_CASE("negative-sum expressions for the rays of w_d") {
    for (int d = 2; d <= 6; ++d) {
      const Fan flag = flag_fan(wd_word(d));
      const std::size_t m = static_cast<std::size_t>(2 * d - 1);
      const auto v = [&](int i) { return flag.rays[static_cast<std::size_t>(i - 1)]; };
      const auto w = [&](int i) { return flag.rays[m + static_cast<std::size_t>(i - 1)]; };
      const auto sum = [&](std::vector<LatticeVector> terms) {
        LatticeVector s(m, Integer(0));
        for (const auto& t : terms) s = add(s, t);
        return s;
      };
      std::vector<LatticeVector> tail;
      for (int i = d; i <= 2 * d - 1; ++i) tail.push_back(w(i));
      CHECK(v(d) == negate(sum(tail)));

      std::vector<LatticeVector> head;
      for (int i = 1; i <= d - 1; ++i) head.push_back(w(i));
      head.push_back(w(2 * d - 1));
      CHECK(v(1) == negate(sum(head)));

      for (int a = 1; a <= d - 1; ++a) {
        std::vector<LatticeVector> terms = {v(1)};
        for (int i = 1; i <= d - 1; ++i) {
          if (i != a) terms.push_back(w(i));
        }
        terms.push_back(w(2 * d - 1));
        CHECK(w(a) == negate(sum(terms)));
      }
      for (int b = 1; b <= d - 1; ++b) {
        std::vector<LatticeVector> terms = {v(d)};
        for (int i = d; i <= 2 * d - 1; ++i) {
          if (i != d + b - 1) terms.push_back(w(i));
        }
        CHECK(w(d + b - 1) == negate(sum(terms)));
      }
      std::vector<LatticeVector> last = {v(1)};
      for (int i = 1; i <= d - 1; ++i) last.push_back(w(i));
      CHECK(w(2 * d - 1) == negate(sum(last)));
    }
  }

  TEST_CASE("anticanonical Cartier data of the w_2 fan") {
    const Fan f = wd_fan(2);
    const auto c = anticanonical_cartier(f);
    REQUIRE(std::holds_alternative<CartierData>(c));
    const auto& data = std::get<CartierData>(c);
    CHECK(data.per_cone_m[4] == RationalVector{-1, -1, -2});
    CHECK(data.per_cone_m[3] == RationalVector{2, 2, 1});
    for (std::size_t s = 0; s < f.max_cones.size(); ++s) {
      for (const auto& u : f.cone_rays(s)) CHECK(dot(u, data.per_cone_m[s]) == -1);
    }
    CHECK(dot(V({0, 0, -1}), data.per_cone_m[4]) == 2);
    CHECK(is_fano(f, data));
  }

  TEST_CASE("smooth fans are Cartier and Fano") {
    const Fan f = grassmannian_fan(P("2314"), 2, 4);
    const auto c = anticanonical_cartier(f);
    REQUIRE(std::holds_alternative<CartierData>(c));
    CHECK(std::get<CartierData>(c).per_cone_m.size() == 3);
    CHECK(is_fano(f, std::get<CartierData>(c)));
  }

  TEST_CASE("negative control: inconsistent Cartier system") {
    const auto c = anticanonical_cartier(bent_square());
    REQUIRE(std::holds_alternative<NotGorenstein>(c));
    CHECK(std::get<NotGorenstein>(c).reason == NotGorenstein::Reason::Inconsistent);
    // The unbent square is Gorenstein.
    Fan flat = bent_square();
    flat.rays[0] = V({1, 1, 1});
    CHECK(std::holds_alternative<CartierData>(anticanonical_cartier(flat)));
  }

  TEST_CASE("negative control: non-integral Cartier data") {
    const Fan f = hand_fan(2, {V({2, 1}), V({1, 2}), V({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
    const auto c = anticanonical_cartier(f);
    REQUIRE(std::holds_alternative<NotGorenstein>(c));
    const auto& ng = std::get<NotGorenstein>(c);
    CHECK(ng.reason == NotGorenstein::Reason::NonIntegral);
    CHECK(ng.cone == 0);
    CHECK(*ng.m == RationalVector{Rational(-1, 3), Rational(-1, 3)});
  }

  TEST_CASE("negative control: Gorenstein but not Fano") {
    const Fan f = hirzebruch2();
    CHECK(is_complete_sampled(f, 2000, 3));
    const auto c = anticanonical_cartier(f);
    REQUIRE(std::holds_alternative<CartierData>(c));
    const auto& data = std::get<CartierData>(c);
    CHECK_FALSE(is_fano(f, data));
    const auto v = fano_violation(f, data);
    REQUIRE(v.has_value());
    CHECK(v->value <= -1);
    CHECK(std::find(f.max_cones[v->cone].begin(), f.max_cones[v->cone].end(), v->ray) == f.max_cones[v->cone].end());
  }

  TEST_CASE("Cartier and Fano errors") {
    const Fan flat = hand_fan(2, {V({1, 0}), V({0, 1})}, {{0}, {1}});
    CHECK_ERROR_CODE(anticanonical_cartier(flat), ErrorCode::DegenerateCone);
    const Fan f = wd_fan(2);
    auto data = std::get<CartierData>(anticanonical_cartier(f));
    CartierData short_data = data;
    short_data.per_cone_m.pop_back();
    CHECK_ERROR_CODE(is_fano(f, short_data), ErrorCode::MismatchedData);
    data.per_cone_m[0][0] += 1;
    CHECK_ERROR_CODE(is_fano(f, data), ErrorCode::MismatchedData);
  }

  TEST_CASE("completeness sampling") {
    CHECK(is_complete_sampled(wd_fan(2), 10000, 42));
    CHECK(is_complete_sampled(grassmannian_fan(P("2314"), 2, 4), 10000, 42));
    const Fan orthant = hand_fan(2, {V({1, 0}), V({0, 1})}, {{0, 1}});
    CHECK_FALSE(is_complete_sampled(orthant, 1000, 42));
    // Same seed, same verdict; a half-plane fan is caught for any seed.
    const Fan half = hand_fan(2, {V({1, 0}), V({0, 1}), V({-1, 0})}, {{0, 1}, {1, 2}});
    for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK_FALSE(is_complete_sampled(half, 1000, seed));
  }

  TEST_CASE("projective space recognition") {
    CHECK(is_projective_space_fan(grassmannian_fan(P("2314"), 2, 4)) == 2);
    CHECK_FALSE(is_projective_space_fan(wd_fan(2)).has_value());
    CHECK(is_projective_space_fan(hand_fan(1, {V({1}), V({-1})}, {{0}, {1}})) == 1);
    CHECK_FALSE(is_projective_space_fan(hirzebruch2()).has_value());
    // Right rays, wrong cones.
    CHECK_FALSE(is_projective_space_fan(hand_fan(2, {V({1, 0}), V({0, 1}), V({-1, -1})}, {{0, 1}, {1, 2}}))
                    .has_value());
    // Weighted projective plane: relation fails.
    CHECK_FALSE(
        is_projective_space_fan(hand_fan(2, {V({1, 0}), V({0, 1}), V({-1, -2})}, {{0, 1}, {1, 2}, {0, 2}}))
            .has_value());
  }

  TEST_CASE("smooth toric varieties are projective spaces") {
    for (int n = 2; n <= 7; ++n) {
      for (int d = 1; d < n; ++d) {
        for (const auto& w : grassmannian_permutations(d, n)) {
          if (!is_toric(w, d, n) || !is_smooth(w, d, n)) continue;
          CHECK(is_projective_space_fan(grassmannian_fan(w, d, n)) == length(w));
        }
      }
    }
  }

  TEST_CASE("merged cones are unions of their flag cones") {
    const auto merged = merged_cones(wd_word(2).permutation(), 2, 4);
    const auto it = std::find_if(merged.begin(), merged.end(), [](const MergedCone& m) { return m.label.is_identity(); });
    REQUIRE(it != merged.end());
    const auto& e = *it;
    CHECK(e.pieces.size() == 4);
    CHECK(e.merged.generators().size() == 4);
    CHECK(cone_union_equals(e.merged, e.pieces));
    CHECK_FALSE(cone_union_equals(e.merged, {e.pieces[0]}));

    auto missing = e.pieces;
    missing.pop_back();
    CHECK_FALSE(cone_union_equals(e.merged, missing));

    const Cone simplex({V({1, 0}), V({0, 1})}, 2);
    CHECK(cone_union_equals(simplex, {simplex}));

    // A bigger cone than the pieces cover.
    const Cone wide({V({1, 0}), V({-1, 1})}, 2);
    CHECK_FALSE(cone_union_equals(wide, {simplex}));

    const Cone fat({V({2, 1}), V({1, 2})}, 2);
    CHECK_ERROR_CODE(cone_union_equals(fat, {fat}), ErrorCode::NotUnimodularPiece);

    for (int d = 1; d <= 4; ++d) {
      for (const auto& mc : merged_cones(wd_word(d).permutation(), d, 2 * d)) {
        CHECK(cone_union_equals(mc.merged, mc.pieces));
      }
    }
  }

  TEST_CASE("merged cones are convex for every toric w") {
    for (int n = 2; n <= 6; ++n) {
      for (int d = 1; d < n; ++d) {
        for (const auto& w : grassmannian_permutations(d, n)) {
          if (!is_toric(w, d, n)) continue;
          for (const auto& mc : merged_cones(w, d, n)) {
            CHECK_MESSAGE(cone_union_equals(mc.merged, mc.pieces), w.to_string() << " at " << mc.label.to_string());
          }
        }
      }
    }
  }

  TEST_CASE("fan JSON") {
    const std::string json = to_json(grassmannian_fan(P("2314"), 2, 4)).dump();
    CHECK(json ==
          R"({"ambient_dim":2,"space":"grassmannian","rays":[[1,0],[-1,1],[0,-1]],)"
          R"("max_cones":[[0,1],[0,2],[1,2]],"labels":["1234","1324","2314"]})");
    CHECK(to_json(flag_fan(ReducedWord({1}, 2))).dump() ==
          R"({"ambient_dim":1,"space":"flag","rays":[[1],[-1]],"max_cones":[[0],[1]],"labels":["12","21"]})");
  }

  TEST_CASE("Cartier JSON") {
    const Fan f = wd_fan(2);
    const auto c = anticanonical_cartier(f);
    const std::string json = to_json(c, true).dump();
    CHECK(json.rfind(R"({"gorenstein":true,"fano":true,"m":[["-1","2","1"],)", 0) == 0);
    const std::string bad = to_json(anticanonical_cartier(bent_square()), false).dump();
    CHECK(bad == R"({"gorenstein":false,"fano":false,"m":[]})");
    const Fan frac = hand_fan(2, {V({2, 1}), V({1, 2}), V({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(to_string(std::get<NotGorenstein>(anticanonical_cartier(frac)).m->at(0)) == "-1/3");
  }
}
