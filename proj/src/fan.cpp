#include "toricschubert/fan.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <set>

#include "toricschubert/classify.hpp"
#include "toricschubert/errors.hpp"
#include "toricschubert/partition.hpp"

namespace toricschubert {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;

std::vector<LatticeVector> Fan::cone_rays(std::size_t cone) const {
  std::vector<LatticeVector> out;
  for (std::size_t i : max_cones.at(cone)) out.push_back(rays.at(i));
  return out;
}

Fan flag_fan(const ReducedWord& word) {
  if (!word.has_distinct_letters()) {
    throw Error(ErrorCode::NotDistinctWord, "word " + word.to_string() + " repeats a letter");
  }
  const std::size_t m = word.size();
  Fan f;
  f.ambient_dim = m;
  f.space = SpaceTag::Flag;
  for (std::size_t k = 0; k < m; ++k) {
    LatticeVector v(m, Integer(0));
    v[k] = 1;
    f.rays.push_back(std::move(v));
  }
  // Column k of the w-block: -1 on the diagonal and -c_{i_j,i_k} below it.
  // With distinct letters the Cartan entry is -1 exactly for adjacent letters.
  for (std::size_t k = 0; k < m; ++k) {
    LatticeVector w(m, Integer(0));
    w[k] = -1;
    for (std::size_t j = k + 1; j < m; ++j) {
      if (std::abs(word[j] - word[k]) == 1) w[j] = 1;
    }
    f.rays.push_back(std::move(w));
  }
  for (const auto& sub : subwords(word)) {
    std::vector<std::size_t> cone;
    for (std::size_t pos = 1; pos <= m; ++pos) {
      const bool in_j = std::binary_search(sub.indices.begin(), sub.indices.end(), static_cast<int>(pos));
      cone.push_back(in_j ? m + pos - 1 : pos - 1);
    }
    std::sort(cone.begin(), cone.end());
    f.max_cones.push_back(std::move(cone));
    f.labels.push_back(sub.perm);
  }
  return f;
}

namespace {

struct Projection {
  Fan flag;
  std::vector<MergedCone> cones;
};

Projection project(const Permutation& w, int d, int n) {
  if (!is_toric(w, d, n)) {
    throw Error(ErrorCode::NotToric, "X_" + w.to_string() + " in Gr(" + std::to_string(d) + "," + std::to_string(n) +
                                         ") is not toric");
  }
  const ReducedWord word = toric_word_of(w, d);
  Projection out{flag_fan(word), {}};
  if (word.size() == 0) {
    out.cones.push_back({w, {IndexSet{}}, Cone({}, 0), {Cone({}, 0)}});
    return out;
  }
  const std::vector<IndexSet> order = subsets_graded_lex(static_cast<int>(word.size()));
  std::map<IndexSet, std::size_t> cone_of;
  for (std::size_t i = 0; i < order.size(); ++i) cone_of[order[i]] = i;

  for (auto& cls : coset_classes(word, d)) {
    std::set<std::size_t> ray_ids;
    std::vector<Cone> pieces;
    for (const auto& member : cls.members) {
      const std::size_t idx = cone_of.at(member);
      ray_ids.insert(out.flag.max_cones[idx].begin(), out.flag.max_cones[idx].end());
      pieces.push_back(out.flag.cone(idx));
    }
    std::vector<LatticeVector> gens;
    for (std::size_t id : ray_ids) gens.push_back(out.flag.rays[id]);
    out.cones.push_back({cls.representative, cls.members, Cone(gens, out.flag.ambient_dim), std::move(pieces)});
  }
  return out;
}

}  // namespace

std::vector<MergedCone> merged_cones(const Permutation& w, int d, int n) { return project(w, d, n).cones; }

Fan grassmannian_fan(const Permutation& w, int d, int n) {
  Projection proj = project(w, d, n);
  Fan f;
  f.space = SpaceTag::Grassmannian;
  f.ambient_dim = proj.flag.ambient_dim;

  // Keep the flag ray order (v's then w's) for the rays that survive.
  std::vector<std::vector<std::size_t>> flag_ids;
  std::set<std::size_t> used;
  for (const auto& mc : proj.cones) {
    std::vector<std::size_t> ids;
    for (const auto& g : mc.merged.generators()) {
      const auto it = std::find(proj.flag.rays.begin(), proj.flag.rays.end(), g);
      ids.push_back(static_cast<std::size_t>(it - proj.flag.rays.begin()));
    }
    used.insert(ids.begin(), ids.end());
    flag_ids.push_back(std::move(ids));
  }
  std::map<std::size_t, std::size_t> remap;
  for (std::size_t id : used) {
    remap[id] = f.rays.size();
    f.rays.push_back(proj.flag.rays[id]);
  }
  for (std::size_t c = 0; c < proj.cones.size(); ++c) {
    std::vector<std::size_t> cone;
    for (std::size_t id : flag_ids[c]) cone.push_back(remap.at(id));
    std::sort(cone.begin(), cone.end());
    f.max_cones.push_back(std::move(cone));
    f.labels.push_back(proj.cones[c].label);
  }
  return f;
}

Fan wd_fan(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidParam, "w_d needs d >= 1");
  const Fan flag = flag_fan(wd_word(d));
  const std::size_t m = static_cast<std::size_t>(2 * d - 1);
  const auto v = [&](int i) { return flag.rays[static_cast<std::size_t>(i - 1)]; };
  const auto w = [&](int i) { return flag.rays[m + static_cast<std::size_t>(i - 1)]; };

  Fan f;
  f.ambient_dim = m;
  f.space = SpaceTag::Grassmannian;
  f.rays.push_back(v(1));
  if (d > 1) f.rays.push_back(v(d));
  const std::size_t v1 = 0;
  const std::size_t vd = d > 1 ? 1 : 0;
  const std::size_t w_offset = f.rays.size();
  for (int i = 1; i <= 2 * d - 1; ++i) f.rays.push_back(w(i));
  const auto wi = [&](int i) { return w_offset + static_cast<std::size_t>(i - 1); };

  const auto add_cone = [&](std::vector<std::size_t> head, const std::vector<int>& skip, int w_last, int a, int b) {
    for (int i = 1; i <= w_last; ++i) {
      if (std::find(skip.begin(), skip.end(), i) == skip.end()) head.push_back(wi(i));
    }
    std::sort(head.begin(), head.end());
    head.erase(std::unique(head.begin(), head.end()), head.end());
    f.max_cones.push_back(std::move(head));
    f.labels.push_back(wd_fixed_point_word(d, a, b).permutation());
  };

  for (int a = 1; a <= d - 1; ++a) add_cone({v1}, {a}, 2 * d - 1, a, 0);
  for (int b = 1; b <= d - 1; ++b) add_cone({vd}, {d + b - 1}, 2 * d - 1, 0, b);
  for (int a = 1; a <= d - 1; ++a) {
    for (int b = 1; b <= d - 1; ++b) add_cone({v1, vd}, {a, d + b - 1}, 2 * d - 1, a, b);
  }
  add_cone({}, {}, 2 * d - 1, 0, 0);
  add_cone({v1, vd}, {}, 2 * d - 2, 0, d);
  return f;
}

bool verify_ray_relations(int d) {
  if (d < 2) throw Error(ErrorCode::InvalidParam, "ray relations need d >= 2");
  const Fan flag = flag_fan(wd_word(d));
  const int m = 2 * d - 1;
  const auto v = [&](int i) { return flag.rays[static_cast<std::size_t>(i - 1)]; };
  const auto w = [&](int i) { return flag.rays[static_cast<std::size_t>(m + i - 1)]; };
  for (int i = 1; i <= m; ++i) {
    if (i == d - 1 || i == m) continue;
    if (add(v(i), w(i)) != v(i + 1)) return false;
  }
  if (add(v(d - 1), w(d - 1)) != v(m)) return false;
  return is_zero(add(v(m), w(m)));
}

CartierOutcome anticanonical_cartier(const Fan& f) {
  CartierData data;
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    const IntegerMatrix rows = f.cone_rays(c);
    if (rank(rows) != f.ambient_dim) {
      throw Error(ErrorCode::DegenerateCone, "maximal cone " + std::to_string(c) + " is not full-dimensional");
    }
    auto m = solve_exact(rows, LatticeVector(rows.size(), Integer(-1)));
    if (!m) return NotGorenstein{c, NotGorenstein::Reason::Inconsistent, std::nullopt};
    const bool integral = std::all_of(m->begin(), m->end(), [](const Rational& q) { return denominator(q) == 1; });
    if (!integral) return NotGorenstein{c, NotGorenstein::Reason::NonIntegral, std::move(m)};
    data.per_cone_m.push_back(std::move(*m));
  }
  return data;
}

std::optional<FanoViolation> fano_violation(const Fan& f, const CartierData& c) {
  if (c.per_cone_m.size() != f.max_cones.size()) {
    throw Error(ErrorCode::MismatchedData, "Cartier data has the wrong number of cones");
  }
  for (std::size_t s = 0; s < f.max_cones.size(); ++s) {
    const RationalVector& m = c.per_cone_m[s];
    if (m.size() != f.ambient_dim) throw Error(ErrorCode::MismatchedData, "Cartier vector has the wrong dimension");
    const auto& cone = f.max_cones[s];
    for (std::size_t r = 0; r < f.rays.size(); ++r) {
      const Rational value = dot(f.rays[r], m);
      const bool inside = std::binary_search(cone.begin(), cone.end(), r);
      if (inside && value != -1) {
        throw Error(ErrorCode::MismatchedData, "m_sigma does not take -1 on ray " + std::to_string(r) + " of cone " +
                                                   std::to_string(s));
      }
      if (!inside && value <= -1) return FanoViolation{s, r, value};
    }
  }
  return std::nullopt;
}

bool is_fano(const Fan& f, const CartierData& c) { return !fano_violation(f, c).has_value(); }

bool is_complete_sampled(const Fan& f, std::size_t samples, std::uint64_t seed) {
  const std::size_t dim = f.ambient_dim;
  if (dim == 0) return true;

  // Facet normals are tiny; evaluate in 64-bit and fall back to exact
  // arithmetic only if a normal is too large for that to be safe.
  constexpr long long kSafe = 1LL << 40;
  std::vector<Cone> cones;
  std::vector<std::vector<std::vector<long long>>> small;
  bool fast = true;
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    cones.push_back(f.cone(c));
    std::vector<std::vector<long long>> rows;
    for (const auto& h : cones.back().hrep()) {
      std::vector<long long> row;
      for (const auto& x : h) {
        if (abs(x) > kSafe) fast = false;
        row.push_back(fast ? x.convert_to<long long>() : 0);
      }
      rows.push_back(std::move(row));
    }
    small.push_back(std::move(rows));
  }

  std::mt19937_64 rng(seed);
  std::vector<long long> p(dim);
  LatticeVector exact(dim);
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t k = 0; k < dim; ++k) {
      p[k] = static_cast<long long>(rng() % 2001) - 1000;
      exact[k] = p[k];
    }
    bool covered = false;
    for (std::size_t c = 0; c < cones.size() && !covered; ++c) {
      if (!fast) {
        covered = cone_contains(cones[c], exact);
        continue;
      }
      covered = std::all_of(small[c].begin(), small[c].end(), [&](const std::vector<long long>& h) {
        long long acc = 0;
        for (std::size_t k = 0; k < dim; ++k) acc += h[k] * p[k];
        return acc >= 0;
      });
    }
    if (!covered) return false;
  }
  return true;
}

std::optional<int> is_projective_space_fan(const Fan& f) {
  const std::size_t l = f.ambient_dim;
  if (l == 0) {
    if (f.rays.empty() && f.max_cones.size() == 1 && f.max_cones.front().empty()) return 0;
    return std::nullopt;
  }
  if (f.rays.size() != l + 1) return std::nullopt;

  bool relation = false;
  for (std::size_t k = 0; k <= l && !relation; ++k) {
    IntegerMatrix basis;
    LatticeVector sum(l, Integer(0));
    for (std::size_t i = 0; i <= l; ++i) {
      if (i == k) continue;
      basis.push_back(f.rays[i]);
      sum = add(sum, f.rays[i]);
    }
    relation = abs(determinant(basis)) == 1 && f.rays[k] == negate(sum);
  }
  if (!relation) return std::nullopt;

  std::set<std::vector<std::size_t>> seen;
  for (const auto& cone : f.max_cones) {
    if (cone.size() != l) return std::nullopt;
    seen.insert(cone);
  }
  if (seen.size() != l + 1 || f.max_cones.size() != l + 1) return std::nullopt;
  return static_cast<int>(l);
}

namespace {

// Pulling triangulation of the face spanned by `face` (indices into gens):
// cone the first generator over the triangulated facets not containing it.
void pull(const std::vector<LatticeVector>& gens, const std::vector<std::vector<std::size_t>>& tight,
          const std::vector<std::size_t>& face, std::size_t face_dim, std::vector<std::vector<std::size_t>>& out) {
  if (face.size() == face_dim) {
    out.push_back(face);
    return;
  }
  const std::size_t apex = face.front();
  std::set<std::vector<std::size_t>> seen;
  for (const auto& t : tight) {
    std::vector<std::size_t> sub;
    std::set_intersection(face.begin(), face.end(), t.begin(), t.end(), std::back_inserter(sub));
    if (sub.size() + 1 < face_dim || std::binary_search(sub.begin(), sub.end(), apex)) continue;
    if (!seen.insert(sub).second) continue;
    IntegerMatrix rows;
    for (std::size_t i : sub) rows.push_back(gens[i]);
    if (rank(rows) + 1 != face_dim) continue;
    std::vector<std::vector<std::size_t>> lower;
    pull(gens, tight, sub, face_dim - 1, lower);
    for (auto& simplex : lower) {
      simplex.push_back(apex);
      std::sort(simplex.begin(), simplex.end());
      out.push_back(std::move(simplex));
    }
  }
}

Rational slice_volume(const IntegerMatrix& simplex, const LatticeVector& form) {
  Rational heights = 1;
  for (const auto& g : simplex) heights *= Rational(dot(form, g));
  return Rational(abs(determinant(simplex))) / heights;
}

}  // namespace

bool cone_union_equals(const Cone& merged, const std::vector<Cone>& pieces) {
  const std::size_t dim = merged.ambient_dim();
  for (const auto& piece : pieces) {
    if (piece.ambient_dim() != dim) throw Error(ErrorCode::DimensionMismatch, "piece lives in another space");
    if (!is_unimodular(piece)) throw Error(ErrorCode::NotUnimodularPiece, "piece is not a unimodular cone");
  }
  if (dim == 0) return !pieces.empty();
  if (merged.dimension() != dim) return false;

  for (const auto& piece : pieces) {
    for (const auto& g : piece.generators()) {
      if (!cone_contains(merged, g)) return false;
    }
  }
  for (const auto& g : merged.generators()) {
    const bool found = std::any_of(pieces.begin(), pieces.end(), [&](const Cone& p) { return cone_contains(p, g); });
    if (!found) return false;
  }

  // Sum of inward facet normals is strictly positive on merged minus {0}.
  LatticeVector form(dim, Integer(0));
  for (const auto& h : merged.facets()) form = add(form, h);

  Rational pieces_volume = 0;
  for (const auto& piece : pieces) pieces_volume += slice_volume(piece.generators(), form);

  const auto& gens = merged.generators();
  std::vector<std::vector<std::size_t>> tight;
  for (const auto& h : merged.facets()) {
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (dot(h, gens[i]) == 0) t.push_back(i);
    }
    tight.push_back(std::move(t));
  }
  std::vector<std::size_t> all(gens.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::vector<std::size_t>> simplices;
  pull(gens, tight, all, dim, simplices);

  Rational merged_volume = 0;
  for (const auto& s : simplices) {
    IntegerMatrix rows;
    for (std::size_t i : s) rows.push_back(gens[i]);
    merged_volume += slice_volume(rows, form);
  }
  return merged_volume == pieces_volume;
}

bool same_labeled_fan(const Fan& a, const Fan& b) {
  if (a.ambient_dim != b.ambient_dim) return false;
  const std::set<LatticeVector> rays_a(a.rays.begin(), a.rays.end());
  const std::set<LatticeVector> rays_b(b.rays.begin(), b.rays.end());
  if (rays_a != rays_b) return false;
  const auto by_label = [](const Fan& f) {
    std::map<Permutation, std::set<LatticeVector>> out;
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
      const auto rays = f.cone_rays(c);
      out[f.labels.at(c)] = std::set<LatticeVector>(rays.begin(), rays.end());
    }
    return out;
  };
  return a.max_cones.size() == b.max_cones.size() && by_label(a) == by_label(b);
}

nlohmann::ordered_json to_json(const Fan& f) {
  nlohmann::ordered_json j;
  j["ambient_dim"] = f.ambient_dim;
  j["space"] = f.space == SpaceTag::Flag ? "flag" : "grassmannian";
  nlohmann::ordered_json rays = nlohmann::ordered_json::array();
  for (const auto& r : f.rays) rays.push_back(to_json(r));
  j["rays"] = std::move(rays);
  nlohmann::ordered_json cones = nlohmann::ordered_json::array();
  for (const auto& c : f.max_cones) cones.push_back(c);
  j["max_cones"] = std::move(cones);
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (const auto& l : f.labels) labels.push_back(l.to_string());
  j["labels"] = std::move(labels);
  return j;
}

nlohmann::ordered_json to_json(const CartierOutcome& outcome, bool fano) {
  nlohmann::ordered_json j;
  const auto* data = std::get_if<CartierData>(&outcome);
  j["gorenstein"] = data != nullptr;
  j["fano"] = data != nullptr && fano;
  nlohmann::ordered_json ms = nlohmann::ordered_json::array();
  if (data) {
    for (const auto& m : data->per_cone_m) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (const auto& q : m) row.push_back(to_string(q));
      ms.push_back(std::move(row));
    }
  }
  j["m"] = std::move(ms);
  return j;
}

}  // namespace toricschubert
