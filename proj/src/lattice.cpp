#include "toricschubert/lattice.hpp"

#include <algorithm>
#include <limits>

#include <boost/dynamic_bitset.hpp>

#include "toricschubert/errors.hpp"

namespace toricschubert {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::numerator;

LatticeVector lattice_vector(std::initializer_list<long long> coords) {
  LatticeVector out;
  out.reserve(coords.size());
  for (long long c : coords) out.emplace_back(c);
  return out;
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product of mismatched vectors");
  Integer sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Rational dot(const LatticeVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product of mismatched vectors");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += Rational(a[i]) * b[i];
  return sum;
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "adding mismatched vectors");
  LatticeVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

LatticeVector negate(const LatticeVector& a) {
  LatticeVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

bool is_zero(const LatticeVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

LatticeVector primitive(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, abs(x));
  if (g == 0) throw Error(ErrorCode::ZeroVector, "cannot primitivize the zero vector");
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

namespace {

struct Echelon {
  IntegerMatrix m;
  std::vector<std::size_t> pivot_cols;
  int sign = 1;
};

// Fraction-free (Bareiss) row echelon form, pivoting only in the first
// `elim_cols` columns; every column is updated. Entries stay integral
// because each one is a minor of the input.
Echelon bareiss(IntegerMatrix m, std::size_t elim_cols) {
  Echelon e;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < elim_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      e.sign = -e.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

std::size_t width(const IntegerMatrix& rows) { return rows.empty() ? 0 : rows.front().size(); }

// Smallest positive integer multiple of a rational vector.
LatticeVector clear_denominators(const RationalVector& v) {
  Integer l = 1;
  for (const auto& q : v) {
    const Integer den = denominator(q);
    l = l / gcd(l, den) * den;
  }
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = numerator(v[i]) * (l / denominator(v[i]));
  return out;
}

bool lex_less(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Primitive, nonzero, deduplicated, in first-occurrence order.
std::vector<LatticeVector> normalize_generators(const std::vector<LatticeVector>& gens, std::size_t dim) {
  std::vector<LatticeVector> out;
  for (const auto& g : gens) {
    if (g.size() != dim) throw Error(ErrorCode::DimensionMismatch, "generator has the wrong dimension");
    if (is_zero(g)) continue;
    LatticeVector p = primitive(g);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

struct HRep {
  std::vector<LatticeVector> facets;
  std::vector<LatticeVector> equalities;
  std::size_t span_dim = 0;
};

// `gens` must already be normalized.
HRep compute_hrep(std::vector<LatticeVector> gens, std::size_t dim) {
  if (dim > kDeskScaleDim) {
    throw Error(ErrorCode::DeskScaleExceeded, "ambient dimension " + std::to_string(dim) + " exceeds " +
                                                  std::to_string(kDeskScaleDim));
  }
  std::sort(gens.begin(), gens.end(), lex_less);
  HRep h;
  h.span_dim = rank(gens);
  const std::size_t r = h.span_dim;

  if (r == dim) {
    h.facets = dd_vrep(gens, dim);
  } else if (r > 0) {
    // Work in coordinates t with h = B^T t, where B holds r independent
    // generators; the constraint for g becomes <B g, t> >= 0.
    IntegerMatrix basis;
    for (const auto& g : gens) {
      IntegerMatrix trial = basis;
      trial.push_back(g);
      if (rank(trial) > basis.size()) basis = std::move(trial);
      if (basis.size() == r) break;
    }
    IntegerMatrix constraints;
    for (const auto& g : gens) {
      LatticeVector a(r);
      for (std::size_t i = 0; i < r; ++i) a[i] = dot(basis[i], g);
      constraints.push_back(std::move(a));
    }
    for (const auto& t : dd_vrep(constraints, r)) {
      LatticeVector normal(dim, Integer(0));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < dim; ++k) normal[k] += t[i] * basis[i][k];
      }
      h.facets.push_back(primitive(normal));
    }
  }
  if (rank(h.facets) < r) throw Error(ErrorCode::NotPointed, "cone contains a line");
  std::sort(h.facets.begin(), h.facets.end(), lex_less);

  if (r < dim) {
    if (r == 0) {
      for (std::size_t i = 0; i < dim; ++i) {
        LatticeVector e(dim, Integer(0));
        e[i] = 1;
        h.equalities.push_back(e);
        h.equalities.push_back(negate(e));
      }
    } else {
      for (const auto& e : integer_nullspace(gens, dim)) {
        h.equalities.push_back(e);
        h.equalities.push_back(negate(e));
      }
    }
  }
  return h;
}

std::vector<bool> extremal_mask(const std::vector<LatticeVector>& gens, const HRep& h) {
  std::vector<bool> keep(gens.size(), false);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    IntegerMatrix tight;
    for (const auto& f : h.facets) {
      if (dot(f, gens[i]) == 0) tight.push_back(f);
    }
    keep[i] = rank(tight) + 1 == h.span_dim;
  }
  return keep;
}

}  // namespace

std::size_t rank(const IntegerMatrix& rows) {
  if (rows.empty()) return 0;
  return bareiss(rows, width(rows)).pivot_cols.size();
}

Integer determinant(const IntegerMatrix& square) {
  const std::size_t n = square.size();
  if (n == 0) return 1;
  for (const auto& row : square) {
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  }
  Echelon e = bareiss(square, n);
  if (e.pivot_cols.size() < n) return 0;
  return e.sign * e.m[n - 1][n - 1];
}

std::optional<RationalVector> solve_exact(const IntegerMatrix& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs from row count");
  const std::size_t cols = width(a);
  IntegerMatrix aug;
  aug.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
    LatticeVector row = a[i];
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  Echelon e = bareiss(std::move(aug), cols);
  const std::size_t r = e.pivot_cols.size();
  for (std::size_t i = r; i < e.m.size(); ++i) {
    if (e.m[i][cols] != 0) return std::nullopt;
  }
  RationalVector x(cols, Rational(0));
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t pc = e.pivot_cols[k];
    Rational acc = Rational(e.m[k][cols]);
    for (std::size_t j = pc + 1; j < cols; ++j) acc -= Rational(e.m[k][j]) * x[j];
    x[pc] = acc / Rational(e.m[k][pc]);
  }
  return x;
}

std::vector<LatticeVector> integer_nullspace(const IntegerMatrix& rows, std::size_t dim) {
  std::vector<RationalVector> m;
  for (const auto& row : rows) {
    if (row.size() != dim) throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
    m.emplace_back(row.begin(), row.end());
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational factor = m[i][c];
      for (std::size_t j = 0; j < dim; ++j) m[i][j] -= factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<LatticeVector> basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    RationalVector x(dim, Rational(0));
    x[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -m[k][f];
    basis.push_back(primitive(clear_denominators(x)));
  }
  return basis;
}

std::vector<LatticeVector> dd_vrep(const IntegerMatrix& constraints, std::size_t dim) {
  if (dim == 0) return {};
  if (dim > kDeskScaleDim) throw Error(ErrorCode::DeskScaleExceeded, "double description above desk scale");

  // Initial simplicial cone from the first independent constraints.
  std::vector<std::size_t> order;
  IntegerMatrix initial;
  for (std::size_t i = 0; i < constraints.size() && initial.size() < dim; ++i) {
    if (constraints[i].size() != dim) throw Error(ErrorCode::DimensionMismatch, "constraint has the wrong dimension");
    IntegerMatrix trial = initial;
    trial.push_back(constraints[i]);
    if (rank(trial) > initial.size()) {
      initial = std::move(trial);
      order.push_back(i);
    }
  }
  if (initial.size() < dim) throw Error(ErrorCode::InvalidParam, "constraints do not span the ambient space");
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (std::find(order.begin(), order.end(), i) == order.end() && !is_zero(constraints[i])) order.push_back(i);
  }

  struct Ray {
    LatticeVector v;
    boost::dynamic_bitset<> zeros;
  };
  const std::size_t total = constraints.size();
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    LatticeVector unit(dim, Integer(0));
    unit[k] = 1;
    Ray ray{primitive(clear_denominators(*solve_exact(initial, unit))), boost::dynamic_bitset<>(total)};
    for (std::size_t j = 0; j < dim; ++j) {
      if (j != k) ray.zeros.set(order[j]);
    }
    rays.push_back(std::move(ray));
  }

  for (std::size_t step = dim; step < order.size(); ++step) {
    const LatticeVector& a = constraints[order[step]];
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> plus;
    std::vector<std::size_t> minus;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(a, rays[i].v);
      if (value[i] > 0) plus.push_back(i);
      if (value[i] < 0) minus.push_back(i);
    }
    if (minus.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (value[i] == 0) rays[i].zeros.set(order[step]);
      }
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t p : plus) {
      for (std::size_t q : minus) {
        const boost::dynamic_bitset<> common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o != p && o != q && common.is_subset_of(rays[o].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        LatticeVector combo(dim);
        for (std::size_t k = 0; k < dim; ++k) combo[k] = value[p] * rays[q].v[k] - value[q] * rays[p].v[k];
        Ray ray{primitive(combo), common};
        ray.zeros.set(order[step]);
        next.push_back(std::move(ray));
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] > 0) next.push_back(std::move(rays[i]));
      if (value[i] == 0) {
        rays[i].zeros.set(order[step]);
        next.push_back(std::move(rays[i]));
      }
    }
    rays = std::move(next);
  }

  std::vector<LatticeVector> out;
  out.reserve(rays.size());
  for (auto& ray : rays) out.push_back(std::move(ray.v));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<LatticeVector> dd_hrep(const std::vector<LatticeVector>& generators, std::size_t dim) {
  HRep h = compute_hrep(normalize_generators(generators, dim), dim);
  std::vector<LatticeVector> out = std::move(h.facets);
  out.insert(out.end(), h.equalities.begin(), h.equalities.end());
  return out;
}

std::vector<LatticeVector> extremal_generators(const std::vector<LatticeVector>& generators, std::size_t dim) {
  std::vector<LatticeVector> gens = normalize_generators(generators, dim);
  const HRep h = compute_hrep(gens, dim);
  const std::vector<bool> keep = extremal_mask(gens, h);
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (keep[i]) out.push_back(std::move(gens[i]));
  }
  return out;
}

Cone::Cone(const std::vector<LatticeVector>& generators, std::size_t ambient_dim) : ambient_dim_(ambient_dim) {
  std::vector<LatticeVector> gens = normalize_generators(generators, ambient_dim);
  HRep h = compute_hrep(gens, ambient_dim);
  const std::vector<bool> keep = extremal_mask(gens, h);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (keep[i]) generators_.push_back(std::move(gens[i]));
  }
  std::sort(generators_.begin(), generators_.end(), lex_less);
  dimension_ = h.span_dim;
  facet_count_ = h.facets.size();
  hrep_ = std::move(h.facets);
  hrep_.insert(hrep_.end(), h.equalities.begin(), h.equalities.end());
}

bool cone_contains(const Cone& c, const LatticeVector& p) {
  if (p.size() != c.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "point and cone dimensions differ");
  return std::all_of(c.hrep().begin(), c.hrep().end(), [&](const LatticeVector& h) { return dot(h, p) >= 0; });
}

bool cone_contains(const Cone& c, const RationalVector& p) {
  if (p.size() != c.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "point and cone dimensions differ");
  return std::all_of(c.hrep().begin(), c.hrep().end(), [&](const LatticeVector& h) { return dot(h, p) >= 0; });
}

bool is_simplicial(const Cone& c) { return c.generators().size() == c.dimension(); }

bool is_unimodular(const Cone& c) {
  return is_simplicial(c) && c.dimension() == c.ambient_dim() && abs(determinant(c.generators())) == 1;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

nlohmann::ordered_json to_json(const LatticeVector& v) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& x : v) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min()) {
      throw Error(ErrorCode::InvalidParam, "coordinate exceeds 64-bit JSON range");
    }
    arr.push_back(x.convert_to<long long>());
  }
  return arr;
}

}  // namespace toricschubert
