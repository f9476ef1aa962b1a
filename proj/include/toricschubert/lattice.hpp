#pragma once

// Exact integer/rational linear algebra and polyhedral cone primitives.
// Nothing here touches floating point.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace toricschubert {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using LatticeVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;
/// Row-major.
using IntegerMatrix = std::vector<LatticeVector>;

/// Hard cap on ambient dimension for the double description routines.
inline constexpr std::size_t kDeskScaleDim = 12;

LatticeVector lattice_vector(std::initializer_list<long long> coords);

Integer dot(const LatticeVector& a, const LatticeVector& b);
Rational dot(const LatticeVector& a, const RationalVector& b);

LatticeVector add(const LatticeVector& a, const LatticeVector& b);
LatticeVector negate(const LatticeVector& a);
bool is_zero(const LatticeVector& v);

/// Divides by the gcd of the entries; throws ZeroVector on 0.
LatticeVector primitive(const LatticeVector& v);

std::size_t rank(const IntegerMatrix& rows);
Integer determinant(const IntegerMatrix& square);

/// Solves A m = b over Q by fraction-free elimination with first-nonzero
/// pivoting; free variables are set to 0. Returns nullopt when inconsistent.
std::optional<RationalVector> solve_exact(const IntegerMatrix& a, const LatticeVector& b);

/// Primitive integer basis of {x : rows * x = 0}.
std::vector<LatticeVector> integer_nullspace(const IntegerMatrix& rows, std::size_t dim);

/// Extreme rays of {t : <a, t> >= 0 for all constraint rows a}. The
/// constraints must span R^dim, which makes the cone pointed.
std::vector<LatticeVector> dd_vrep(const IntegerMatrix& constraints, std::size_t dim);

/// Inward facet normals of cone(generators), primitive and sorted. Cones
/// that are not full-dimensional additionally get +/- each basis vector of
/// the orthogonal complement of their span, after the facets.
std::vector<LatticeVector> dd_hrep(const std::vector<LatticeVector>& generators, std::size_t dim);

/// Minimal generating subset (after primitivization and deduplication), in
/// input order.
std::vector<LatticeVector> extremal_generators(const std::vector<LatticeVector>& generators, std::size_t dim);

/// Polyhedral cone with extremal, primitive, canonically sorted generators
/// and its H-representation computed once at construction.
class Cone {
 public:
  Cone(const std::vector<LatticeVector>& generators, std::size_t ambient_dim);

  const std::vector<LatticeVector>& generators() const noexcept { return generators_; }
  /// Facet normals followed by equality pairs; <h, p> >= 0 for every row
  /// exactly on the cone.
  const std::vector<LatticeVector>& hrep() const noexcept { return hrep_; }
  std::span<const LatticeVector> facets() const noexcept { return {hrep_.data(), facet_count_}; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  /// Dimension of the linear span.
  std::size_t dimension() const noexcept { return dimension_; }

 private:
  std::vector<LatticeVector> generators_;
  std::vector<LatticeVector> hrep_;
  std::size_t facet_count_ = 0;
  std::size_t ambient_dim_ = 0;
  std::size_t dimension_ = 0;
};

bool cone_contains(const Cone& c, const LatticeVector& p);
bool cone_contains(const Cone& c, const RationalVector& p);

bool is_simplicial(const Cone& c);
/// Simplicial, full-dimensional and |det| = 1.
bool is_unimodular(const Cone& c);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

nlohmann::ordered_json to_json(const LatticeVector& v);

}  // namespace toricschubert
