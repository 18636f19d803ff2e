#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "frobcov/common.hpp"
#include "frobcov/rational.hpp"

namespace frobcov {

/// Integer matrix stored as a list of rows.
using IntMatrix = std::vector<IntVec>;

Int gcd_of(std::span<const Int> v);

/// True iff the coordinates of `v` have gcd 1. Throws on the zero vector.
bool is_primitive(std::span<const Int> v);

/// Axis-aligned box with rational corners.
struct Box {
  std::vector<Rational> lower;
  std::vector<Rational> upper;

  static Box unit_cube(std::size_t d);
  /// Parses "l1,u1;l2,u2;..." (entries may be "p/q" or decimals).
  static Box parse(const std::string& text);

  std::size_t dim() const { return lower.size(); }
  Rational volume() const;
  /// All coordinate intervals coincide, so the box is invariant under
  /// coordinate permutations.
  bool permutation_symmetric() const;
  std::string to_string() const;
};

/// Calls `visit` for every primitive integer point of T*domain, in
/// lexicographic order. With `floor2` only points with all coordinates >= 2
/// are visited.
void for_each_primitive(const Box& domain, Int T, bool floor2,
                        const std::function<void(std::span<const Int>)>& visit);

std::vector<IntVec> enumerate_primitive(const Box& domain, Int T, bool floor2);

std::size_t count_primitive(const Box& domain, Int T, bool floor2);

/// Primitive points of the half-open box prod (T l_i, T u_i] divided by
/// T^d vol(domain); tends to 1/zeta(d). Half-open cells tile space, so the
/// faces of the box are not double counted.
double primitive_density(const Box& domain, Int T);

/// Riemann zeta at an integer argument d >= 2.
double zeta(int d);

/// A point p/q of the (d-1)-dimensional Farey sequence.
struct FareyPoint {
  IntVec p;
  Int q = 1;

  std::vector<double> value() const;
  friend bool operator==(const FareyPoint&, const FareyPoint&) = default;
};

/// Streams the Farey points with denominator <= Q, ordered by q and then
/// lexicographically in p.
void for_each_farey(Int Q, int d, const std::function<void(const FareyPoint&)>& visit);

inline constexpr double kDefaultFareyCap = 1e8;

/// Materializes the Farey sequence. Throws PreconditionError when the
/// expected size Q^d/(d zeta(d)) exceeds `cap`; use for_each_farey then.
std::vector<FareyPoint> farey_sequence(Int Q, int d, double cap = kDefaultFareyCap);

/// Leading asymptotic Q^d / (d zeta(d)) of the Farey sequence size.
double farey_asymptotic_size(Int Q, int d);

/// Row-style Hermite normal form of the lattice generated by `rows`:
/// upper triangular, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& rows);

/// Pairwise size reduction of a basis (Lagrange/Gauss reduction when there
/// are two rows). The lattice spanned is unchanged.
IntMatrix reduce_basis(IntMatrix rows);

/// Basis of {m in Z^d : m.a = 0}, computed by extended-gcd column reduction.
IntMatrix kernel_sublattice(std::span<const Int> a);

/// Basis (Hermite normal form) of L_a = {m in Z^{d-1} : m.a' = 0 mod a_d}
/// where a = (a', a_d).
IntMatrix residue_sublattice(std::span<const Int> a);

/// Exact determinant of a square integer matrix (Bareiss elimination).
mpz_class determinant(const IntMatrix& m);

/// Exact Gram determinant det(B B^T) of the rows of `b`.
mpz_class gram_determinant(const IntMatrix& b);

}  // namespace frobcov
