#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "frobcov/lattice.hpp"

namespace frobcov {

/// Covering radius of the standard simplex together with a deep-hole
/// certificate: the open simplex rho*Delta + zeta contains no lattice point,
/// and witnesses[i] lies in the relative interior of facet i of its closure
/// (facet i < n is {x_i = zeta_i}, the last facet is {x.e = zeta.e + rho}).
template <class S>
struct CoveringResult {
  S rho{};
  std::vector<S> zeta;
  std::vector<std::vector<S>> witnesses;
  /// Floating flavor only: some witness condition held only within eps.
  bool boundary_degenerate = false;
  /// Upper bound on rho that sized the enumeration window.
  S search_bound{};
  /// Window enlargements; the window is certified, so this stays 0 unless a
  /// numerical inconsistency forced a retry.
  int retries = 0;
  std::size_t points_examined = 0;
};

/// Exact covering radius of Delta = {x, y >= 0, x + y <= 1} with respect to
/// the lattice spanned by the rows of a 2-D basis.
///
/// One witness is translated to the origin on the facet x = 0. Every lattice
/// point v2 with x > 0, y < 0 fixes the bottom facet y = v2.y; the largest
/// lattice-free simplex with that corner has its hypotenuse on the lattice
/// point of least coordinate sum in the open quadrant {x > 0, y > v2.y}.
/// The answer is the largest such size whose three witnesses sit in the
/// relative interiors of their facets. All lattice points needed live in the
/// window [0, B] x [-B, B] where B, the bounding-box perimeter half of a
/// reduced fundamental cell, is a certified upper bound on rho.
/// Ties are broken by the lexicographically smallest (v2, v3).
template <class S>
CoveringResult<S> covering_radius_exact_2d(const LatticeBasis<S>& basis);

/// Covering radius of [0, 1] with respect to gZ, which is g.
double covering_radius_1d(double g);
Rational covering_radius_1d(const Rational& g);

/// Certificate form of the 1-D case: zeta = 0, witnesses 0 and g.
template <class S>
CoveringResult<S> covering_result_1d(const S& g);

/// Grid lower bound on the covering radius in any dimension.
struct GridResult {
  double value = 0.0;
  std::vector<double> zeta;
  int grid_n = 0;
  /// Sum of |entries| of the basis the grid was laid on; exact - value is at
  /// most lipschitz / grid_n.
  double lipschitz = 0.0;
  double gap_bound = 0.0;
};

/// Maximizes g(zeta) = min{ w.e : w in (Z^n + zeta) L, w >= 0 } over the grid
/// zeta in {0, 1/N, ..., (N-1)/N}^n, on an (LLL-)reduced basis of the lattice.
/// The result never exceeds the covering radius and is within
/// lipschitz / grid_n of it.
GridResult covering_radius_grid(const FloatBasis& basis, int grid_n);

/// Covering radius of the weighted simplex {x >= 0 : x.w <= 1} with respect
/// to an integer lattice, via rho(Delta; L diag(w)). n = 1 or 2 only.
CoveringResult<Rational> covering_radius_weighted(const IntMatrix& basis, std::span<const Int> w);

struct CoveringCheck {
  bool ok = true;
  std::string failure;
};

/// Re-verifies a certificate by independent enumeration of the lattice
/// points in the bounding box of the simplex: the open simplex must be empty
/// and each witness must be a lattice point in its facet's relative interior.
/// Exact for Rational; within `tol` for double.
template <class S>
CoveringCheck verify_covering(const LatticeBasis<S>& basis, const CoveringResult<S>& result,
                              double tol = 1e-9);

}  // namespace frobcov
