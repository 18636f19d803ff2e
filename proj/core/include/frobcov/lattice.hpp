#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "frobcov/common.hpp"
#include "frobcov/intvec.hpp"
#include "frobcov/rational.hpp"

namespace frobcov {

/// Full-rank n x n lattice basis; each row is a generator. `S` is either
/// Rational (exact flavor) or double (floating flavor).
template <class S>
class LatticeBasis {
 public:
  LatticeBasis() = default;
  /// Row-major entries; throws PreconditionError on a size mismatch.
  LatticeBasis(std::size_t n, std::vector<S> entries);

  static LatticeBasis identity(std::size_t n);
  static LatticeBasis from_rows(const std::vector<std::vector<S>>& rows);

  std::size_t dim() const { return n_; }
  const S& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  S& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  std::vector<S> row(std::size_t i) const;
  const std::vector<S>& entries() const { return e_; }

  S determinant() const;
  S covolume() const;

  LatticeBasis scaled(const S& c) const;
  /// Right multiplication by diag(w).
  LatticeBasis column_scaled(std::span<const S> w) const;
  /// The lattice point sum_i c_i * row_i.
  std::vector<S> point(std::span<const Int> coeffs) const;

 private:
  std::size_t n_ = 0;
  std::vector<S> e_;
};

using ExactBasis = LatticeBasis<Rational>;
using FloatBasis = LatticeBasis<double>;

ExactBasis to_exact(const IntMatrix& rows);
FloatBasis to_float(const ExactBasis& b);
FloatBasis to_float(const IntMatrix& rows);

/// Lagrange-Gauss reduction of a 2-D basis; same lattice, nearly orthogonal rows.
template <class S>
LatticeBasis<S> gauss_reduce(LatticeBasis<S> b);

/// Textbook LLL (delta = 0.99) for small floating bases.
FloatBasis lll_reduce(FloatBasis b);

/// Reduced basis for any dimension: Gauss for n = 2, LLL above, identity map
/// for n = 1.
template <class S>
LatticeBasis<S> reduce(const LatticeBasis<S>& b);

/// Visits every lattice point x with lo - eps <= x <= hi + eps componentwise.
/// Coefficient ranges are found from a floating inverse with a safety margin
/// and every point is then filtered in the basis' own arithmetic.
template <class S>
void for_each_point_in_box(const LatticeBasis<S>& b, std::span<const S> lo, std::span<const S> hi,
                           const std::function<void(const std::vector<S>&)>& visit);

/// Parses "b11,b12;b21,b22" (rows separated by ';').
ExactBasis parse_basis(const std::string& text);

}  // namespace frobcov
