#pragma once

#include <span>
#include <string>
#include <vector>

#include "frobcov/lattice.hpp"
#include "frobcov/rng.hpp"

namespace frobcov {

/// A Haar-random unit-covolume 2-D lattice: tau = x + iy in the modular
/// fundamental domain and a rotation angle theta.
struct HaarSample2D {
  double x = 0.0;
  double y = 1.0;
  double theta = 0.0;
  /// (1/sqrt(y)) * {(1, 0), (x, y)}, rows rotated by theta.
  FloatBasis basis;
};

HaarSample2D haar_from_parameters(double x, double y, double theta);

/// Draws (x, y) with density (3/pi) y^-2 on {|x| <= 1/2, x^2 + y^2 >= 1} by
/// rejection from {|x| <= 1/2, y >= sqrt(3)/2} and theta uniform on [0, 2 pi).
HaarSample2D sample_haar_2d(CounterRng& rng);

/// Orthonormal frame completions of a unit vector. Both are Gram-Schmidt
/// completions that skip the coordinate axis most parallel to a_hat; they
/// differ in the order the remaining axes are processed.
enum class FrameMethod { GramSchmidt, GramSchmidtReversed };

std::string to_string(FrameMethod m);
FrameMethod parse_frame_method(const std::string& s);

/// Row-major d x d orthogonal matrix K with a_hat K = (0, ..., 0, 1), i.e.
/// the last column is a_hat. frame(e_d) is the identity and frame(-e_d) is
/// diag(1, ..., 1, -1). Continuous off the seams where the largest |a_hat_i|
/// changes index.
std::vector<double> frame(std::span<const double> a_hat, FrameMethod method = FrameMethod::GramSchmidt);

struct SchmidtSample {
  IntVec a;
  /// (d-1) x (d-1) unit-covolume basis of the kernel lattice of a, written in
  /// the frame's coordinates of a-perp and scaled by |a|^(-1/(d-1)).
  FloatBasis basis;
};

SchmidtSample schmidt_from_vector(std::span<const Int> a, FrameMethod method = FrameMethod::GramSchmidt);

/// a uniform among primitive integer vectors with |a| <= norm_scale, d >= 3,
/// norm_scale >= 1000.
SchmidtSample sample_schmidt(int d, Int norm_scale, CounterRng& rng,
                             FrameMethod method = FrameMethod::GramSchmidt);

}  // namespace frobcov
