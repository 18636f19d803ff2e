#include "frobcov/randlat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace frobcov {

HaarSample2D haar_from_parameters(double x, double y, double theta) {
  if (!(y > 0.0)) throw PreconditionError("tau must lie in the upper half plane");
  const double r = 1.0 / std::sqrt(y);
  const double rows[2][2] = {{r, 0.0}, {x * r, y * r}};
  const double c = std::cos(theta), s = std::sin(theta);
  std::vector<double> e(4);
  for (int i = 0; i < 2; ++i) {
    e[2 * i] = rows[i][0] * c - rows[i][1] * s;
    e[2 * i + 1] = rows[i][0] * s + rows[i][1] * c;
  }
  return HaarSample2D{x, y, theta, FloatBasis(2, std::move(e))};
}

HaarSample2D sample_haar_2d(CounterRng& rng) {
  const double y0 = std::sqrt(3.0) / 2.0;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const double x = rng.uniform() - 0.5;
    // Inverse CDF of the density proportional to y^-2 on [y0, inf).
    const double y = y0 / rng.uniform_open();
    if (x * x + y * y < 1.0) continue;
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    return haar_from_parameters(x, y, theta);
  }
  throw InternalError("rejection stall");
}

std::string to_string(FrameMethod m) {
  return m == FrameMethod::GramSchmidt ? "gram-schmidt" : "gram-schmidt-reversed";
}

FrameMethod parse_frame_method(const std::string& s) {
  if (s == "gram-schmidt") return FrameMethod::GramSchmidt;
  if (s == "gram-schmidt-reversed") return FrameMethod::GramSchmidtReversed;
  throw PreconditionError("unknown frame method '" + s + "'");
}

std::vector<double> frame(std::span<const double> a_hat, FrameMethod method) {
  const std::size_t d = a_hat.size();
  if (d < 2) throw PreconditionError("frame needs dimension >= 2");
  double norm2 = 0.0;
  for (double v : a_hat) norm2 += v * v;
  if (norm2 == 0.0) throw PreconditionError("frame of the zero vector");
  if (std::fabs(std::sqrt(norm2) - 1.0) > 1e-12) throw PreconditionError("frame needs a unit vector");

  std::size_t skip = 0;
  for (std::size_t i = 1; i < d; ++i) {
    const bool larger = std::fabs(a_hat[i]) > std::fabs(a_hat[skip]);
    const bool tie_later = std::fabs(a_hat[i]) == std::fabs(a_hat[skip]) &&
                           method == FrameMethod::GramSchmidtReversed;
    if (larger || tie_later) skip = i;
  }
  std::vector<std::vector<double>> q{std::vector<double>(a_hat.begin(), a_hat.end())};
  std::vector<std::size_t> order(d);
  for (std::size_t i = 0; i < d; ++i) order[i] = i;
  if (method == FrameMethod::GramSchmidtReversed) std::reverse(order.begin(), order.end());
  for (std::size_t axis : order) {
    if (axis == skip) continue;
    std::vector<double> v(d, 0.0);
    v[axis] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : q) {
        double c = 0.0;
        for (std::size_t k = 0; k < d; ++k) c += u[k] * v[k];
        for (std::size_t k = 0; k < d; ++k) v[k] -= c * u[k];
      }
    }
    double nv = 0.0;
    for (double x : v) nv += x * x;
    nv = std::sqrt(nv);
    for (double& x : v) x /= nv;
    q.push_back(std::move(v));
  }
  // Columns: completed vectors in processing order, then a_hat.
  std::vector<double> K(d * d);
  for (std::size_t col = 0; col + 1 < d; ++col) {
    for (std::size_t r = 0; r < d; ++r) K[r * d + col] = q[col + 1][r];
  }
  for (std::size_t r = 0; r < d; ++r) K[r * d + d - 1] = a_hat[r];
  return K;
}

SchmidtSample schmidt_from_vector(std::span<const Int> a, FrameMethod method) {
  const std::size_t d = a.size();
  if (d < 2) throw PreconditionError("Schmidt lattice needs d >= 2");
  const IntMatrix kernel = kernel_sublattice(a);
  double norm2 = 0.0;
  for (Int v : a) norm2 += static_cast<double>(v) * static_cast<double>(v);
  const double norm = std::sqrt(norm2);
  std::vector<double> a_hat(d);
  for (std::size_t i = 0; i < d; ++i) a_hat[i] = static_cast<double>(a[i]) / norm;
  const std::vector<double> K = frame(a_hat, method);
  const double scale = std::pow(norm, -1.0 / static_cast<double>(d - 1));
  const std::size_t n = d - 1;
  std::vector<double> e(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      double s = 0.0;
      for (std::size_t k = 0; k < d; ++k) s += static_cast<double>(kernel[r][k]) * K[k * d + c];
      e[r * n + c] = s * scale;
    }
  }
  return SchmidtSample{IntVec(a.begin(), a.end()), FloatBasis(n, std::move(e))};
}

SchmidtSample sample_schmidt(int d, Int norm_scale, CounterRng& rng, FrameMethod method) {
  if (d < 3) throw PreconditionError("Schmidt sampler needs d >= 3");
  if (norm_scale < 1000) throw PreconditionError("Schmidt sampler needs norm scale >= 1000");
  const Wide n2 = Wide(norm_scale) * norm_scale;
  IntVec a(static_cast<std::size_t>(d));
  while (true) {
    Wide s = 0;
    for (auto& v : a) {
      v = rng.uniform_int(-norm_scale, norm_scale);
      s += Wide(v) * v;
    }
    if (s == 0 || s > n2) continue;
    if (gcd_of(a) != 1) continue;
    return schmidt_from_vector(a, method);
  }
}

}  // namespace frobcov
