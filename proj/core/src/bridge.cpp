#include "frobcov/bridge.hpp"

#include <cmath>
#include <numeric>

#include "frobcov/intvec.hpp"

namespace frobcov {
namespace {

void check_bridge_input(std::span<const Int> a) {
  if (a.size() < 2) throw PreconditionError("bridge needs d >= 2");
  for (Int x : a) {
    if (x < 2) throw PreconditionError("bridge input needs every coordinate >= 2");
  }
  if (gcd_of(a) != 1) throw PreconditionError("bridge input must be primitive (gcd 1)");
}

}  // namespace

std::string to_string(Statistic s) { return s == Statistic::Shifted ? "shifted" : "raw"; }

Statistic parse_statistic(const std::string& s) {
  if (s == "shifted") return Statistic::Shifted;
  if (s == "raw") return Statistic::Raw;
  throw PreconditionError("unknown statistic variant '" + s + "'");
}

std::string to_string(BridgeQuality q) {
  return q == BridgeQuality::Exact ? "exact" : "grid-lower-bound";
}

double frobenius_normalizer(std::span<const Int> a) {
  double prod = 1.0;
  for (Int x : a) prod *= static_cast<double>(x);
  const std::size_t d = a.size();
  if (d == 2) return prod;
  if (d == 3) return std::sqrt(prod);
  return std::pow(prod, 1.0 / static_cast<double>(d - 1));
}

double scaled_frobenius(std::span<const Int> a, Int F, Statistic s) {
  Int num = F;
  if (s == Statistic::Shifted) num += std::accumulate(a.begin(), a.end(), Int{0});
  return static_cast<double>(num) / frobenius_normalizer(a);
}

FloatBasis normalized_lattice(std::span<const Int> a) {
  check_bridge_input(a);
  const IntMatrix L = residue_sublattice(a);
  const std::size_t n = a.size() - 1;
  std::vector<double> w(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n));
  const double scale = 1.0 / frobenius_normalizer(a);
  return to_float(L).column_scaled(w).scaled(scale);
}

BridgeResult bridge(std::span<const Int> a, int grid_n) {
  check_bridge_input(a);
  BridgeResult out;
  out.a.assign(a.begin(), a.end());
  const std::size_t d = a.size();
  out.F = d == 2 ? frobenius_sylvester(a[0], a[1]) : frobenius(a).F;
  const Int shifted = out.F + std::accumulate(a.begin(), a.end(), Int{0});
  out.normalized = normalized_lattice(a);
  out.scaled_raw = scaled_frobenius(a, out.F, Statistic::Raw);
  out.scaled_shifted = scaled_frobenius(a, out.F, Statistic::Shifted);

  if (d <= 3) {
    const IntMatrix L = residue_sublattice(a);
    const CoveringResult<Rational> cov = covering_radius_weighted(L, a.first(d - 1));
    if (cov.rho.get_den() != 1 || !cov.rho.get_num().fits_slong_p()) {
      throw InternalError("bridge identity violated: non-integral weighted covering radius");
    }
    out.rho_w = cov.rho.get_num().get_si();
    out.quality = BridgeQuality::Exact;
    if (*out.rho_w != shifted) throw InternalError("bridge identity violated");
  } else {
    const GridResult g = covering_radius_grid(out.normalized, grid_n);
    out.rho_w_lower = g.value * frobenius_normalizer(a);
    out.quality = BridgeQuality::GridLowerBound;
    if (out.rho_w_lower > static_cast<double>(shifted) * (1.0 + 1e-9)) {
      throw InternalError("bridge identity violated: grid bound exceeds F + sum(a)");
    }
  }
  return out;
}

}  // namespace frobcov
