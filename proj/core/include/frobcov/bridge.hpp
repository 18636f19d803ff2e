#pragma once

#include <optional>
#include <span>
#include <string>

#include "frobcov/covering.hpp"
#include "frobcov/frobenius.hpp"

namespace frobcov {

/// Which normalization of the Frobenius number to report.
///   raw:     F / (a_1 ... a_d)^(1/(d-1))
///   shifted: (F + a_1 + ... + a_d) / (a_1 ... a_d)^(1/(d-1))
enum class Statistic { Shifted, Raw };

std::string to_string(Statistic s);
Statistic parse_statistic(const std::string& s);

enum class BridgeQuality { Exact, GridLowerBound };

std::string to_string(BridgeQuality q);

/// Frobenius number and the covering radius of the weighted simplex
/// {x >= 0 : x.a' <= 1} with respect to L_a = {m : m.a' = 0 mod a_d}.
/// For exact results F + sum(a) == rho_w.
struct BridgeResult {
  IntVec a;
  Int F = 0;
  /// Covering side, present when quality == Exact (d <= 3).
  std::optional<Int> rho_w;
  /// Grid lower bound of the weighted covering radius (d >= 4 only).
  double rho_w_lower = 0.0;
  double scaled_raw = 0.0;
  double scaled_shifted = 0.0;
  BridgeQuality quality = BridgeQuality::Exact;
  FloatBasis normalized;
};

/// (a_1 ... a_d)^(1/(d-1)), computed exactly for d = 2 and with sqrt for d = 3.
double frobenius_normalizer(std::span<const Int> a);

double scaled_frobenius(std::span<const Int> a, Int F, Statistic s);

/// (a_1 ... a_d)^(-1/(d-1)) L_a diag(a'): unit covolume, and its simplex
/// covering radius equals the shifted statistic of a.
FloatBasis normalized_lattice(std::span<const Int> a);

/// Computes both sides and checks the identity F + sum(a) == rho_w exactly
/// (InternalError "bridge identity violated" otherwise). d = 2, 3 are exact;
/// d >= 4 falls back to a grid lower bound at resolution `grid_n`, flagged
/// GridLowerBound.
BridgeResult bridge(std::span<const Int> a, int grid_n = 12);

}  // namespace frobcov
