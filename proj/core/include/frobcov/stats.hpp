#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobcov/bridge.hpp"
#include "frobcov/intvec.hpp"
#include "frobcov/randlat.hpp"

namespace frobcov {

/// Empirical survival function R -> fraction of samples strictly above R.
/// Non-increasing and right-continuous.
class SurvivalCurve {
 public:
  SurvivalCurve() = default;
  explicit SurvivalCurve(std::vector<double> samples);

  double operator()(double R) const;

  std::size_t size() const { return sorted_.size(); }
  bool empty() const { return sorted_.empty(); }
  std::span<const double> samples() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

/// sup_R |c1(R) - c2(R)|, attained at a pooled sample point.
double ks_distance(const SurvivalCurve& c1, const SurvivalCurve& c2);

/// Largest fraction of samples sharing one value (the biggest jump).
double continuity_smoke(const SurvivalCurve& curve);

/// Frobenius-side estimator of Psi_d over primitive a >= 2 in T * domain.
struct FrobeniusPsi {
  SurvivalCurve curve;
  std::size_t count = 0;
  /// primitive_density(domain, T), an estimator of 1/zeta(d).
  double density = 0.0;
  double density_reference = 0.0;
  /// Fraction of points with some a_i < corner_eta * T.
  double corner_fraction = 0.0;
};

FrobeniusPsi psi_from_frobenius(int d, Int T, const Box& domain,
                                Statistic statistic = Statistic::Shifted,
                                double corner_eta = 0.05);

enum class LatticeSource { Haar2D, Schmidt };

std::string to_string(LatticeSource s);
LatticeSource parse_lattice_source(const std::string& s);

struct LatticePsiOptions {
  int d = 3;
  std::size_t count = 10000;
  LatticeSource source = LatticeSource::Haar2D;
  std::uint64_t seed = 1;
  Int schmidt_norm = 100000;
  FrameMethod frame = FrameMethod::GramSchmidt;
};

/// Lattice-side estimator of Psi_d: covering radii of `count` random
/// unit-covolume lattices. Sample i draws from stream (seed, i), so the
/// result does not depend on thread count.
struct LatticePsi {
  SurvivalCurve curve;
  std::size_t boundary_degenerate = 0;
};

LatticePsi psi_from_lattices(const LatticePsiOptions& options);

/// Everything needed to reproduce a run, plus its headline numbers.
struct ExperimentReport {
  std::string source;
  int d = 3;
  Int T = 0;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  std::string domain;
  std::string statistic;
  Int schmidt_norm = 0;
  std::string frame;
  SurvivalCurve curve;
  std::optional<double> ks_against;
  std::size_t primitive_count = 0;
  double density = 0.0;
  double density_reference = 0.0;
  double corner_fraction = 0.0;
  std::size_t boundary_degenerate = 0;
};

}  // namespace frobcov
