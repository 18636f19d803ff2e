#include "frobcov/stats.hpp"

#include <algorithm>
#include <cmath>

#include "frobcov/covering.hpp"
#include "frobcov/frobenius.hpp"
#include "frobcov/parallel.hpp"

namespace frobcov {

SurvivalCurve::SurvivalCurve(std::vector<double> samples) : sorted_(std::move(samples)) {
  std::sort(sorted_.begin(), sorted_.end());
}

double SurvivalCurve::operator()(double R) const {
  if (sorted_.empty()) throw PreconditionError("survival curve has no samples");
  const auto above = sorted_.end() - std::upper_bound(sorted_.begin(), sorted_.end(), R);
  return static_cast<double>(above) / static_cast<double>(sorted_.size());
}

double ks_distance(const SurvivalCurve& c1, const SurvivalCurve& c2) {
  if (c1.empty() || c2.empty()) throw PreconditionError("ks_distance needs non-empty curves");
  const auto a = c1.samples();
  const auto b = c2.samples();
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double best = 0.0;
  // Walk the pooled sorted points; after consuming every sample <= R the
  // survival values are (n - consumed) / n.
  while (i < a.size() || j < b.size()) {
    double r;
    if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
      r = a[i];
    } else {
      r = b[j];
    }
    while (i < a.size() && a[i] <= r) ++i;
    while (j < b.size() && b[j] <= r) ++j;
    const double s1 = (na - static_cast<double>(i)) / na;
    const double s2 = (nb - static_cast<double>(j)) / nb;
    best = std::max(best, std::fabs(s1 - s2));
  }
  return best;
}

double continuity_smoke(const SurvivalCurve& curve) {
  if (curve.empty()) throw PreconditionError("continuity_smoke needs a non-empty curve");
  const auto s = curve.samples();
  std::size_t best = 0;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    best = std::max(best, j - i);
    i = j;
  }
  return static_cast<double>(best) / static_cast<double>(s.size());
}

FrobeniusPsi psi_from_frobenius(int d, Int T, const Box& domain, Statistic statistic,
                                double corner_eta) {
  if (d < 2) throw PreconditionError("psi_from_frobenius needs d >= 2");
  if (domain.dim() != static_cast<std::size_t>(d)) {
    throw PreconditionError("domain dimension does not match d");
  }
  std::vector<IntVec> points = enumerate_primitive(domain, T, /*floor2=*/true);
  if (points.empty()) throw PreconditionError("empty enumeration: no primitive a >= 2 in T*domain");

  std::vector<double> values(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    const IntVec& a = points[i];
    const Int F = d == 2 ? frobenius_sylvester(a[0], a[1]) : frobenius(a).F;
    values[i] = scaled_frobenius(a, F, statistic);
  });

  FrobeniusPsi out;
  out.count = points.size();
  const double corner = corner_eta * static_cast<double>(T);
  std::size_t in_corner = 0;
  for (const auto& a : points) {
    if (static_cast<double>(*std::min_element(a.begin(), a.end())) < corner) ++in_corner;
  }
  out.corner_fraction = static_cast<double>(in_corner) / static_cast<double>(points.size());
  // Every primitive point counts toward the density, not only those >= 2.
  out.density = primitive_density(domain, T);
  out.density_reference = 1.0 / zeta(d);
  out.curve = SurvivalCurve(std::move(values));
  return out;
}

std::string to_string(LatticeSource s) { return s == LatticeSource::Haar2D ? "haar2d" : "schmidt"; }

LatticeSource parse_lattice_source(const std::string& s) {
  if (s == "haar2d") return LatticeSource::Haar2D;
  if (s == "schmidt") return LatticeSource::Schmidt;
  throw PreconditionError("unknown lattice source '" + s + "'");
}

LatticePsi psi_from_lattices(const LatticePsiOptions& opt) {
  if (opt.count == 0) throw PreconditionError("psi_from_lattices needs count >= 1");
  LatticePsi out;
  if (opt.d == 2) {
    // The only unit-covolume 1-D lattice is Z, with rho = 1.
    out.curve = SurvivalCurve(std::vector<double>(opt.count, covering_radius_1d(1.0)));
    return out;
  }
  if (opt.d != 3) throw PreconditionError("exact lattice covering radii need d = 3 (2-D lattices)");
  std::vector<double> values(opt.count);
  std::vector<char> degenerate(opt.count, 0);
  parallel_for(opt.count, [&](std::size_t i) {
    CounterRng rng(opt.seed, i);
    const FloatBasis basis = opt.source == LatticeSource::Haar2D
                                 ? sample_haar_2d(rng).basis
                                 : sample_schmidt(opt.d, opt.schmidt_norm, rng, opt.frame).basis;
    const CoveringResult<double> r = covering_radius_exact_2d(basis);
    values[i] = r.rho;
    degenerate[i] = r.boundary_degenerate ? 1 : 0;
  }, 16);
  out.boundary_degenerate = static_cast<std::size_t>(std::count(degenerate.begin(), degenerate.end(), 1));
  out.curve = SurvivalCurve(std::move(values));
  return out;
}

}  // namespace frobcov
