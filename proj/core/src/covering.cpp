#include "frobcov/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace frobcov {
namespace {

template <class S>
S entry_abs_sum(const LatticeBasis<S>& b) {
  S s(0);
  for (const auto& v : b.entries()) s += ScalarTraits<S>::abs(v);
  return s;
}

template <class S>
struct Point2 {
  S x, y, s;
};

template <class S>
bool lex_less(const Point2<S>& a, const Point2<S>& b) {
  return std::tie(a.x, a.y) < std::tie(b.x, b.y);
}

// Solves c * B = w for the coefficient row vector c.
template <class S>
std::vector<S> coefficients(const LatticeBasis<S>& b, const std::vector<S>& w) {
  const std::size_t n = b.dim();
  // Augmented system B^T c^T = w^T.
  std::vector<std::vector<S>> a(n, std::vector<S>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = b(j, i);
    a[i][n] = w[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (ScalarTraits<S>::abs(a[r][c]) > ScalarTraits<S>::abs(a[p][c])) p = r;
    }
    if (a[p][c] == S(0)) throw PreconditionError("degenerate lattice basis");
    std::swap(a[p], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == S(0)) continue;
      const S f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<S> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i][n] / a[i][i];
  return out;
}

template <class S>
bool is_integral(const S& v, double tol) {
  if constexpr (ScalarTraits<S>::exact) {
    (void)tol;
    return v.get_den() == 1;
  } else {
    return std::fabs(v - std::nearbyint(v)) <= tol * std::max(1.0, std::fabs(v));
  }
}

}  // namespace

template <class S>
CoveringResult<S> covering_radius_exact_2d(const LatticeBasis<S>& basis) {
  using Tr = ScalarTraits<S>;
  if (basis.dim() != 2) {
    throw PreconditionError("covering_radius_exact_2d needs a 2-D lattice (n = 2)");
  }
  const S det = basis.determinant();
  if (det == S(0) || (!Tr::exact && Tr::abs(det) < 1e-300)) {
    throw PreconditionError("degenerate lattice basis");
  }
  const LatticeBasis<S> red = gauss_reduce(basis);
  const S bound = entry_abs_sum(red);
  const S eps = Tr::eps();

  std::vector<Point2<S>> pts;
  const std::vector<S> lo{S(0), S(-bound)};
  const std::vector<S> hi{bound, bound};
  std::size_t examined = 0;
  for_each_point_in_box<S>(red, lo, hi, [&](const std::vector<S>& p) {
    ++examined;
    if (p[0] > eps) pts.push_back({p[0], p[1], p[0] + p[1]});
  });
  std::sort(pts.begin(), pts.end(), [](const Point2<S>& a, const Point2<S>& b) {
    return std::tie(a.y, a.x) < std::tie(b.y, b.x);
  });

  // best[k]: index of the least coordinate sum among pts[k..], ties by lex order.
  const std::size_t np = pts.size();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best(np + 1, kNone);
  for (std::size_t k = np; k-- > 0;) {
    const std::size_t nb = best[k + 1];
    if (nb == kNone || pts[k].s < pts[nb].s ||
        (pts[k].s == pts[nb].s && lex_less(pts[k], pts[nb]))) {
      best[k] = k;
    } else {
      best[k] = nb;
    }
  }

  struct Candidate {
    std::size_t v2 = kNone, v3 = kNone;
    S R{};
    bool degenerate = false;
  };
  Candidate chosen, fallback;
  auto better = [&](const Candidate& c, const Candidate& cur) {
    if (cur.v2 == kNone) return true;
    if (c.R != cur.R) return c.R > cur.R;
    return std::tie(pts[c.v2].x, pts[c.v2].y, pts[c.v3].x, pts[c.v3].y) <
           std::tie(pts[cur.v2].x, pts[cur.v2].y, pts[cur.v3].x, pts[cur.v3].y);
  };

  for (std::size_t k = 0; k < np; ++k) {
    const Point2<S>& v2 = pts[k];
    if (!(v2.y < -eps)) break;  // sorted by y: no further candidates
    if (v2.x >= bound + eps) continue;
    const S cut = v2.y + eps;
    const auto it = std::upper_bound(pts.begin(), pts.end(), cut,
                                     [](const S& t, const Point2<S>& p) { return t < p.y; });
    const std::size_t idx = static_cast<std::size_t>(it - pts.begin());
    if (idx == np || best[idx] == kNone) {
      throw BoundExceededError("enumeration bound exceeded");
    }
    Candidate c;
    c.v2 = k;
    c.v3 = best[idx];
    c.R = pts[c.v3].s - v2.y;
    if (c.R > bound + eps) throw BoundExceededError("enumeration bound exceeded");
    const S neg_y = -v2.y;
    const bool strict = v2.x < c.R - eps && neg_y < c.R - eps;
    const bool loose = v2.x < c.R + eps && neg_y < c.R + eps;
    c.degenerate = !strict;
    if (better(c, fallback)) fallback = c;
    const bool accepted = Tr::exact ? strict : loose;
    if (accepted && better(c, chosen)) chosen = c;
  }
  if (chosen.v2 == kNone) {
    if constexpr (Tr::exact) {
      throw InternalError("covering_radius_exact_2d: no facet-witness configuration found");
    }
    chosen = fallback;
    chosen.degenerate = true;
    if (chosen.v2 == kNone) throw BoundExceededError("enumeration bound exceeded");
  }

  CoveringResult<S> res;
  const Point2<S>& v2 = pts[chosen.v2];
  const Point2<S>& v3 = pts[chosen.v3];
  res.rho = chosen.R;
  res.zeta = {S(0), v2.y};
  res.witnesses = {{S(0), S(0)}, {v2.x, v2.y}, {v3.x, v3.y}};
  res.boundary_degenerate = chosen.degenerate;
  res.search_bound = bound;
  res.points_examined = examined;
  return res;
}

double covering_radius_1d(double g) {
  if (!(g > 0.0)) throw PreconditionError("1-D lattice generator must be positive");
  return g;
}

Rational covering_radius_1d(const Rational& g) {
  if (g <= 0) throw PreconditionError("1-D lattice generator must be positive");
  return g;
}

template <class S>
CoveringResult<S> covering_result_1d(const S& g) {
  CoveringResult<S> res;
  res.rho = covering_radius_1d(g);
  res.zeta = {S(0)};
  res.witnesses = {{S(0)}, {g}};
  res.search_bound = g;
  res.points_examined = 2;
  return res;
}

GridResult covering_radius_grid(const FloatBasis& basis, int grid_n) {
  if (grid_n < 1) throw PreconditionError("grid resolution must be >= 1");
  const std::size_t n = basis.dim();
  if (basis.determinant() == 0.0) throw PreconditionError("degenerate lattice basis");
  const FloatBasis red = reduce(basis);
  const double U = entry_abs_sum(red);

  // Translates p = zeta L range over the cell's bounding box [pmin, pmax].
  std::vector<double> pmin(n, 0.0), pmax(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      pmin[j] += std::min(0.0, red(i, j));
      pmax[j] += std::max(0.0, red(i, j));
    }
  }
  std::vector<double> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = -pmax[j];
    hi[j] = U - pmin[j];
  }
  struct Entry {
    double s;
    std::vector<double> v;
  };
  std::vector<Entry> pts;
  for_each_point_in_box<double>(red, lo, hi, [&](const std::vector<double>& v) {
    double s = 0.0;
    for (double c : v) s += c;
    pts.push_back({s, v});
  });
  std::sort(pts.begin(), pts.end(), [](const Entry& a, const Entry& b) { return a.s < b.s; });

  GridResult out;
  out.grid_n = grid_n;
  out.lipschitz = U;
  out.gap_bound = U / grid_n;
  out.value = -std::numeric_limits<double>::infinity();
  std::vector<Int> k(n, 0);
  std::vector<double> p(n);
  while (true) {
    p.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double t = static_cast<double>(k[i]) / grid_n;
      for (std::size_t j = 0; j < n; ++j) p[j] += t * red(i, j);
    }
    double sp = 0.0;
    for (double c : p) sp += c;
    for (const Entry& e : pts) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) ok = e.v[j] + p[j] >= 0.0;
      if (!ok) continue;
      const double g = e.s + sp;
      if (g > out.value) {
        out.value = g;
        out.zeta.resize(n);
        for (std::size_t i = 0; i < n; ++i) out.zeta[i] = static_cast<double>(k[i]) / grid_n;
      }
      break;
    }
    std::size_t i = n;
    bool done = true;
    while (i > 0) {
      --i;
      if (k[i] + 1 < grid_n) {
        ++k[i];
        done = false;
        break;
      }
      k[i] = 0;
    }
    if (done) break;
  }
  if (out.value < 0.0) throw BoundExceededError("grid evaluation found no lattice point in the window");
  return out;
}

CoveringResult<Rational> covering_radius_weighted(const IntMatrix& basis, std::span<const Int> w) {
  for (Int x : w) {
    if (x < 1) throw PreconditionError("simplex weights must be positive integers");
  }
  const ExactBasis L = to_exact(basis);
  if (w.size() != L.dim()) throw PreconditionError("weight vector has the wrong dimension");
  std::vector<Rational> wq;
  for (Int x : w) wq.emplace_back(static_cast<long>(x));
  const ExactBasis scaled = L.column_scaled(wq);
  if (L.dim() == 1) return covering_result_1d(ScalarTraits<Rational>::abs(scaled(0, 0)));
  if (L.dim() != 2) throw PreconditionError("exact weighted covering radius needs n <= 2");
  return covering_radius_exact_2d(scaled);
}

template <class S>
CoveringCheck verify_covering(const LatticeBasis<S>& basis, const CoveringResult<S>& r, double tol) {
  using Tr = ScalarTraits<S>;
  const std::size_t n = basis.dim();
  const S eps = Tr::exact ? S(0) : S(tol);
  auto fail = [](std::string msg) { return CoveringCheck{false, std::move(msg)}; };
  if (!(r.rho > S(0))) return fail("non-positive radius");
  if (r.zeta.size() != n || r.witnesses.size() != n + 1) return fail("malformed certificate");

  std::vector<S> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = r.zeta[j];
    hi[j] = r.zeta[j] + r.rho;
  }
  S zsum(0);
  for (const auto& z : r.zeta) zsum += z;
  bool empty = true;
  for_each_point_in_box<S>(basis, lo, hi, [&](const std::vector<S>& p) {
    S s(0);
    bool inside = true;
    for (std::size_t j = 0; j < n; ++j) {
      inside = inside && p[j] - r.zeta[j] > eps;
      s += p[j];
    }
    if (inside && s - zsum < r.rho - eps) empty = false;
  });
  if (!empty) return fail("open simplex contains a lattice point");

  for (std::size_t f = 0; f <= n; ++f) {
    const auto& w = r.witnesses[f];
    if (w.size() != n) return fail("malformed witness");
    for (const S& c : coefficients(basis, w)) {
      if (!is_integral(c, 1e-6)) return fail("witness " + std::to_string(f) + " is not a lattice point");
    }
    S s(0);
    for (std::size_t j = 0; j < n; ++j) s += w[j] - r.zeta[j];
    for (std::size_t j = 0; j < n; ++j) {
      const S rel = w[j] - r.zeta[j];
      if (j == f) {
        if (Tr::abs(rel) > eps) return fail("witness " + std::to_string(f) + " is off its facet");
      } else if (!(rel > -eps) || (Tr::exact && rel == S(0))) {
        return fail("witness " + std::to_string(f) + " is outside the facet interior");
      }
    }
    if (f < n) {
      if (!(s < r.rho + eps) || (Tr::exact && s == r.rho)) {
        return fail("witness " + std::to_string(f) + " is outside the facet interior");
      }
    } else if (Tr::abs(s - r.rho) > eps) {
      return fail("hypotenuse witness is off its facet");
    }
  }
  return {};
}

template CoveringResult<double> covering_radius_exact_2d(const LatticeBasis<double>&);
template CoveringResult<Rational> covering_radius_exact_2d(const LatticeBasis<Rational>&);
template CoveringResult<double> covering_result_1d(const double&);
template CoveringResult<Rational> covering_result_1d(const Rational&);
template CoveringCheck verify_covering(const LatticeBasis<double>&, const CoveringResult<double>&, double);
template CoveringCheck verify_covering(const LatticeBasis<Rational>&, const CoveringResult<Rational>&,
                                       double);

}  // namespace frobcov
