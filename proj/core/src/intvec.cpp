#include "frobcov/intvec.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace frobcov {
namespace {

Wide wabs(Wide v) { return v < 0 ? -v : v; }

// Returns g = gcd(a, b) >= 0 with x*a + y*b = g.
Wide ext_gcd(Wide a, Wide b, Wide& x, Wide& y) {
  Wide old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Wide q = old_r / r;
    Wide tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Wide dot(const std::vector<Wide>& u, const std::vector<Wide>& v) {
  Wide s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

using WideMatrix = std::vector<std::vector<Wide>>;

WideMatrix widen(const IntMatrix& m) {
  WideMatrix w(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) w[i].assign(m[i].begin(), m[i].end());
  return w;
}

IntMatrix narrow_matrix(const WideMatrix& w, const char* what) {
  IntMatrix m(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    m[i].reserve(w[i].size());
    for (Wide v : w[i]) m[i].push_back(narrow(v, what));
  }
  return m;
}

Int ceil_mul(const Rational& x, Int T) {
  Rational v = x * Rational(static_cast<long>(T));
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return c.get_si();
}

Int floor_mul(const Rational& x, Int T) {
  Rational v = x * Rational(static_cast<long>(T));
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return f.get_si();
}

}  // namespace

Int gcd_of(std::span<const Int> v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  return g;
}

bool is_primitive(std::span<const Int> v) {
  const Int g = gcd_of(v);
  if (g == 0) throw PreconditionError("zero vector has no gcd-1 status");
  return g == 1;
}

Box Box::unit_cube(std::size_t d) {
  Box b;
  b.lower.assign(d, Rational(0));
  b.upper.assign(d, Rational(1));
  return b;
}

Box Box::parse(const std::string& text) {
  Box b;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    const auto comma = row.find(',');
    if (comma == std::string::npos) {
      throw PreconditionError("domain interval '" + row + "' must be 'lower,upper'");
    }
    b.lower.push_back(parse_rational(row.substr(0, comma)));
    b.upper.push_back(parse_rational(row.substr(comma + 1)));
    if (b.lower.back() > b.upper.back()) {
      throw PreconditionError("domain interval '" + row + "' has lower > upper");
    }
  }
  if (b.lower.empty()) throw PreconditionError("empty domain");
  return b;
}

Rational Box::volume() const {
  Rational v(1);
  for (std::size_t i = 0; i < dim(); ++i) v *= upper[i] - lower[i];
  return v;
}

bool Box::permutation_symmetric() const {
  for (std::size_t i = 1; i < dim(); ++i) {
    if (lower[i] != lower[0] || upper[i] != upper[0]) return false;
  }
  return true;
}

std::string Box::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) s += ';';
    s += frobcov::to_string(lower[i]) + ',' + frobcov::to_string(upper[i]);
  }
  return s;
}

namespace {

// Odometer over the integer box [lo, hi]; the last coordinate runs fastest.
void for_each_primitive_in(IntVec lo, const IntVec& hi,
                           const std::function<void(std::span<const Int>)>& visit) {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) return;
  }
  const std::size_t d = lo.size();
  IntVec x = lo;
  while (true) {
    if (gcd_of(x) == 1) visit(x);
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (x[k] < hi[k]) {
        ++x[k];
        break;
      }
      x[k] = lo[k];
      if (k == 0) return;
    }
  }
}

}  // namespace

void for_each_primitive(const Box& domain, Int T, bool floor2,
                        const std::function<void(std::span<const Int>)>& visit) {
  if (T <= 0) throw PreconditionError("scale T must be positive");
  const std::size_t d = domain.dim();
  if (d == 0) throw PreconditionError("empty domain");
  IntVec lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = ceil_mul(domain.lower[i], T);
    hi[i] = floor_mul(domain.upper[i], T);
    if (floor2) lo[i] = std::max<Int>(lo[i], 2);
  }
  for_each_primitive_in(std::move(lo), hi, visit);
}

std::vector<IntVec> enumerate_primitive(const Box& domain, Int T, bool floor2) {
  std::vector<IntVec> out;
  for_each_primitive(domain, T, floor2,
                     [&](std::span<const Int> a) { out.emplace_back(a.begin(), a.end()); });
  return out;
}

std::size_t count_primitive(const Box& domain, Int T, bool floor2) {
  std::size_t n = 0;
  for_each_primitive(domain, T, floor2, [&](std::span<const Int>) { ++n; });
  return n;
}

double primitive_density(const Box& domain, Int T) {
  if (T <= 0) throw PreconditionError("scale T must be positive");
  const std::size_t d = domain.dim();
  if (d == 0) throw PreconditionError("empty domain");
  const Rational vol = domain.volume();
  if (vol == 0) throw PreconditionError("domain has zero volume");
  IntVec lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = floor_mul(domain.lower[i], T) + 1;
    hi[i] = floor_mul(domain.upper[i], T);
  }
  std::size_t n = 0;
  for_each_primitive_in(std::move(lo), hi, [&](std::span<const Int>) { ++n; });
  return static_cast<double>(n) / (std::pow(static_cast<double>(T), static_cast<double>(d)) * vol.get_d());
}

double zeta(int d) {
  if (d < 2) throw PreconditionError("zeta(d) needs d >= 2");
  return std::riemann_zeta(static_cast<double>(d));
}

std::vector<double> FareyPoint::value() const {
  std::vector<double> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = static_cast<double>(p[i]) / static_cast<double>(q);
  return v;
}

void for_each_farey(Int Q, int d, const std::function<void(const FareyPoint&)>& visit) {
  if (Q < 1) throw PreconditionError("Farey order Q must be >= 1");
  if (d < 2) throw PreconditionError("Farey dimension d must be >= 2");
  const std::size_t n = static_cast<std::size_t>(d - 1);
  FareyPoint pt;
  for (Int q = 1; q <= Q; ++q) {
    pt.q = q;
    pt.p.assign(n, 0);
    while (true) {
      Int g = q;
      for (Int c : pt.p) g = std::gcd(g, c);
      if (g == 1) visit(pt);
      std::size_t k = n;
      bool done = true;
      while (k > 0) {
        --k;
        if (pt.p[k] + 1 < q) {
          ++pt.p[k];
          done = false;
          break;
        }
        pt.p[k] = 0;
      }
      if (done) break;
    }
  }
}

double farey_asymptotic_size(Int Q, int d) {
  return std::pow(static_cast<double>(Q), d) / (d * zeta(d));
}

std::vector<FareyPoint> farey_sequence(Int Q, int d, double cap) {
  if (Q >= 1 && d >= 2 && farey_asymptotic_size(Q, d) > cap) {
    throw PreconditionError("Farey sequence too large to materialize; stream it instead");
  }
  std::vector<FareyPoint> out;
  for_each_farey(Q, d, [&](const FareyPoint& p) { out.push_back(p); });
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& rows) {
  if (rows.empty()) return {};
  WideMatrix a = widen(rows);
  const std::size_t m = a.size();
  const std::size_t n = a[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (a[i][col] == 0) continue;
      if (a[r][col] == 0) {
        std::swap(a[r], a[i]);
        continue;
      }
      Wide x, y;
      const Wide p = a[r][col], q = a[i][col];
      const Wide g = ext_gcd(p, q, x, y);
      const Wide pg = p / g, qg = q / g;
      for (std::size_t k = 0; k < n; ++k) {
        const Wide top = x * a[r][k] + y * a[i][k];
        const Wide bottom = pg * a[i][k] - qg * a[r][k];
        a[r][k] = top;
        a[i][k] = bottom;
      }
    }
    if (a[r][col] == 0) continue;
    if (a[r][col] < 0) {
      for (auto& v : a[r]) v = -v;
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Wide f = floor_div(a[i][col], a[r][col]);
      if (f == 0) continue;
      for (std::size_t k = 0; k < n; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  a.resize(r);
  return narrow_matrix(a, "hermite_normal_form");
}

IntMatrix reduce_basis(IntMatrix rows) {
  WideMatrix b = widen(rows);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (i == j) continue;
        const Wide den = dot(b[j], b[j]);
        if (den == 0) continue;
        const Wide num = dot(b[i], b[j]);
        const Wide mu = floor_div(2 * num + den, 2 * den);
        if (mu == 0) continue;
        std::vector<Wide> c = b[i];
        for (std::size_t k = 0; k < c.size(); ++k) c[k] -= mu * b[j][k];
        if (dot(c, c) < dot(b[i], b[i])) {
          b[i] = std::move(c);
          changed = true;
        }
      }
    }
  }
  std::stable_sort(b.begin(), b.end(),
                   [](const auto& u, const auto& v) { return dot(u, u) < dot(v, v); });
  return narrow_matrix(b, "reduce_basis");
}

IntMatrix kernel_sublattice(std::span<const Int> a) {
  const std::size_t d = a.size();
  if (d < 2) throw PreconditionError("kernel_sublattice needs d >= 2");
  if (!is_primitive(a)) {
    throw PreconditionError("kernel_sublattice needs a primitive vector");
  }
  // Unimodular column operations U with a U = (0, ..., 0, +-1); the first
  // d-1 columns of U span the kernel.
  std::vector<Wide> c(a.begin(), a.end());
  WideMatrix u(d, std::vector<Wide>(d, 0));
  for (std::size_t i = 0; i < d; ++i) u[i][i] = 1;
  const std::size_t last = d - 1;
  for (std::size_t i = 0; i < last; ++i) {
    if (c[i] == 0) continue;
    Wide x, y;
    const Wide g = ext_gcd(c[i], c[last], x, y);
    const Wide ig = c[i] / g, lg = c[last] / g;
    for (std::size_t r = 0; r < d; ++r) {
      const Wide ci = u[r][i], cl = u[r][last];
      u[r][last] = x * ci + y * cl;
      u[r][i] = lg * ci - ig * cl;
    }
    c[i] = 0;
    c[last] = g;
  }
  if (wabs(c[last]) != 1) throw InternalError("kernel_sublattice: reduction did not reach gcd 1");
  IntMatrix basis(last, IntVec(d));
  for (std::size_t j = 0; j < last; ++j) {
    for (std::size_t r = 0; r < d; ++r) basis[j][r] = narrow(u[r][j], "kernel_sublattice");
  }
  return reduce_basis(std::move(basis));
}

IntMatrix residue_sublattice(std::span<const Int> a) {
  const std::size_t d = a.size();
  if (d < 2) throw PreconditionError("residue_sublattice needs d >= 2");
  if (a.back() == 0) throw PreconditionError("residue_sublattice needs a_d != 0");
  // L_a is the projection of the kernel of a onto the first d-1 coordinates.
  IntMatrix kernel = kernel_sublattice(a);
  for (auto& row : kernel) row.pop_back();
  IntMatrix h = hermite_normal_form(kernel);
  if (h.size() != d - 1) throw InternalError("residue_sublattice: rank deficiency");
  return h;
}

namespace {

mpz_class bareiss(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

mpz_class determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw PreconditionError("determinant needs a square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
  }
  return bareiss(std::move(a));
}

mpz_class gram_determinant(const IntMatrix& b) {
  const std::size_t k = b.size();
  std::vector<std::vector<mpz_class>> g(k, std::vector<mpz_class>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      mpz_class s = 0;
      for (std::size_t t = 0; t < b[i].size(); ++t) {
        s += mpz_class(static_cast<long>(b[i][t])) * static_cast<long>(b[j][t]);
      }
      g[i][j] = s;
    }
  }
  return bareiss(std::move(g));
}

}  // namespace frobcov
