#include "frobcov/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace frobcov {
namespace {

template <class S>
S dot(std::span<const S> u, std::span<const S> v) {
  S s(0);
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

// Row-major inverse by Gauss-Jordan with partial pivoting.
std::vector<double> inverse(std::size_t n, std::vector<double> a) {
  std::vector<double> inv(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::fabs(a[r * n + c]) > std::fabs(a[p * n + c])) p = r;
    }
    if (a[p * n + c] == 0.0) throw PreconditionError("degenerate lattice basis");
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a[p * n + k], a[c * n + k]);
        std::swap(inv[p * n + k], inv[c * n + k]);
      }
    }
    const double piv = a[c * n + c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c * n + k] /= piv;
      inv[c * n + k] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r * n + c];
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        a[r * n + k] -= f * a[c * n + k];
        inv[r * n + k] -= f * inv[c * n + k];
      }
    }
  }
  return inv;
}

}  // namespace

template <class S>
LatticeBasis<S>::LatticeBasis(std::size_t n, std::vector<S> entries) : n_(n), e_(std::move(entries)) {
  if (n == 0 || e_.size() != n * n) throw PreconditionError("basis must be a non-empty square matrix");
}

template <class S>
LatticeBasis<S> LatticeBasis<S>::identity(std::size_t n) {
  std::vector<S> e(n * n, S(0));
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = S(1);
  return LatticeBasis(n, std::move(e));
}

template <class S>
LatticeBasis<S> LatticeBasis<S>::from_rows(const std::vector<std::vector<S>>& rows) {
  const std::size_t n = rows.size();
  std::vector<S> e;
  e.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw PreconditionError("basis must be square");
    e.insert(e.end(), r.begin(), r.end());
  }
  return LatticeBasis(n, std::move(e));
}

template <class S>
std::vector<S> LatticeBasis<S>::row(std::size_t i) const {
  return std::vector<S>(e_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                        e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
}

template <class S>
S LatticeBasis<S>::determinant() const {
  std::vector<S> a = e_;
  const std::size_t n = n_;
  S det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (ScalarTraits<S>::abs(a[r * n + c]) > ScalarTraits<S>::abs(a[p * n + c])) p = r;
    }
    if (a[p * n + c] == S(0)) return S(0);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[p * n + k], a[c * n + k]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const S f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return det;
}

template <class S>
S LatticeBasis<S>::covolume() const {
  return ScalarTraits<S>::abs(determinant());
}

template <class S>
LatticeBasis<S> LatticeBasis<S>::scaled(const S& c) const {
  LatticeBasis out = *this;
  for (auto& v : out.e_) v *= c;
  return out;
}

template <class S>
LatticeBasis<S> LatticeBasis<S>::column_scaled(std::span<const S> w) const {
  if (w.size() != n_) throw PreconditionError("weight vector has the wrong dimension");
  LatticeBasis out = *this;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out(i, j) *= w[j];
  }
  return out;
}

template <class S>
std::vector<S> LatticeBasis<S>::point(std::span<const Int> coeffs) const {
  std::vector<S> p(n_, S(0));
  for (std::size_t i = 0; i < n_; ++i) {
    if (coeffs[i] == 0) continue;
    const S c = ScalarTraits<S>::from_int(coeffs[i]);
    for (std::size_t j = 0; j < n_; ++j) p[j] += c * (*this)(i, j);
  }
  return p;
}

ExactBasis to_exact(const IntMatrix& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    std::vector<Rational> q;
    for (Int v : row) q.emplace_back(static_cast<long>(v));
    r.push_back(std::move(q));
  }
  return ExactBasis::from_rows(r);
}

FloatBasis to_float(const ExactBasis& b) {
  std::vector<double> e;
  for (const auto& v : b.entries()) e.push_back(v.get_d());
  return FloatBasis(b.dim(), std::move(e));
}

FloatBasis to_float(const IntMatrix& rows) {
  std::vector<std::vector<double>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return FloatBasis::from_rows(r);
}

template <class S>
LatticeBasis<S> gauss_reduce(LatticeBasis<S> b) {
  if (b.dim() != 2) throw PreconditionError("gauss_reduce needs a 2-D basis");
  std::vector<S> u = b.row(0), v = b.row(1);
  auto norm2 = [](const std::vector<S>& x) -> S { return x[0] * x[0] + x[1] * x[1]; };
  if (norm2(u) > norm2(v)) std::swap(u, v);
  for (int guard = 0; guard < 10000; ++guard) {
    const S nu = norm2(u);
    if (nu == S(0)) throw PreconditionError("degenerate lattice basis");
    const S mu = ScalarTraits<S>::round((u[0] * v[0] + u[1] * v[1]) / nu);
    v[0] -= mu * u[0];
    v[1] -= mu * u[1];
    if (!(norm2(v) < nu)) break;
    std::swap(u, v);
  }
  return LatticeBasis<S>::from_rows({u, v});
}

FloatBasis lll_reduce(FloatBasis b) {
  const std::size_t n = b.dim();
  if (n < 2) return b;
  std::vector<std::vector<double>> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = b.row(i);
  constexpr double delta = 0.99;
  std::vector<std::vector<double>> star(n, std::vector<double>(n));
  std::vector<std::vector<double>> mu(n, std::vector<double>(n));
  std::vector<double> bstar2(n);
  auto gso = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      star[i] = rows[i];
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = dot<double>(rows[i], star[j]) / bstar2[j];
        for (std::size_t k = 0; k < n; ++k) star[i][k] -= mu[i][j] * star[j][k];
      }
      bstar2[i] = dot<double>(star[i], star[i]);
    }
  };
  gso();
  std::size_t k = 1;
  for (int guard = 0; k < n && guard < 100000; ++guard) {
    for (std::size_t j = k; j-- > 0;) {
      const double q = std::nearbyint(mu[k][j]);
      if (q != 0.0) {
        for (std::size_t t = 0; t < n; ++t) rows[k][t] -= q * rows[j][t];
        gso();
      }
    }
    if (bstar2[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar2[k - 1]) {
      ++k;
    } else {
      std::swap(rows[k], rows[k - 1]);
      gso();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return FloatBasis::from_rows(rows);
}

template <class S>
LatticeBasis<S> reduce(const LatticeBasis<S>& b) {
  if (b.dim() == 2) return gauss_reduce(b);
  if constexpr (std::is_same_v<S, double>) {
    if (b.dim() > 2) return lll_reduce(b);
  }
  return b;
}

template <class S>
void for_each_point_in_box(const LatticeBasis<S>& b, std::span<const S> lo, std::span<const S> hi,
                           const std::function<void(const std::vector<S>&)>& visit) {
  const std::size_t n = b.dim();
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n * n; ++i) m[i] = ScalarTraits<S>::to_double(b.entries()[i]);
  const std::vector<double> inv = inverse(n, m);
  // Coefficients c = x * inv; bound each c_j over the box.
  IntVec cmin(n), cmax(n);
  for (std::size_t j = 0; j < n; ++j) {
    double mn = 0.0, mx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = ScalarTraits<S>::to_double(lo[i]) * inv[i * n + j];
      const double c = ScalarTraits<S>::to_double(hi[i]) * inv[i * n + j];
      mn += std::min(a, c);
      mx += std::max(a, c);
    }
    cmin[j] = static_cast<Int>(std::floor(mn)) - 1;
    cmax[j] = static_cast<Int>(std::ceil(mx)) + 1;
  }
  const S eps = ScalarTraits<S>::eps();
  IntVec c = cmin;
  std::vector<S> p(n);
  while (true) {
    p.assign(n, S(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] == 0) continue;
      const S ci = ScalarTraits<S>::from_int(c[i]);
      for (std::size_t j = 0; j < n; ++j) p[j] += ci * b(i, j);
    }
    bool inside = true;
    for (std::size_t j = 0; j < n && inside; ++j) {
      inside = p[j] >= lo[j] - eps && p[j] <= hi[j] + eps;
    }
    if (inside) visit(p);
    std::size_t k = n;
    bool done = true;
    while (k > 0) {
      --k;
      if (c[k] < cmax[k]) {
        ++c[k];
        done = false;
        break;
      }
      c[k] = cmin[k];
    }
    if (done) return;
  }
}

ExactBasis parse_basis(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Rational> r;
    std::stringstream es(row);
    std::string entry;
    while (std::getline(es, entry, ',')) r.push_back(parse_rational(entry));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw PreconditionError("empty basis");
  return ExactBasis::from_rows(rows);
}

template class LatticeBasis<double>;
template class LatticeBasis<Rational>;
template LatticeBasis<double> gauss_reduce(LatticeBasis<double>);
template LatticeBasis<Rational> gauss_reduce(LatticeBasis<Rational>);
template LatticeBasis<double> reduce(const LatticeBasis<double>&);
template LatticeBasis<Rational> reduce(const LatticeBasis<Rational>&);
template void for_each_point_in_box(const LatticeBasis<double>&, std::span<const double>,
                                    std::span<const double>,
                                    const std::function<void(const std::vector<double>&)>&);
template void for_each_point_in_box(const LatticeBasis<Rational>&, std::span<const Rational>,
                                    std::span<const Rational>,
                                    const std::function<void(const std::vector<Rational>&)>&);

}  // namespace frobcov
