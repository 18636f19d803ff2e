#pragma once

// Brute-force oracles used only by tests. None of these call into the code
// paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using Int = std::int64_t;

/// Largest integer in [1, limit] with no representation as a non-negative
/// combination of `a`, found by a plain reachability scan.
inline Int frobenius_scan(const std::vector<Int>& a, Int limit) {
  std::vector<bool> rep(static_cast<std::size_t>(limit) + 1, false);
  rep[0] = true;
  for (Int x : a) {
    for (Int n = x; n <= limit; ++n) {
      if (rep[static_cast<std::size_t>(n - x)]) rep[static_cast<std::size_t>(n)] = true;
    }
  }
  Int last = -1;
  for (Int n = 1; n <= limit; ++n) {
    if (!rep[static_cast<std::size_t>(n)]) last = n;
  }
  return last;
}

/// Number of points of {lo..hi}^d with gcd 1, counted by sieving multiples.
inline std::int64_t primitive_count_sieve(Int lo, Int hi, int d) {
  // cnt[g] = number of points with all coords divisible by g; Mobius-style
  // subtraction from the top gives the number with gcd exactly g.
  const Int top = std::max<Int>(std::abs(lo), std::abs(hi));
  std::vector<std::int64_t> exact(static_cast<std::size_t>(top) + 2, 0);
  std::int64_t zero_point = (lo <= 0 && 0 <= hi) ? 1 : 0;
  for (Int g = top; g >= 1; --g) {
    std::int64_t per = 0;
    for (Int v = lo; v <= hi; ++v) {
      if (v % g == 0) ++per;
    }
    std::int64_t all = 1;
    for (int i = 0; i < d; ++i) all *= per;
    all -= zero_point;
    for (Int m = 2 * g; m <= top; m += g) all -= exact[static_cast<std::size_t>(m)];
    exact[static_cast<std::size_t>(g)] = all;
  }
  return exact[1];
}

/// |F_Q| by the double loop over q and p in {0..q-1}^(d-1).
inline std::int64_t farey_count_loop(Int Q, int d) {
  std::int64_t n = 0;
  for (Int q = 1; q <= Q; ++q) {
    std::vector<Int> p(static_cast<std::size_t>(d - 1), 0);
    while (true) {
      Int g = q;
      for (Int c : p) g = std::gcd(g, c);
      if (g == 1) ++n;
      std::size_t k = p.size();
      bool done = true;
      while (k-- > 0) {
        if (++p[k] < q) {
          done = false;
          break;
        }
        p[k] = 0;
      }
      if (done) break;
    }
  }
  return n;
}

/// |F_Q| = sum_{q <= Q} J_{d-1}(q) with Jordan's totient, via a Mobius sieve.
inline std::int64_t farey_count_jordan(Int Q, int d) {
  std::vector<int> mu(static_cast<std::size_t>(Q) + 1, 1);
  std::vector<bool> composite(static_cast<std::size_t>(Q) + 1, false);
  for (Int p = 2; p <= Q; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    for (Int m = p; m <= Q; m += p) {
      if (m > p) composite[static_cast<std::size_t>(m)] = true;
      mu[static_cast<std::size_t>(m)] = -mu[static_cast<std::size_t>(m)];
    }
    for (Int m = p * p; m <= Q; m += p * p) mu[static_cast<std::size_t>(m)] = 0;
  }
  std::int64_t total = 0;
  for (Int q = 1; q <= Q; ++q) {
    for (Int e = 1; e <= q; ++e) {
      if (q % e) continue;
      std::int64_t pw = 1;
      for (int i = 0; i < d - 1; ++i) pw *= q / e;
      total += mu[static_cast<std::size_t>(e)] * pw;
    }
  }
  return total;
}

struct Vec2 {
  Int x, y;
};

/// Covering radius of the standard triangle with respect to an integer 2-D
/// lattice, by the literal witness search: v1 = 0 on {x = 0}, every pair of
/// lattice points (v2, v3) proposes zeta = (0, v2.y) and R = v3.x + v3.y - v2.y;
/// proposals whose witnesses sit in the facet interiors and whose open
/// triangle holds no lattice point (checked by scanning) are maximized.
/// Lattice points come from a coefficient sweep wide enough to reach every
/// point of the window (0, bound] x [-bound, bound].
inline std::optional<Int> covering_radius_2d_bruteforce(Int b11, Int b12, Int b21, Int b22) {
  const Int bound = std::abs(b11) + std::abs(b12) + std::abs(b21) + std::abs(b22);
  const Int det = std::abs(b11 * b22 - b12 * b21);
  if (det == 0) return std::nullopt;
  const Int K = 2 * bound * bound / det + 1;
  std::vector<Vec2> pts;
  for (Int i = -K; i <= K; ++i) {
    for (Int j = -K; j <= K; ++j) {
      const Vec2 p{i * b11 + j * b21, i * b12 + j * b22};
      if (p.x > 0 && p.x <= bound && std::abs(p.y) <= bound) pts.push_back(p);
    }
  }
  std::optional<Int> best;
  for (const Vec2& v2 : pts) {
    if (!(v2.x > 0 && v2.y < 0)) continue;
    for (const Vec2& v3 : pts) {
      const Int zy = v2.y;
      const Int R = v3.x + v3.y - zy;
      if (R <= 0 || (best && R <= *best)) continue;
      // witness conditions: v1 = 0 on x = 0, v2 on y = zy, v3 on hypotenuse
      if (!(-zy > 0 && -zy < R)) continue;
      if (!(v2.x > 0 && v2.x - 0 + 0 < R)) continue;
      if (!(v3.x > 0 && v3.y - zy > 0)) continue;
      bool empty = true;
      for (const Vec2& w : pts) {
        if (w.x > 0 && w.y > zy && w.x + w.y - zy < R) {
          empty = false;
          break;
        }
      }
      if (empty) best = R;
    }
  }
  return best;
}

}  // namespace oracle
