#include "frobcov/frobenius.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "frobcov/intvec.hpp"

namespace frobcov {
namespace {

void check_frobenius_input(std::span<const Int> a) {
  if (a.size() < 2) throw PreconditionError("Frobenius number needs d >= 2");
  for (Int x : a) {
    if (x < 2) throw PreconditionError("Frobenius input needs every coordinate >= 2");
  }
  if (gcd_of(a) != 1) throw PreconditionError("Frobenius number undefined: gcd != 1");
}

}  // namespace

Int frobenius_sylvester(Int a1, Int a2) {
  if (a1 < 2 || a2 < 2) throw PreconditionError("Frobenius input needs every coordinate >= 2");
  if (std::gcd(a1, a2) != 1) throw PreconditionError("Frobenius number undefined: gcd != 1");
  return narrow(Wide(a1) * a2 - a1 - a2, "frobenius_sylvester");
}

FrobeniusResult frobenius(std::span<const Int> a) {
  check_frobenius_input(a);
  const Int m = *std::min_element(a.begin(), a.end());
  IntVec steps;
  for (Int x : a) {
    if (x != m) steps.push_back(x);
  }
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());

  constexpr Wide kInf = std::numeric_limits<Wide>::max();
  std::vector<Wide> dist(static_cast<std::size_t>(m), kInf);
  using Item = std::pair<Wide, Int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[0] = 0;
  heap.emplace(0, 0);
  while (!heap.empty()) {
    const auto [du, u] = heap.top();
    heap.pop();
    if (du != dist[static_cast<std::size_t>(u)]) continue;
    for (Int w : steps) {
      const Int v = static_cast<Int>((u + w % m) % m);
      const Wide dv = du + w;
      if (dv < dist[static_cast<std::size_t>(v)]) {
        dist[static_cast<std::size_t>(v)] = dv;
        heap.emplace(dv, v);
      }
    }
  }

  FrobeniusResult res;
  res.modulus = m;
  res.N.resize(static_cast<std::size_t>(m));
  res.N[0] = m;
  Wide best = std::numeric_limits<Wide>::min();
  for (Int r = 1; r < m; ++r) {
    const Wide n = dist[static_cast<std::size_t>(r)];
    if (n == kInf) throw InternalError("residue class unreachable for a primitive input");
    res.N[static_cast<std::size_t>(r)] = narrow(n, "frobenius N_r");
    best = std::max(best, n);
  }
  res.F = narrow(best - m, "frobenius F");
  return res;
}

Int frobenius_bruteforce(std::span<const Int> a, Int bound) {
  check_frobenius_input(a);
  if (bound < 1) throw PreconditionError("bruteforce bound must be positive");
  const Int m = *std::min_element(a.begin(), a.end());
  std::vector<char> rep(static_cast<std::size_t>(bound) + 1, 0);
  rep[0] = 1;
  for (Int n = 1; n <= bound; ++n) {
    for (Int x : a) {
      if (x <= n && rep[static_cast<std::size_t>(n - x)]) {
        rep[static_cast<std::size_t>(n)] = 1;
        break;
      }
    }
  }
  Int last_gap = -1;
  for (Int n = bound; n >= 1; --n) {
    if (!rep[static_cast<std::size_t>(n)]) {
      last_gap = n;
      break;
    }
  }
  // m consecutive representable integers make every larger one representable.
  if (last_gap + m > bound) throw BoundExceededError("bound too small");
  return last_gap;
}

Int frobenius_bruteforce(std::span<const Int> a) {
  check_frobenius_input(a);
  const auto [lo, hi] = std::minmax_element(a.begin(), a.end());
  Int bound = narrow(Wide(2) * *lo * *hi, "bruteforce bound");
  while (true) {
    try {
      return frobenius_bruteforce(a, bound);
    } catch (const BoundExceededError&) {
      bound = narrow(Wide(2) * bound, "bruteforce bound");
    }
  }
}

}  // namespace frobcov
