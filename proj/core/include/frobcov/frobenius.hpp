#pragma once

#include <span>

#include "frobcov/common.hpp"

namespace frobcov {

/// Frobenius number together with the residue table it was read from.
struct FrobeniusResult {
  Int F = 0;
  /// The modulus m = min_i a_i.
  Int modulus = 0;
  /// N[r] = smallest positive representable integer congruent to r mod m.
  IntVec N;
};

/// Sylvester's closed form a1*a2 - a1 - a2 for coprime a1, a2 >= 2.
Int frobenius_sylvester(Int a1, Int a2);

/// Exact Frobenius number of a primitive vector with every coordinate >= 2.
///
/// Residues modulo m = min_i a_i are the nodes of a graph with an edge
/// r -> r + a_j (mod m) of weight a_j for every a_j != m. Dijkstra from 0
/// gives N_r for r != 0, N_0 = m, and F = max_{r != 0} N_r - m.
FrobeniusResult frobenius(std::span<const Int> a);

/// Independent dynamic-programming oracle over [1, bound]. Throws
/// BoundExceededError ("bound too small") when the run of min(a) representable
/// integers that certifies the answer does not fit below `bound`.
Int frobenius_bruteforce(std::span<const Int> a, Int bound);

/// frobenius_bruteforce starting at bound 2*min(a)*max(a), doubling on
/// BoundExceededError.
Int frobenius_bruteforce(std::span<const Int> a);

}  // namespace frobcov
