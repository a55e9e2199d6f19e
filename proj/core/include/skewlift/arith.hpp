#pragma once

// Elementary arithmetic: divisor sums, Moebius, square decomposition, coprime
// pair enumeration (one representative per Gamma_infty \ SL2(Z) coset).

#include <cstdint>
#include <vector>

namespace skewlift::arith {

using i64 = std::int64_t;

struct SquareSplit {
  i64 m_s;  // largest m_s with m_s^2 | m and m/m_s^2 squarefree
  i64 m_f;  // squarefree part, m = m_s^2 * m_f
};

// All positive divisors of n, ascending.
std::vector<i64> divisors(i64 n);

// sigma_e(n) = sum_{d|n} d^e as a double; e may be negative
// (computed as sigma_{|e|}(n) / n^{|e|} from the exact integer numerator).
double sigma(int e, i64 n);

// Moebius function, in {-1, 0, 1}.
int moebius(i64 n);

SquareSplit squarefull_split(i64 m);

i64 gcd(i64 a, i64 b);

// Coprime bottom rows (c, d) with max(|c|,|d|) <= height, one per
// Gamma_infty \ SL2(Z) coset; canonical sign c > 0, or (0, 1).
// Ordered by increasing max(|c|,|d|) so truncated Eisenstein sums are
// monotone refinements.
std::vector<std::pair<i64, i64>> coprime_pairs(i64 height);

}  // namespace skewlift::arith
