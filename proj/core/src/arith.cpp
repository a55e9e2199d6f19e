#include "skewlift/arith.hpp"

#include <algorithm>
#include <cmath>

#include "skewlift/common.hpp"

namespace skewlift::arith {

std::vector<i64> divisors(i64 n) {
  if (n < 1) throw DomainError("divisors: needs n >= 1");
  std::vector<i64> small, large;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

double sigma(int e, i64 n) {
  if (n < 1) throw DomainError("sigma: needs n >= 1");
  int a = std::abs(e);
  double acc = 0.0;
  for (i64 d : divisors(n)) acc += std::pow(double(d), a);
  if (e >= 0) return acc;
  return acc / std::pow(double(n), a);
}

int moebius(i64 n) {
  if (n < 1) throw DomainError("moebius: needs n >= 1");
  int primes = 0;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++primes;
    }
  }
  if (n > 1) ++primes;
  return (primes % 2 == 0) ? 1 : -1;
}

SquareSplit squarefull_split(i64 m) {
  if (m < 1) throw DomainError("squarefull_split: needs m >= 1");
  i64 ms = 1;
  for (i64 p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      ms *= p;
      m /= p * p;
    }
  }
  return {ms, m};
}

i64 gcd(i64 a, i64 b) {
  a = std::abs(a);
  b = std::abs(b);
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<std::pair<i64, i64>> coprime_pairs(i64 height) {
  if (height < 1) throw DomainError("coprime_pairs: needs height >= 1");
  std::vector<std::pair<i64, i64>> out;
  out.emplace_back(0, 1);
  for (i64 h = 1; h <= height; ++h) {
    // new pairs with max(|c|,|d|) == h, c > 0
    // c == h:
    for (i64 d = -h; d <= h; ++d)
      if (gcd(h, d) == 1) out.emplace_back(h, d);
    // |d| == h, 0 < c < h:
    for (i64 c = 1; c < h; ++c) {
      if (gcd(c, h) == 1) {
        out.emplace_back(c, h);
        out.emplace_back(c, -h);
      }
    }
  }
  return out;
}

}  // namespace skewlift::arith
