#pragma once

// Test-only reference computations. These avoid the library's own fraction
// type and algorithms: arithmetic goes through boost's cpp_rational, and
// number theory is brute force over int64.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using rational = boost::multiprecision::cpp_rational;

/// Value of [a1,...,an] folded from the right; nullopt stands for 1/0.
inline std::optional<rational> cf_right_fold(const std::vector<std::int64_t>& terms) {
  std::optional<rational> x = rational(terms.back());
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    if (!x) {
      x = rational(terms[i]);  // a + 1/inf
    } else if (*x == 0) {
      x = std::nullopt;  // a + 1/0
    } else {
      x = rational(terms[i]) + 1 / *x;
    }
  }
  return x;
}

inline std::string to_string(const std::optional<rational>& x) {
  if (!x) return "inf";
  return boost::multiprecision::numerator(*x).str() + "/" + boost::multiprecision::denominator(*x).str();
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Inverse by exhaustive search.
inline std::int64_t inverse_mod(std::int64_t q, std::int64_t p) {
  for (std::int64_t x = 1; x < p; ++x) {
    if ((q * x) % p == 1) return x;
  }
  return -1;
}

/// {q, q^-1} and, with mirror, {p-q, p-q^-1}.
inline std::set<std::int64_t> schubert_class(std::int64_t p, std::int64_t q, bool mirror) {
  q = ((q % p) + p) % p;
  std::int64_t inv = inverse_mod(q, p);
  std::set<std::int64_t> out{q, inv};
  if (mirror) {
    out.insert(p - q);
    out.insert(p - inv);
  }
  return out;
}

/// All divisors d of n with 3 <= d and n/d >= 3, by trial of every integer.
inline std::vector<std::pair<std::int64_t, std::int64_t>> factor_pairs_ge3(std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0 && d >= 3 && n / d >= 3) out.emplace_back(d, n / d);
  }
  return out;
}

}  // namespace oracle
