#include "irrbase/counting.hpp"

#include <cmath>
#include <stdexcept>

namespace irrbase {

std::vector<std::pair<BigInt, unsigned>> factor_big(BigInt n) {
  if (n < 1) throw std::invalid_argument("factorization of a non-positive integer");
  std::vector<std::pair<BigInt, unsigned>> out;
  auto take = [&](const BigInt& d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  };
  take(2);
  // Group orders here are smooth; the bound only guards against abuse.
  constexpr std::uint64_t kTrialLimit = 100'000'000;
  std::uint64_t d = 3;
  for (; d <= kTrialLimit && BigInt(d) * d <= n; d += 2) take(BigInt(d));
  if (n > 1) {
    if (d > kTrialLimit && BigInt(d) * d <= n) throw std::length_error("integer too large to factor by trial division");
    out.emplace_back(n, 1);
  }
  return out;
}

unsigned omega(const BigInt& n) {
  unsigned total = 0;
  for (const auto& [p, e] : factor_big(n)) total += e;
  return total;
}

double log2_big(const BigInt& n) {
  if (n <= 0) throw std::invalid_argument("log of a non-positive integer");
  const auto bits = boost::multiprecision::msb(n);
  if (bits < 60) return std::log2(static_cast<double>(n.convert_to<std::uint64_t>()));
  const unsigned shift = static_cast<unsigned>(bits) - 52;
  const BigInt top = n >> shift;
  return std::log2(static_cast<double>(top.convert_to<std::uint64_t>())) + shift;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt ipow(const BigInt& base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace irrbase
