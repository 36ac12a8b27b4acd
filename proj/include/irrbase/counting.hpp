#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace irrbase {

/// Exact group orders. Everything that arises fits in 128 bits, but nothing
/// in the interfaces assumes a fixed width.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& n) { return n.str(); }

/// Prime factorization as (prime, multiplicity) pairs, ascending.
std::vector<std::pair<BigInt, unsigned>> factor_big(BigInt n);

/// Number of prime divisors of n counted with multiplicity. omega(1) = 0.
unsigned omega(const BigInt& n);

/// log2 of a positive integer as a double (for the real-valued bounds).
double log2_big(const BigInt& n);

BigInt factorial(unsigned n);
BigInt ipow(const BigInt& base, unsigned e);

}  // namespace irrbase
