#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace irrbase {

/// Canonical index of a field element: the coefficients of its polynomial
/// representative packed base p, constant term least significant.
/// Index 0 is zero and index 1 is one.
using Elem = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

bool is_prime(std::uint64_t n);

/// Returns (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q);

/// A small finite field GF(p^k) with precomputed arithmetic tables.
///
/// Full multiplication and inverse tables are used for q <= 256, log/antilog
/// tables above that. Instances are immutable and shared through FieldPtr.
class Field {
 public:
  /// Builds GF(p^k) with the least irreducible monic modulus, where monic
  /// polynomials are ordered by their packed lower coefficients.
  static std::shared_ptr<const Field> build(unsigned p, unsigned k);

  /// Builds GF(p^k) for an explicit modulus (coefficients low to high,
  /// length k+1, monic). Throws if the modulus is reducible.
  static std::shared_ptr<const Field> with_modulus(unsigned p,
                                                   std::vector<unsigned> modulus);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// x -> x^(p^e).
  Elem frobenius(Elem x, unsigned e = 1) const;

  /// Canonical primitive element: the least index of multiplicative order q-1.
  Elem primitive_element() const { return primitive_; }

  std::uint64_t multiplicative_order(Elem a) const;

  /// True when x lies in the subfield GF(p^e), i.e. x^(p^e) = x.
  bool in_subfield(Elem x, unsigned e) const { return frobenius(x, e) == x; }

  /// Image of an integer in the prime subfield.
  Elem from_int(long long v) const;

  std::string to_string(Elem x) const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  Field(unsigned p, unsigned k, std::vector<unsigned> modulus);

  Elem slow_mul(Elem a, Elem b) const;
  Elem digit_add(Elem a, Elem b) const;

  unsigned p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<unsigned> modulus_;
  Elem primitive_ = 1;

  bool full_tables_ = false;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint16_t> add_table_;
  std::vector<Elem> inv_;
  std::vector<Elem> neg_;
  std::vector<Elem> frob_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Element of multiplicative order exactly r: a power of the canonical
/// primitive element. Requires r | q - 1.
Elem primitive_root_of_unity(const Field& field, unsigned r);

/// Lexicographically least (alpha, beta) by index with alpha^2 + beta^2 = -1.
std::pair<Elem, Elem> find_sum_of_squares(const Field& field);

/// Prime factors of n with multiplicity, ascending.
std::vector<std::uint64_t> factorize(std::uint64_t n);

}  // namespace irrbase
