#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "irrbase/group.hpp"

namespace irrbase {

/// Thrown when a construction's parameters violate its existence conditions.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Variant { Plus, Minus, Symplectic };

struct ExtraspecialSpec {
  unsigned r = 2;
  unsigned m = 1;
  std::uint32_t q = 5;
  Variant variant = Variant::Plus;

  unsigned dimension() const;
  /// r^{1+2m}, or 2^{2+2m} for the symplectic type.
  BigInt order() const;
  std::string to_string() const;  // E(r,m,q,+|-|s)
};

/// Throws PreconditionError naming the violated condition.
void validate(const ExtraspecialSpec& spec);

/// The explicit matrices: x[i-1] = x_i = I_{r^{m-i}} (x) x (x) I_{r^{i-1}},
/// likewise y; x1p, y1p only for r = 2; z only when 4 | q-1.
struct ExtraspecialMatrices {
  FieldPtr field;
  unsigned dim = 0;
  Elem omega = 0;
  std::vector<Matrix> x, y;
  std::optional<Matrix> x1p, y1p, z;
};

ExtraspecialMatrices extraspecial_matrices(const ExtraspecialSpec& spec);

/// Generators per variant: plus {x_i, y_i}; symplectic adds z; minus uses
/// x1', y1' in place of x_1, y_1.
std::vector<Matrix> extraspecial_generators(const ExtraspecialSpec& spec);

GroupHandle build_extraspecial(const ExtraspecialSpec& spec);

struct RelationCheck {
  std::string relation;
  bool holds = false;
};

/// Commutator relations among the x_i, y_i (and x1', y1'), plus the
/// isomorphism types of <x_i, y_i> and <x1', y1'>, checked by computation.
std::vector<RelationCheck> check_extraspecial_relations(const ExtraspecialSpec& spec);

/// T = E_1 (x) ... (x) E_l on the tensor product, each factor's generators
/// Kronecker-positioned. Primes must be distinct and the field shared.
GroupHandle build_tensor_product(const std::vector<ExtraspecialSpec>& specs);

/// GL_1(q) acting on GF(q)^1.
GroupHandle build_gl1(std::uint32_t q);

/// GammaL_1(q^d) = {v -> (a v)^(phi^j)}, phi: x -> x^q, acting GF(q)-linearly
/// on GF(q)^d. Order d(q^d - 1).
GroupHandle build_semilinear(std::uint32_t q, unsigned d);

/// The largest odd-order subgroup of GammaL_1(q^d): multipliers of odd order
/// and the odd part of the Galois group over GF(q).
GroupHandle build_semilinear_odd(std::uint32_t q, unsigned d);

GroupHandle build_symmetric(unsigned k);
GroupHandle build_cyclic(unsigned k);

/// L wr T. For a linear L on GF(q)^m: the imprimitive action on
/// GF(q)^{mk} = V_1 + ... + V_k. For a permutation group L on n points: the
/// imprimitive action on n*k points. Order |L|^k |T|.
GroupHandle build_wreath(const GroupHandle& l, const GroupHandle& t);

/// Direct product acting on V_1 + V_2 (linear) or the disjoint union.
GroupHandle build_direct_product(const GroupHandle& a, const GroupHandle& b);

/// The wreath group GammaL_1(4) wr (S_4 wr S_3) on GF(4)^12, viewed as a
/// subgroup of GL_24(2). Six generators; order 6^12 * 82944.
GroupHandle build_counterexample();

/// A point sequence with the stabilizer orders it is claimed to produce:
/// expected_orders[i] is the order after fixing the first i points.
struct WitnessSequence {
  std::string claim;
  std::vector<PointCode> points;
  std::vector<BigInt> expected_orders;
  bool claims_base = false;
};

/// (w_0, ..., w_m) with w_i = e_1^{(x)(m-i)} (x) e_2^{(x)i}; for the minus type
/// (w_0, w_2, ..., w_m).
WitnessSequence witness_extraspecial_base(const ExtraspecialSpec& spec);

/// B = (v_0, ..., v_t): v_0 = 1 and v_i the least point code in
/// GF(q^{f_1...f_i}) minus GF(q^{f_1...f_{i-1}}), f_1 <= ... <= f_t the prime
/// factors of d.
WitnessSequence witness_semilinear_chain(std::uint32_t q, unsigned d);

/// S = (v_11, ..., v_1I_1, v_22, ..., v_2I_2, ..., v_lI_l) with
/// v_jt = w_1^1 (x) ... (x) w_t^j (x) ... (x) w_1^l. Factor witnesses must be
/// irredundant bases of the factors, with exact expected orders.
WitnessSequence witness_tensor_sequence(const std::vector<ExtraspecialSpec>& specs,
                                        const std::vector<WitnessSequence>& factors);

/// Least bitmask Q_1 of {1..k} (bit i-1 for point i) whose setwise stabilizer
/// in T is trivial; nullopt if none exists.
std::optional<std::uint32_t> find_gluck_partition(const GroupHandle& t);

}  // namespace irrbase
