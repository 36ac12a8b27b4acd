#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "irrbase/group.hpp"

namespace irrbase {

/// The matrix of an element of a linear action: row i is the image of e_i.
/// Valid for every element acting GF(q)-linearly on the context's space.
Matrix element_matrix(const GroupElement& g, const ActionContext& ctx);

/// Dimension of the submodule generated by v.
unsigned spin_dimension(const GroupHandle& g, std::span<const Elem> v);

/// No proper nonzero invariant subspace: every orbit representative of a
/// nonzero vector spins up to the whole space.
bool is_irreducible(const GroupHandle& g);

/// The enveloping algebra has dimension d^2.
bool is_absolutely_irreducible(const GroupHandle& g);

/// True when every nonzero point in `pts` lies outside the span of the
/// earlier ones (zero vectors are skipped).
bool nonzero_points_independent(const ActionContext& ctx, std::span<const PointCode> pts);

enum class Primitivity { Primitive, Imprimitive, Unknown };

struct PrimitivityResult {
  Primitivity verdict = Primitivity::Unknown;
  unsigned block_dimension = 0;  // for Imprimitive: dimension of one block
  Matrix block;                  // for Imprimitive: a basis of one block
};

/// Brute-force search for a system of imprimitivity V = V_1 + ... + V_k
/// (k >= 2) of an irreducible group, over all subspaces of each proper
/// dimension dividing d. Gives up (Unknown) past `subspace_limit` subspaces.
PrimitivityResult linear_primitivity(const GroupHandle& g, std::uint64_t subspace_limit = 2'000'000);

}  // namespace irrbase
