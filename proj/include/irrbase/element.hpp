#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "irrbase/field.hpp"
#include "irrbase/linalg.hpp"

namespace irrbase {

/// The set the group acts on: {0, ..., degree-1}. For linear actions the
/// points are packed vectors of GF(q)^dimension.
struct ActionContext {
  std::uint64_t degree = 0;
  FieldPtr field;          // set for linear actions
  unsigned dimension = 0;  // 0 when the action is not on a vector space

  bool is_linear() const { return field != nullptr && dimension > 0; }

  static ActionContext points(std::uint64_t n) { return ActionContext{n, nullptr, 0}; }
  static ActionContext vectors(FieldPtr f, unsigned d);

  std::string describe_point(PointCode pt) const;
};

/// GF(q^d) identified with GF(q)^d through the basis X^{d-1}, ..., X, 1 of
/// the canonical modulus, X being the polynomial variable. For prime q the
/// point code of an element equals its field index.
class SemilinearSpace {
 public:
  static std::shared_ptr<const SemilinearSpace> build(std::uint32_t q, unsigned d);

  const Field& big_field() const { return *big_; }
  const FieldPtr& big_field_ptr() const { return big_; }
  const FieldPtr& base_field() const { return base_; }
  std::uint32_t q() const { return base_->order(); }
  unsigned dimension() const { return d_; }
  /// Degree of the base field over the prime field.
  unsigned base_degree() const { return base_->degree(); }
  std::uint32_t size() const { return big_->order(); }

  Elem element_of(PointCode code) const { return code_to_index_[code]; }
  PointCode code_of(Elem x) const { return index_to_code_[x]; }

 private:
  SemilinearSpace() = default;
  FieldPtr big_;
  FieldPtr base_;
  unsigned d_ = 1;
  std::vector<Elem> code_to_index_;
  std::vector<PointCode> index_to_code_;
};

using SemilinearSpacePtr = std::shared_ptr<const SemilinearSpace>;

struct PermElement {
  std::vector<std::uint32_t> images;
};

struct MatrixElement {
  Matrix matrix;
};

/// x -> coeff * x^(p^frob) on GF(q^d), p the characteristic.
struct SemilinearElement {
  SemilinearSpacePtr space;
  Elem coeff = 1;
  unsigned frob = 0;
};

class GroupElement;

/// (c_1, ..., c_k; sigma): block i is moved by c_i and then carried to
/// block sigma(i). Blocks are mixed-radix digits, block 1 most significant.
/// Blocks of different sizes are allowed only with sigma = id (direct products).
struct WreathElement {
  std::vector<GroupElement> components;
  std::vector<std::uint32_t> top;
  std::vector<std::uint64_t> radix;
};

enum class ElementKind { Perm, Matrix, Semilinear, Wreath };

class GroupElement {
 public:
  using Variant = std::variant<PermElement, MatrixElement, SemilinearElement, WreathElement>;

  GroupElement() = default;
  GroupElement(PermElement e) : v_(std::move(e)) {}
  GroupElement(MatrixElement e) : v_(std::move(e)) {}
  GroupElement(SemilinearElement e) : v_(std::move(e)) {}
  GroupElement(WreathElement e) : v_(std::move(e)) {}

  static GroupElement perm(std::vector<std::uint32_t> images) { return PermElement{std::move(images)}; }
  static GroupElement matrix(Matrix m);
  /// The semilinear map v -> (alpha v)^(phi^j), phi the p-th power map.
  static GroupElement semilinear(SemilinearSpacePtr space, Elem alpha, unsigned j);
  static GroupElement wreath(std::vector<GroupElement> components, std::vector<std::uint32_t> top,
                             std::vector<std::uint64_t> radix);
  /// Identity permutation of n points given as 1-based cycles.
  static GroupElement from_cycles(std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& cycles);

  ElementKind kind() const { return static_cast<ElementKind>(v_.index()); }
  const Variant& variant() const { return v_; }
  template <class T>
  const T& as() const { return std::get<T>(v_); }

  /// Image of pt under this element.
  PointCode apply(PointCode pt) const;

  bool is_identity() const;
  bool operator==(const GroupElement& other) const;
  std::size_t hash() const;

  /// Number of points the element is defined on.
  std::uint64_t degree() const;

  std::string to_string() const;

 private:
  Variant v_;
};

/// Right action: apply(compose(a, b), p) == apply(b, apply(a, p)).
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);
GroupElement identity_like(const GroupElement& g);
GroupElement power(const GroupElement& g, std::uint64_t e);

/// Checks element and context agree on the domain; throws otherwise.
PointCode apply(const GroupElement& g, PointCode pt, const ActionContext& ctx);

/// The explicit permutation of {0..degree-1}. Refuses degrees above 2^16 unless
/// `limit` is raised, so the big structured actions never expand by accident.
GroupElement to_permutation(const GroupElement& g, std::uint64_t degree, std::uint64_t limit = 1u << 16);

inline constexpr std::uint64_t kExpandLimit = 1u << 16;

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

}  // namespace irrbase
