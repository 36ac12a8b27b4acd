#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "irrbase/counting.hpp"
#include "irrbase/element.hpp"

namespace irrbase {

/// Upper limit on the degree for which stabilizer chains are built. The
/// default can be raised through ChainOptions or IRRBASE_CHAIN_LIMIT.
std::uint64_t default_chain_limit();

/// Base points, strong generators and Schreier vectors of a group. Level i
/// holds generators of the pointwise stabilizer of the first i base points
/// and the orbit of base point i under them.
class StabilizerChain {
 public:
  struct Level {
    PointCode base_point = 0;
    std::vector<GroupElement> generators;
    std::vector<GroupElement> inverses;
    std::vector<PointCode> orbit;
    /// Schreier vector: for orbit points, the generator that first reached
    /// them (-1 at the base point); -2 off the orbit.
    std::vector<std::int32_t> schreier;
  };

  StabilizerChain(std::uint64_t degree, GroupElement identity) : degree_(degree), identity_(std::move(identity)) {}

  std::uint64_t degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }
  std::vector<PointCode> base() const;
  BigInt order() const;
  /// Order of the pointwise stabilizer of the first `level` base points.
  BigInt order_from(std::size_t level) const;
  const GroupElement& identity() const { return identity_; }

  /// Sifts g through the chain starting at `from`; returns the residue and the
  /// level where sifting stopped (levels().size() when it passed every level).
  std::pair<GroupElement, std::size_t> strip(GroupElement g, std::size_t from = 0) const;
  bool contains(const GroupElement& g) const;
  bool in_orbit(std::size_t level, PointCode pt) const;
  /// An element mapping the base point of `level` to pt.
  GroupElement transversal(std::size_t level, PointCode pt) const;

  /// The chain of the pointwise stabilizer of the first `level` base points.
  StabilizerChain tail(std::size_t level) const;

  // Construction helpers used by the Schreier-Sims drivers.
  void append_level(PointCode base_point);
  void add_generator(std::size_t level, const GroupElement& g);

 private:
  void extend_orbit(Level& level, std::size_t first_new_generator);

  std::uint64_t degree_;
  GroupElement identity_;
  std::vector<Level> levels_;
};

struct ChainOptions {
  /// Use the handle's exact order as the target of a randomized build; the
  /// result is exact because sifting can never overshoot the true order.
  bool use_known_order = true;
  std::vector<PointCode> base_prefix;
  std::uint64_t seed = 0x5eed;
  std::uint64_t degree_limit = 0;  // 0: default_chain_limit()
};

/// Generator list, action, exact order when known, and a lazily built chain.
/// Copies share the cached chain; a handle is immutable once published.
class GroupHandle {
 public:
  GroupHandle(ActionContext ctx, std::vector<GroupElement> generators, std::string label = {});

  /// Declares the exact order (closed formula or an earlier exact computation).
  GroupHandle& with_order(BigInt order);
  /// Installs a chain known to be correct for these generators (used for
  /// stabilizers, whose chain is a tail of the parent's).
  GroupHandle& with_chain(StabilizerChain chain);

  const ActionContext& context() const { return ctx_; }
  std::uint64_t degree() const { return ctx_.degree; }
  const std::vector<GroupElement>& generators() const { return gens_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  const std::optional<BigInt>& declared_order() const { return order_; }
  /// The declared order, or the chain order when none was declared.
  BigInt order() const;
  bool is_trivial() const;

  /// The chain with default options, built once and cached.
  const StabilizerChain& chain() const;
  bool has_cached_chain() const;

  /// Generators as explicit permutations when degree <= 2^16, else as given.
  const std::vector<GroupElement>& action_generators() const;

  GroupElement identity() const;

 private:
  struct Cache {
    std::once_flag chain_once;
    std::unique_ptr<StabilizerChain> chain;
    std::once_flag perm_once;
    std::vector<GroupElement> action_gens;
  };

  ActionContext ctx_;
  std::vector<GroupElement> gens_;
  std::string label_;
  std::optional<BigInt> order_;
  std::shared_ptr<Cache> cache_;
};

/// Builds a verified chain: every generator and a batch of random products
/// strip to the identity.
StabilizerChain schreier_sims(const GroupHandle& g, const ChainOptions& options = {});

/// The pointwise stabilizer of pts (in order), with exact order.
GroupHandle pointwise_stabilizer(const GroupHandle& g, std::span<const PointCode> pts);

struct Orbit {
  std::vector<PointCode> points;  // BFS order, seed first
  std::uint64_t size() const { return points.size(); }
};

Orbit orbit(const GroupHandle& g, PointCode seed);

struct OrbitSummary {
  PointCode representative;  // least point code in the orbit
  std::uint64_t size;
};

inline constexpr std::uint64_t kOrbitPartitionLimit = std::uint64_t{1} << 28;

/// All orbits with least representatives, ordered by representative.
std::vector<OrbitSummary> orbit_partition(const GroupHandle& g);

/// Omega(|G|): an upper bound for the length of any subgroup chain.
unsigned subgroup_chain_bound(const GroupHandle& g);

/// Product-replacement random elements, deterministic for a fixed seed.
class RandomElements {
 public:
  RandomElements(const std::vector<GroupElement>& generators, std::uint64_t seed);
  GroupElement next();

 private:
  std::vector<GroupElement> state_;
  GroupElement accumulator_;
  std::uint64_t rng_;
  std::uint64_t draw();
};

}  // namespace irrbase
