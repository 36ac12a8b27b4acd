#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "irrbase/group.hpp"

namespace irrbase {

enum class Statistic { MinBase, MaxIrredundant, GreedyMax, GreedyRun };
std::string to_string(Statistic s);

/// Chain: stabilizer chains and orbit partitions on all points.
/// Lattice: linear groups of enumerable order; point stabilizers are read off
/// the intersection lattice of the elements' fixed spaces, so the degree can
/// be far beyond what orbit partitions allow.
enum class Engine { Auto, Chain, Lattice };
std::string to_string(Engine e);

struct SearchOptions {
  std::uint64_t node_budget = 10'000'000;
  Engine engine = Engine::Auto;
};

struct BaseReport {
  Statistic statistic = Statistic::MinBase;
  std::string group;
  std::vector<PointCode> sequence;
  /// |G|, |G_{p1}|, |G_{(p1,p2)}|, ...
  std::vector<BigInt> order_chain;
  /// False when the node budget ran out; the value is then only a bound
  /// (lower for maxima, upper for minima).
  bool exact = true;
  std::uint64_t nodes = 0;
  double millis = 0;
  Engine engine = Engine::Auto;

  std::size_t value() const { return sequence.size(); }
};

/// JSON form; `timing` adds the wall time (left out where output must be
/// reproducible byte for byte).
nlohmann::json to_json(const BaseReport& r, const ActionContext& ctx, bool timing = true);

struct IrredundanceResult {
  std::vector<BigInt> order_chain;           // one entry per verified prefix
  std::optional<std::size_t> failure_index;  // first point giving no strict drop
  bool is_base = false;                      // irredundant and ends at 1
  bool irredundant() const { return !failure_index; }
};

IrredundanceResult verify_irredundant(const GroupHandle& g, std::span<const PointCode> seq);

/// Exact I(G) with a witness.
BaseReport max_irredundant(const GroupHandle& g, const SearchOptions& options = {});
/// Exact b(G) with a witness.
BaseReport min_base(const GroupHandle& g, const SearchOptions& options = {});
/// Largest base produced by the greedy rule over all tie-breaks.
BaseReport greedy_max(const GroupHandle& g, const SearchOptions& options = {});
/// One greedy base, least point of a longest orbit at every step (Lattice
/// engine: least witness point among the longest orbit types).
BaseReport greedy_run(const GroupHandle& g, const SearchOptions& options = {});

/// From a report on the zero stabilizer H to the affine group V : H of
/// degree |V|: prepend the zero vector and |V||H|.
BaseReport affine_adjust(const BaseReport& h, std::uint64_t space_size);

/// I(S) <= I(G) and I(G) <= I(N) + Omega(|G|/|N|) for S <= G and N normal.
struct InequalityReport {
  std::string label;
  std::size_t i_s = 0, i_g = 0, i_n = 0;
  unsigned quotient_bound = 0;  // Omega(|G:N|)
  bool subgroup_holds = false;
  bool normal_holds = false;
  bool exact = true;
};

InequalityReport check_subgroup_inequalities(const GroupHandle& g, const GroupHandle& s, const GroupHandle& n,
                            const SearchOptions& options = {});

}  // namespace irrbase
