#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "irrbase/constructions.hpp"

namespace irrbase {

// ---------------------------------------------------------------------------
// The wreath group H = GammaL_1(4) wr (S_4 wr S_3) on GF(4)^12. A point is a
// 24-bit code: twelve GF(4) digits, coordinate 1 in the top two bits. Chunks
// are coordinates 1-4, 5-8 and 9-12.

inline constexpr std::uint32_t kCensusPoints = 1u << 24;

/// Builds a point from its twelve GF(4) digits (0, 1, w = 2, w^2 = 3).
std::uint32_t census_code(const std::array<unsigned, 12>& digits);
unsigned census_digit(std::uint32_t code, unsigned coordinate);  // 0-based

struct ChunkProfile {
  std::array<unsigned, 3> zeros{};  // per chunk
  std::string signature;            // sorted zero counts, e.g. "0-1-2"
};
ChunkProfile chunk_profile(std::uint32_t code);

/// Fixed points of the case analysis: v1 = (1,1,1,0), v2 = (1,1,1,1) and
/// w = (v2, v1, (0,0,1,1)).
std::array<unsigned, 4> chunk_v1();
std::array<unsigned, 4> chunk_v2();
std::uint32_t point_w();
std::uint32_t census_point(const std::array<unsigned, 4>& a, const std::array<unsigned, 4>& b,
                           const std::array<unsigned, 4>& c);

struct CensusRecord {
  std::uint32_t representative = 0;  // least code of the orbit
  std::uint64_t size = 0;
  BigInt stabilizer_order;
  ChunkProfile profile;
};

struct CensusOptions {
  unsigned threads = 1;
  /// Bytes. With less than the per-point owner table needs, the census runs
  /// single-threaded on a visited bitset.
  std::uint64_t memory_budget = std::uint64_t{1} << 30;
};

struct Census {
  BigInt group_order;
  std::vector<CensusRecord> records;  // by representative
  std::vector<std::uint8_t> orbit_of;  // record index per point
  bool profiles_constant = true;       // every orbit member shares its signature
  unsigned threads_used = 1;
};

Census run_census(const CensusOptions& options = {});

/// rep_code,orbit_size,stab_order,chunk_signature
std::string census_csv(const Census& c);

BigInt stabilizer_order_of(const Census& c, std::uint32_t v);
/// Without a census: one orbit by breadth-first search.
BigInt stabilizer_order_of(std::uint32_t v);

struct LargestOrbitReport {
  std::uint64_t largest_size = 0;
  BigInt least_stabilizer;  // min |H_v| over all v
  struct Entry {
    std::uint32_t representative;
    bool two_zero_chunk;  // some chunk has at least two zero coordinates
    bool w_equivalent;    // in the orbit of w
  };
  std::vector<Entry> largest;
  bool w_in_largest = false;
  /// Every largest-orbit representative has a two-zero chunk or lies in w's
  /// orbit.
  bool all_largest_covered = false;
  /// Every vector with no chunk holding two zeros has |H_v| >= |H_w|.
  bool few_zero_bound_holds = false;
};

LargestOrbitReport largest_orbit_analysis(const Census& c);

struct EmbedKReport {
  std::uint32_t u = 0;
  unsigned coordinate_a = 0, coordinate_b = 0;  // 0-based, same chunk
  std::size_t k_order = 0;
  bool generators_in_h = false;
  bool generators_fix_u = false;
  unsigned pairs_checked = 0;
  unsigned pairs_with_nontrivial_stabilizer = 0;
  bool passes() const {
    return k_order == 72 && generators_in_h && generators_fix_u && pairs_checked == 256 &&
           pairs_with_nontrivial_stabilizer == 256;
  }
};

/// Embeds K = Gamma wr S_2 on two zero coordinates of one chunk of u and checks
/// that no pair of points of U = GF(4)^2 has trivial K-stabilizer. Throws
/// std::invalid_argument when u has no chunk with two zeros.
EmbedKReport embed_K_and_check(std::uint32_t u);

/// K = Gamma wr S_2 acting on GF(4)^2.
GroupHandle build_k_group();

struct CounterexampleReport {
  BigInt h_order;
  BigInt p_order_enumerated;
  bool gamma_transitive = false;
  bool sizes_partition = false;
  bool stabilizers_divide = false;
  bool profiles_constant = false;
  BigInt w_stabilizer;
  struct CaseRow {
    std::string label;
    std::uint32_t point;
    BigInt formula;
    BigInt census;
  };
  std::vector<CaseRow> case_table;
  LargestOrbitReport largest;
  std::vector<EmbedKReport> embeddings;  // w, then other largest reps with a two-zero chunk
  unsigned sampled_members = 0;
  bool sampled_members_pass = false;
  std::size_t b_k = 0;
  /// Greedy on H can start at w and then needs at least b(K) more points.
  bool greedy_at_least_4 = false;
  bool verdict = false;  // G(G) >= 5
  nlohmann::json to_json() const;
};

CounterexampleReport verify_greedy_counterexample(const Census& c);

// ---------------------------------------------------------------------------
// Odd-order instances H = L wr T, L the odd part of GammaL_1(p^l), T = C_k.

struct OddInstance {
  unsigned p = 7, l = 1, k = 3;
  std::string to_string() const;
};

struct OddOrderReport {
  OddInstance instance;
  std::string group;
  BigInt order;
  bool odd_order = false;
  bool irreducible = false;
  std::size_t b = 0, greedy = 0;
  bool exact = true;
  bool b_equals_greedy = false;
  // the mechanism on v, the least point of a largest orbit
  std::uint64_t v = 0, u = 0;
  std::uint32_t gluck_q1 = 0;
  bool orbits_not_self_negative = false;  // every nonzero L-orbit differs from its negative
  bool hu_in_k = false;
  bool hv_in_k = false;
  bool hv_equals_hu = false;
  bool stabilizers_have_regular_orbit = false;  // GammaL_1(p^l)_x for every x != 0
  bool hv_regular_orbit = false;
  bool passes() const {
    return odd_order && irreducible && b_equals_greedy && orbits_not_self_negative && hu_in_k && hv_in_k &&
           hv_equals_hu && stabilizers_have_regular_orbit && hv_regular_orbit;
  }
  nlohmann::json to_json() const;
};

std::vector<OddInstance> default_odd_instances();
OddOrderReport verify_odd_order_instance(const OddInstance& instance);

}  // namespace irrbase
