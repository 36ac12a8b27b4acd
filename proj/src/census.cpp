#include "irrbase/census.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "irrbase/base_search.hpp"
#include "irrbase/enumerate.hpp"
#include "irrbase/linear.hpp"

namespace irrbase {

// ---------------------------------------------------------------------------
// Points and chunks

std::uint32_t census_code(const std::array<unsigned, 12>& digits) {
  std::uint32_t c = 0;
  for (unsigned d : digits) {
    if (d > 3) throw std::invalid_argument("GF(4) digit out of range");
    c = c << 2 | d;
  }
  return c;
}

unsigned census_digit(std::uint32_t code, unsigned coordinate) { return code >> (2 * (11 - coordinate)) & 3u; }

namespace {

unsigned profile_key(std::uint32_t code) {
  std::array<unsigned, 3> z{};
  for (unsigned i = 0; i < 12; ++i) z[i / 4] += census_digit(code, i) == 0;
  std::sort(z.begin(), z.end());
  return z[0] * 25 + z[1] * 5 + z[2];
}

}  // namespace

ChunkProfile chunk_profile(std::uint32_t code) {
  ChunkProfile p;
  for (unsigned i = 0; i < 12; ++i) p.zeros[i / 4] += census_digit(code, i) == 0;
  auto s = p.zeros;
  std::sort(s.begin(), s.end());
  p.signature = std::to_string(s[0]) + "-" + std::to_string(s[1]) + "-" + std::to_string(s[2]);
  return p;
}

std::array<unsigned, 4> chunk_v1() { return {1, 1, 1, 0}; }
std::array<unsigned, 4> chunk_v2() { return {1, 1, 1, 1}; }

std::uint32_t census_point(const std::array<unsigned, 4>& a, const std::array<unsigned, 4>& b,
                           const std::array<unsigned, 4>& c) {
  std::array<unsigned, 12> d{};
  for (unsigned i = 0; i < 4; ++i) {
    d[i] = a[i];
    d[4 + i] = b[i];
    d[8 + i] = c[i];
  }
  return census_code(d);
}

std::uint32_t point_w() { return census_point(chunk_v2(), chunk_v1(), {0, 0, 1, 1}); }

// ---------------------------------------------------------------------------
// Census

namespace {

// Each generator sends digit i to position top[i] through a map fixing 0, so
// the image of a code is the OR of the images of its three bytes.
struct FastAction {
  std::vector<std::array<std::array<std::uint32_t, 256>, 3>> tables;

  explicit FastAction(const GroupHandle& h) {
    for (const auto& g : h.generators()) {
      auto& t = tables.emplace_back();
      for (unsigned j = 0; j < 3; ++j)
        for (std::uint32_t b = 0; b < 256; ++b) t[j][b] = static_cast<std::uint32_t>(g.apply(PointCode(b) << (8 * (2 - j))));
      std::mt19937 rng(0xc0de);
      for (int k = 0; k < 2000; ++k) {
        const std::uint32_t x = rng() & (kCensusPoints - 1);
        if (image(tables.size() - 1, x) != g.apply(x)) throw std::logic_error("generator is not digit-separable");
      }
    }
  }

  std::uint32_t image(std::size_t g, std::uint32_t x) const {
    const auto& t = tables[g];
    return t[0][x >> 16] | t[1][(x >> 8) & 0xff] | t[2][x & 0xff];
  }
  std::size_t size() const { return tables.size(); }
};

struct OrbitResult {
  std::uint32_t seed;
  std::uint64_t size;
  bool profile_ok;
};

void census_single(const FastAction& act, Census& out, std::vector<OrbitResult>& orbits) {
  std::vector<std::uint32_t> queue;
  queue.reserve(1u << 22);
  for (std::uint32_t s = 0; s < kCensusPoints; ++s) {
    if (out.orbit_of[s] != 0xff) continue;
    const auto idx = static_cast<std::uint8_t>(orbits.size());
    if (orbits.size() >= 0xff) throw std::logic_error("more orbits than the census index holds");
    const unsigned key = profile_key(s);
    bool ok = true;
    out.orbit_of[s] = idx;
    queue.assign(1, s);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const std::uint32_t x = queue[k];
      ok = ok && profile_key(x) == key;
      for (std::size_t g = 0; g < act.size(); ++g) {
        const std::uint32_t y = act.image(g, x);
        if (out.orbit_of[y] == 0xff) {
          out.orbit_of[y] = idx;
          queue.push_back(y);
        }
      }
    }
    orbits.push_back({s, queue.size(), ok});
  }
}

// Several threads take seeds in increasing order and label points with their
// seed, lowering labels only. A search that meets a smaller label stops: the
// orbit belongs to a smaller seed. A search that completes with a point below
// its seed is discarded. Only the least point of each orbit keeps its result,
// so the outcome does not depend on scheduling.
void census_parallel(const FastAction& act, unsigned threads, Census& out, std::vector<OrbitResult>& orbits) {
  constexpr std::uint32_t kFree = 0xffffffffu;
  std::vector<std::atomic<std::uint32_t>> owner(kCensusPoints);
  for (auto& o : owner) o.store(kFree, std::memory_order_relaxed);
  std::atomic<std::uint32_t> next{0};
  std::vector<std::vector<OrbitResult>> found(threads);

  auto lower = [&](std::uint32_t p, std::uint32_t s) {
    // 1: claimed now, 0: already ours, -1: owned by a smaller seed
    std::uint32_t c = owner[p].load(std::memory_order_relaxed);
    while (c > s)
      if (owner[p].compare_exchange_weak(c, s, std::memory_order_relaxed)) return 1;
    return c == s ? 0 : -1;
  };

  auto worker = [&](unsigned t) {
    std::vector<std::uint32_t> queue;
    constexpr std::uint32_t kBatch = 4096;
    for (;;) {
      const std::uint32_t lo = next.fetch_add(kBatch);
      if (lo >= kCensusPoints) break;
      for (std::uint32_t s = lo; s < lo + kBatch; ++s) {
        if (owner[s].load(std::memory_order_relaxed) < s) continue;
        if (lower(s, s) < 0) continue;
        queue.assign(1, s);
        bool aborted = false, below = false, ok = true;
        const unsigned key = profile_key(s);
        for (std::size_t k = 0; k < queue.size() && !aborted; ++k) {
          const std::uint32_t x = queue[k];
          ok = ok && profile_key(x) == key;
          for (std::size_t g = 0; g < act.size(); ++g) {
            const std::uint32_t y = act.image(g, x);
            const int r = lower(y, s);
            if (r < 0) {
              aborted = true;
              break;
            }
            if (r > 0) {
              queue.push_back(y);
              below = below || y < s;
            }
          }
        }
        if (!aborted && !below) found[t].push_back({s, queue.size(), ok});
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  for (auto& th : pool) th.join();

  for (auto& f : found) orbits.insert(orbits.end(), f.begin(), f.end());
  std::sort(orbits.begin(), orbits.end(), [](const OrbitResult& a, const OrbitResult& b) { return a.seed < b.seed; });
  if (orbits.size() >= 0xff) throw std::logic_error("more orbits than the census index holds");
  std::unordered_map<std::uint32_t, std::uint8_t> index;
  for (std::size_t i = 0; i < orbits.size(); ++i) index[orbits[i].seed] = static_cast<std::uint8_t>(i);
  for (std::uint32_t p = 0; p < kCensusPoints; ++p) out.orbit_of[p] = index.at(owner[p].load(std::memory_order_relaxed));
}

}  // namespace

Census run_census(const CensusOptions& options) {
  const GroupHandle h = build_counterexample();
  const FastAction act(h);
  Census out;
  out.group_order = *h.declared_order();
  out.orbit_of.assign(kCensusPoints, 0xff);
  std::vector<OrbitResult> orbits;
  const std::uint64_t parallel_bytes = std::uint64_t{kCensusPoints} * 5 + (std::uint64_t{1} << 26);
  const unsigned threads = std::max(1u, options.threads);
  if (threads > 1 && options.memory_budget >= parallel_bytes) {
    out.threads_used = threads;
    census_parallel(act, threads, out, orbits);
  } else {
    out.threads_used = 1;
    census_single(act, out, orbits);
  }
  for (const auto& o : orbits) {
    CensusRecord r;
    r.representative = o.seed;
    r.size = o.size;
    r.stabilizer_order = out.group_order / o.size;
    if (r.stabilizer_order * o.size != out.group_order) throw std::logic_error("orbit size does not divide |H|");
    r.profile = chunk_profile(o.seed);
    out.profiles_constant = out.profiles_constant && o.profile_ok;
    out.records.push_back(std::move(r));
  }
  return out;
}

std::string census_csv(const Census& c) {
  std::ostringstream s;
  s << "rep_code,orbit_size,stab_order,chunk_signature\n";
  for (const auto& r : c.records)
    s << r.representative << ',' << r.size << ',' << to_string(r.stabilizer_order) << ',' << r.profile.signature << '\n';
  return s.str();
}

BigInt stabilizer_order_of(const Census& c, std::uint32_t v) {
  if (v >= kCensusPoints) throw std::out_of_range("point outside GF(4)^12");
  return c.records.at(c.orbit_of[v]).stabilizer_order;
}

BigInt stabilizer_order_of(std::uint32_t v) {
  if (v >= kCensusPoints) throw std::out_of_range("point outside GF(4)^12");
  const GroupHandle h = build_counterexample();
  const FastAction act(h);
  std::vector<bool> seen(kCensusPoints);
  std::vector<std::uint32_t> queue{v};
  seen[v] = true;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::size_t g = 0; g < act.size(); ++g) {
      const std::uint32_t y = act.image(g, queue[k]);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  return *h.declared_order() / queue.size();
}

LargestOrbitReport largest_orbit_analysis(const Census& c) {
  LargestOrbitReport r;
  const std::uint8_t w_orbit = c.orbit_of[point_w()];
  const BigInt& hw = c.records[w_orbit].stabilizer_order;
  r.few_zero_bound_holds = true;
  for (const auto& rec : c.records) {
    r.largest_size = std::max(r.largest_size, rec.size);
    if (r.least_stabilizer == 0 || rec.stabilizer_order < r.least_stabilizer) r.least_stabilizer = rec.stabilizer_order;
    const auto& z = rec.profile.zeros;
    if (*std::max_element(z.begin(), z.end()) <= 1 && rec.stabilizer_order < hw) r.few_zero_bound_holds = false;
  }
  r.all_largest_covered = true;
  for (std::size_t i = 0; i < c.records.size(); ++i) {
    const auto& rec = c.records[i];
    if (rec.size != r.largest_size) continue;
    const auto& z = rec.profile.zeros;
    LargestOrbitReport::Entry e{rec.representative, *std::max_element(z.begin(), z.end()) >= 2, i == w_orbit};
    r.w_in_largest = r.w_in_largest || e.w_equivalent;
    r.all_largest_covered = r.all_largest_covered && (e.two_zero_chunk || e.w_equivalent);
    r.largest.push_back(e);
  }
  return r;
}

// ---------------------------------------------------------------------------
// K = Gamma wr S_2 inside H_u

GroupHandle build_k_group() {
  GroupHandle gamma = build_semilinear(2, 2);
  gamma.set_label("GammaL(1,4)");
  GroupHandle k = build_wreath(gamma, build_symmetric(2));
  k.set_label("GammaL(1,4) wr Sym(2)");
  return k;
}

EmbedKReport embed_K_and_check(std::uint32_t u) {
  EmbedKReport rep;
  rep.u = u;
  bool found = false;
  for (unsigned chunk = 0; chunk < 3 && !found; ++chunk) {
    std::vector<unsigned> zeros;
    for (unsigned i = 4 * chunk; i < 4 * chunk + 4; ++i)
      if (census_digit(u, i) == 0) zeros.push_back(i);
    if (zeros.size() >= 2) {
      rep.coordinate_a = zeros[0];
      rep.coordinate_b = zeros[1];
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("point has no chunk with two zero coordinates");

  const GroupHandle gamma = build_semilinear(2, 2);
  const auto& gg = gamma.generators();
  const GroupElement id = identity_like(gg.front());
  const std::vector<std::uint64_t> radix(12, 4);
  std::vector<std::uint32_t> id_top(12);
  std::iota(id_top.begin(), id_top.end(), 0u);
  std::vector<GroupElement> gens;
  for (unsigned c : {rep.coordinate_a, rep.coordinate_b})
    for (const auto& s : gg) {
      std::vector<GroupElement> comps(12, id);
      comps[c] = s;
      gens.push_back(GroupElement::wreath(std::move(comps), id_top, radix));
    }
  std::vector<std::uint32_t> swap = id_top;
  std::swap(swap[rep.coordinate_a], swap[rep.coordinate_b]);
  gens.push_back(GroupElement::wreath(std::vector<GroupElement>(12, id), swap, radix));

  // membership in Gamma wr (S_4 wr S_3): components from Gamma and a top
  // permutation preserving the chunk system
  rep.generators_in_h = true;
  for (const auto& g : gens) {
    const auto& w = g.as<WreathElement>();
    for (const auto& comp : w.components)
      rep.generators_in_h = rep.generators_in_h &&
                            (comp.is_identity() || std::find(gg.begin(), gg.end(), comp) != gg.end());
    for (unsigned i = 0; i < 12; ++i)
      rep.generators_in_h = rep.generators_in_h && w.top[i] / 4 == w.top[4 * (i / 4)] / 4;
  }
  rep.generators_fix_u = std::all_of(gens.begin(), gens.end(), [&](const GroupElement& g) { return g.apply(u) == u; });

  const auto elements = enumerate_elements(gens);
  if (!elements) throw std::logic_error("K failed to close");
  rep.k_order = elements->size();
  auto embed = [&](unsigned x) {
    std::array<unsigned, 12> d{};
    d[rep.coordinate_a] = x >> 2;
    d[rep.coordinate_b] = x & 3;
    return census_code(d);
  };
  for (unsigned x = 0; x < 16; ++x)
    for (unsigned y = 0; y < 16; ++y) {
      ++rep.pairs_checked;
      const std::uint32_t ex = embed(x), ey = embed(y);
      const bool nontrivial = std::any_of(elements->begin(), elements->end(), [&](const GroupElement& g) {
        return !g.is_identity() && g.apply(ex) == ex && g.apply(ey) == ey;
      });
      rep.pairs_with_nontrivial_stabilizer += nontrivial;
    }
  return rep;
}

// ---------------------------------------------------------------------------
// The verdict

namespace {

BigInt wr(const BigInt& a, unsigned n) { return ipow(a, n) * factorial(n); }

nlohmann::json embed_json(const EmbedKReport& e) {
  return {{"u", e.u},
          {"coordinates", {e.coordinate_a + 1, e.coordinate_b + 1}},
          {"k_order", e.k_order},
          {"generators_in_h", e.generators_in_h},
          {"generators_fix_u", e.generators_fix_u},
          {"pairs_checked", e.pairs_checked},
          {"pairs_with_nontrivial_stabilizer", e.pairs_with_nontrivial_stabilizer},
          {"passes", e.passes()}};
}

}  // namespace

CounterexampleReport verify_greedy_counterexample(const Census& c) {
  CounterexampleReport r;
  const GroupHandle h = build_counterexample();
  r.h_order = *h.declared_order();
  if (r.h_order != c.group_order) throw std::logic_error("census ran on a different group");

  const GroupHandle p = build_wreath(build_symmetric(4), build_symmetric(3));
  r.p_order_enumerated = enumerate_elements(p.generators())->size();

  const GroupHandle gamma = build_semilinear(2, 2);
  const auto o = orbit(gamma, 1);
  r.gamma_transitive = o.size() == 3;

  BigInt total = 0;
  r.stabilizers_divide = true;
  for (const auto& rec : c.records) {
    total += rec.size;
    r.stabilizers_divide = r.stabilizers_divide && rec.stabilizer_order * rec.size == r.h_order;
  }
  r.sizes_partition = total == kCensusPoints;
  r.profiles_constant = c.profiles_constant;
  r.w_stabilizer = stabilizer_order_of(c, point_w());

  const BigInt l = 2, g6 = 6;
  const BigInt l_s3_g = wr(l, 3) * g6;  // (L wr S_3) x Gamma
  const BigInt l_s4 = wr(l, 4);
  const auto v1 = chunk_v1(), v2 = chunk_v2();
  r.case_table = {
      {"(v1,v1,v1)", census_point(v1, v1, v1), wr(l_s3_g, 3), 0},
      {"(v1,v1,v2)", census_point(v1, v1, v2), wr(l_s3_g, 2) * l_s4, 0},
      {"(v2,v2,v1)", census_point(v2, v2, v1), wr(l_s4, 2) * l_s3_g, 0},
      {"(v2,v2,v2)", census_point(v2, v2, v2), wr(l_s4, 3), 0},
      {"w", point_w(), l_s4 * l_s3_g * (wr(l, 2) * wr(g6, 2)), 0},
  };
  for (auto& row : r.case_table) row.census = stabilizer_order_of(c, row.point);

  r.largest = largest_orbit_analysis(c);
  r.embeddings.push_back(embed_K_and_check(point_w()));
  for (const auto& e : r.largest.largest)
    if (e.two_zero_chunk && !e.w_equivalent) r.embeddings.push_back(embed_K_and_check(e.representative));

  // conjugates of w: the embedding works wherever w's chunk structure goes
  RandomElements rnd(h.generators(), 0x77);
  r.sampled_members_pass = true;
  for (int k = 0; k < 100; ++k) {
    const auto x = static_cast<std::uint32_t>(rnd.next().apply(point_w()));
    r.sampled_members_pass = r.sampled_members_pass && c.orbit_of[x] == c.orbit_of[point_w()] && embed_K_and_check(x).passes();
    ++r.sampled_members;
  }

  r.b_k = min_base(build_k_group()).value();
  r.greedy_at_least_4 = r.largest.w_in_largest && r.embeddings.front().passes() && r.b_k >= 3;
  r.verdict = r.greedy_at_least_4 && r.sizes_partition && r.stabilizers_divide && r.gamma_transitive;
  return r;
}

nlohmann::json CounterexampleReport::to_json() const {
  nlohmann::json j;
  j["h_order"] = irrbase::to_string(h_order);
  j["top_group_order_enumerated"] = irrbase::to_string(p_order_enumerated);
  j["gamma_transitive_on_nonzero"] = gamma_transitive;
  j["orbit_sizes_partition_space"] = sizes_partition;
  j["stabilizer_orders_divide"] = stabilizers_divide;
  j["chunk_signature_constant_on_orbits"] = profiles_constant;
  j["w"] = point_w();
  j["w_stabilizer_order"] = irrbase::to_string(w_stabilizer);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : case_table)
    rows.push_back({{"case", row.label},
                    {"point", row.point},
                    {"formula", irrbase::to_string(row.formula)},
                    {"census", irrbase::to_string(row.census)},
                    {"match", row.formula == row.census}});
  j["case_table"] = rows;
  nlohmann::json lo;
  lo["largest_orbit_size"] = largest.largest_size;
  lo["least_stabilizer_order"] = irrbase::to_string(largest.least_stabilizer);
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& e : largest.largest)
    reps.push_back({{"representative", e.representative},
                    {"signature", chunk_profile(e.representative).signature},
                    {"two_zero_chunk", e.two_zero_chunk},
                    {"w_equivalent", e.w_equivalent}});
  lo["largest_orbits"] = reps;
  lo["w_in_a_largest_orbit"] = largest.w_in_largest;
  lo["every_largest_rep_has_two_zero_chunk_or_is_w"] = largest.all_largest_covered;
  lo["few_zero_vectors_have_stabilizer_at_least_w"] = largest.few_zero_bound_holds;
  j["largest_orbits"] = lo;
  nlohmann::json emb = nlohmann::json::array();
  for (const auto& e : embeddings) emb.push_back(embed_json(e));
  j["k_embeddings"] = emb;
  j["sampled_w_conjugates"] = sampled_members;
  j["sampled_w_conjugates_pass"] = sampled_members_pass;
  j["b_K"] = b_k;
  j["greedy_H_at_least_4"] = greedy_at_least_4;
  j["verdict"] = verdict ? "greedy base size of G is at least 5" : "not established";
  return j;
}

// ---------------------------------------------------------------------------
// Odd order

std::string OddInstance::to_string() const {
  return "(p,l,k)=(" + std::to_string(p) + "," + std::to_string(l) + "," + std::to_string(k) + ")";
}

std::vector<OddInstance> default_odd_instances() {
  return {{7, 1, 3}, {13, 1, 3}, {11, 1, 3}, {19, 1, 3}, {7, 1, 5}, {3, 3, 3}};
}

OddOrderReport verify_odd_order_instance(const OddInstance& in) {
  OddOrderReport r;
  r.instance = in;
  const GroupHandle l = build_semilinear_odd(in.p, in.l);
  const GroupHandle t = build_cyclic(in.k);
  const GroupHandle h = build_wreath(l, t);
  r.group = h.label();
  r.order = h.order();
  r.odd_order = r.order % 2 == 1;
  r.irreducible = is_irreducible(h);

  const auto b = min_base(h), g = greedy_max(h);
  r.b = b.value();
  r.greedy = g.value();
  r.exact = b.exact && g.exact;
  r.b_equals_greedy = r.b == r.greedy;

  // v: least point of a largest orbit
  std::uint64_t best = 0;
  for (const auto& o : orbit_partition(h))
    if (o.size > best) {
      best = o.size;
      r.v = o.representative;
    }

  // P_1, P_2 from the nonzero L-orbits
  const std::uint64_t n = l.degree();
  const Field& f = *l.context().field;
  auto neg = [&](std::uint64_t x) {
    auto c = unpack(x, f.order(), in.l);
    for (auto& e : c) e = f.neg(e);
    return pack(c, f.order());
  };
  std::vector<int> part(n, 0);  // 1 or 2; 0 for the zero vector
  r.orbits_not_self_negative = true;
  for (const auto& o : orbit_partition(l)) {
    if (o.representative == 0 || part[o.representative]) continue;
    const auto members = orbit(l, o.representative).points;
    const auto negatives = orbit(l, neg(o.representative)).points;
    if (std::find(members.begin(), members.end(), neg(o.representative)) != members.end())
      r.orbits_not_self_negative = false;
    for (auto x : members) part[x] = 1;
    for (auto x : negatives) part[x] = 2;
  }
  auto least_in = [&](int j) {
    for (std::uint64_t x = 1; x < n; ++x)
      if (part[x] == j) return x;
    throw std::logic_error("empty part");
  };

  const auto q1 = find_gluck_partition(t);
  if (!q1) throw std::logic_error("no partition with trivial setwise stabilizer");
  r.gluck_q1 = *q1;

  std::vector<std::uint64_t> place(in.k), vi(in.k), ui(in.k);
  for (unsigned i = 0; i < in.k; ++i) place[i] = *checked_power(n, in.k - 1 - i);
  for (unsigned i = 0; i < in.k; ++i) {
    vi[i] = r.v / place[i] % n;
    const int j = (*q1 >> i & 1) ? 1 : 2;
    if (vi[i] == 0)
      ui[i] = least_in(j);
    else
      ui[i] = part[vi[i]] == j ? vi[i] : neg(vi[i]);
    r.u += ui[i] * place[i];
  }

  auto in_k = [&](const GroupHandle& s) {
    for (const auto& e : s.generators())
      for (unsigned i = 0; i < in.k; ++i)
        if (e.apply(ui[i] * place[i]) != ui[i] * place[i]) return false;
    return true;
  };
  const PointCode pv[1] = {r.v}, pu[1] = {r.u};
  const GroupHandle hv = pointwise_stabilizer(h, pv), hu = pointwise_stabilizer(h, pu);
  r.hu_in_k = in_k(hu);
  r.hv_in_k = in_k(hv);
  auto fixes = [](const GroupHandle& s, PointCode x) {
    return std::all_of(s.generators().begin(), s.generators().end(), [&](const GroupElement& e) { return e.apply(x) == x; });
  };
  r.hv_equals_hu = hv.order() == hu.order() && fixes(hv, r.u) && fixes(hu, r.v);

  const GroupHandle full = build_semilinear(in.p, in.l);
  r.stabilizers_have_regular_orbit = true;
  for (PointCode x = 1; x < n; ++x) {
    const PointCode px[1] = {x};
    const GroupHandle s = pointwise_stabilizer(full, px);
    const BigInt so = s.order();
    bool regular = false;
    for (const auto& o : orbit_partition(s)) regular = regular || BigInt(o.size) == so;
    r.stabilizers_have_regular_orbit = r.stabilizers_have_regular_orbit && regular;
  }
  const BigInt hvo = hv.order();
  r.hv_regular_orbit = false;
  for (const auto& o : orbit_partition(hv)) r.hv_regular_orbit = r.hv_regular_orbit || BigInt(o.size) == hvo;
  return r;
}

nlohmann::json OddOrderReport::to_json() const {
  return {{"instance", instance.to_string()},
          {"group", group},
          {"order", irrbase::to_string(order)},
          {"odd_order", odd_order},
          {"irreducible", irreducible},
          {"b_H", b},
          {"greedy_H", greedy},
          {"b_G", b + 1},
          {"greedy_G", greedy + 1},
          {"exact", exact},
          {"b_equals_greedy", b_equals_greedy},
          {"v", v},
          {"u", u},
          {"partition_mask", gluck_q1},
          {"orbits_differ_from_negatives", orbits_not_self_negative},
          {"H_u_inside_K", hu_in_k},
          {"H_v_inside_K", hv_in_k},
          {"H_v_equals_H_u", hv_equals_hu},
          {"semilinear_point_stabilizers_have_regular_orbits", stabilizers_have_regular_orbit},
          {"H_v_has_regular_orbit", hv_regular_orbit},
          {"passes", passes()}};
}

}  // namespace irrbase
