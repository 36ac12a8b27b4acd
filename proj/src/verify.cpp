#include "irrbase/verify.hpp"

#include <cmath>
#include <cstdlib>
#include <map>

#include "irrbase/base_search.hpp"
#include "irrbase/census.hpp"
#include "irrbase/constructions.hpp"
#include "irrbase/dsl.hpp"
#include "irrbase/enumerate.hpp"
#include "irrbase/field.hpp"
#include "irrbase/linear.hpp"

#ifndef IRRBASE_VERSION
#define IRRBASE_VERSION "0.0.0"
#endif

namespace irrbase {

using nlohmann::json;

std::string artifact_version() { return IRRBASE_VERSION; }

namespace {

const json kManifest = R"manifest({
  "version": "1",
  "node_budget": 10000000,
  "checks": {
    "extraspecial-relations": {
      "groups": ["E(2,1,5,+)", "E(2,1,5,-)", "E(2,2,5,+)", "E(2,2,5,-)", "E(3,1,7,+)", "E(3,2,7,+)", "E(5,1,11,+)", "E(2,2,13,s)"]
    },
    "extraspecial-witness": {
      "groups": ["E(2,1,5,+)", "E(2,1,5,-)", "E(2,2,5,+)", "E(2,2,5,-)", "E(3,1,7,+)", "E(3,2,7,+)", "E(5,1,11,+)", "E(2,2,13,s)"]
    },
    "tensor-witness": {
      "groups": ["E(2,1,7,+) (x) E(3,1,7,+)", "E(2,1,7,-) (x) E(3,1,7,+)", "E(2,1,13,+) (x) E(3,1,13,+)"]
    },
    "wreath-irredundant": {
      "parameters": [[3,2],[3,3],[3,4],[4,2],[5,2],[5,3]]
    },
    "semilinear-lower": {
      "parameters": [[2,4],[2,6],[3,2],[3,4],[2,8]]
    },
    "irredundant-upper": {
      "groups": ["GL(1,3)", "GL(1,7)", "GL(1,3) wr Cyc(2)", "GL(1,3) wr Cyc(3)", "GL(1,3) wr Cyc(4)", "GL(1,4) wr Cyc(2)",
                 "GL(1,5) wr Cyc(2)", "GL(1,5) wr Cyc(3)", "GL(1,3) wr Sym(3)", "GL(1,5) x GL(1,5)",
                 "GammaL(1,2^4)", "GammaL(1,2^6)", "GammaL(1,3^2)", "GammaL(1,3^4)", "GammaL(1,2^8)", "GammaL(1,5^3)",
                 "GammaL(1,2^2) wr Sym(2)",
                 "E(2,1,5,+)", "E(2,1,5,-)", "E(2,2,5,+)", "E(2,2,5,-)", "E(3,1,7,+)", "E(3,2,7,+)", "E(5,1,11,+)",
                 "E(2,2,13,s)", "E(2,1,7,+) (x) E(3,1,7,+)"]
    },
    "subgroup-inequalities": {
      "triples": [
        {"group": "GL(1,3) wr Cyc(3)", "subgroup": [0], "normal": [0]},
        {"group": "GL(1,5) wr Cyc(2)", "subgroup": [1], "normal": [0]},
        {"group": "GL(1,3) wr Sym(3)", "subgroup": [0, 1], "normal": [0]},
        {"group": "GL(1,7) wr Cyc(3)", "subgroup": [1], "normal": [0]},
        {"group": "GammaL(1,2^4)", "subgroup": [1], "normal": [0]},
        {"group": "GammaL(1,3^2)", "subgroup": [0], "normal": [0]},
        {"group": "GammaL(1,2^6)", "subgroup": [1], "normal": [0]},
        {"group": "E(3,1,7,+)", "subgroup": [0], "normal": [0]},
        {"group": "E(2,2,5,+)", "subgroup": [0, 1], "normal": [0]},
        {"group": "Sym(5)", "subgroup": [1], "normal": [1]},
        {"group": "Sym(4) wr Sym(2)", "subgroup": [0], "normal": [0, 1]},
        {"group": "GammaL(1,2^2) wr Sym(2)", "subgroup": [0], "normal": [0, 1]},
        {"group": "Cyc(12)", "subgroup": [0], "normal": [0]}
      ]
    },
    "odd-order-greedy": {
      "instances": [[7,1,3],[13,1,3],[11,1,3],[19,1,3],[7,1,5],[3,3,3]]
    },
    "greedy-counterexample": {}
  }
})manifest"_json;

const std::vector<std::pair<std::string, std::string>> kAliases = {
    {"irredundant-upper", "thm11-upper"},         {"semilinear-lower", "thm11-gammal"},
    {"extraspecial-witness", "prop26"},           {"tensor-witness", "prop27"},
    {"wreath-irredundant", "lemma29"},            {"odd-order-greedy", "thm12"},
    {"greedy-counterexample", "thm14"},           {"subgroup-inequalities", "lemma21-suite"},
    {"extraspecial-relations", "lemma25-relations"}};

std::string chain_text(const std::vector<BigInt>& c) {
  std::string s;
  for (const auto& x : c) s += (s.empty() ? "" : ",") + to_string(x);
  return s;
}

SearchOptions search_options(const Manifest& m) {
  SearchOptions o;
  o.node_budget = m.node_budget;
  return o;
}

GroupHandle group_of(const std::string& text) { return dsl::elaborate(*dsl::parse(text)); }

ExtraspecialSpec spec_of(const std::string& text) {
  auto e = dsl::parse(text);
  if (e->kind != dsl::GroupExpr::Kind::E) throw std::invalid_argument(text + " is not an extraspecial group");
  return {static_cast<unsigned>(e->args[0]), static_cast<unsigned>(e->args[1]), static_cast<std::uint32_t>(e->args[2]),
          e->variant};
}

std::vector<ExtraspecialSpec> tensor_specs(const dsl::GroupExpr& e) {
  if (e.kind == dsl::GroupExpr::Kind::Tensor) {
    auto a = tensor_specs(*e.left), b = tensor_specs(*e.right);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
  return {spec_of(dsl::print(e))};
}

json witness_json(const WitnessSequence& w, const IrredundanceResult& r) {
  return {{"claim", w.claim},
          {"points", w.points},
          {"expected_orders", chain_text(w.expected_orders)},
          {"verified_orders", chain_text(r.order_chain)},
          {"irredundant", r.irredundant()},
          {"base", r.is_base}};
}

bool witness_holds(const WitnessSequence& w, const IrredundanceResult& r) {
  return r.irredundant() && r.order_chain == w.expected_orders && (!w.claims_base || r.is_base);
}

// ---------------------------------------------------------------------------

CheckResult extraspecial_relations(const Manifest& m) {
  CheckResult r{"extraspecial-relations", "the extraspecial generators satisfy every defining relation and |E| = r^(1+2m) (2^(2+2m) for the symplectic type)", true, true, json::array()};
  for (const std::string text : m.checks.at(r.id).at("groups")) {
    const auto spec = spec_of(text);
    json rows = json::array();
    bool all = true;
    for (const auto& rel : check_extraspecial_relations(spec)) {
      rows.push_back({{"relation", rel.relation}, {"holds", rel.holds}});
      all = all && rel.holds;
    }
    const auto g = build_extraspecial(spec);
    const BigInt expected = spec.variant == Variant::Symplectic ? ipow(2, 2 + 2 * spec.m) : ipow(spec.r, 1 + 2 * spec.m);
    const auto elements = enumerate_elements(g.generators());
    const BigInt counted = elements ? BigInt(elements->size()) : g.order();
    const bool order_ok = counted == expected;
    r.passed = r.passed && all && order_ok;
    r.details.push_back({{"group", text},
                         {"relations", rows},
                         {"expected_order", to_string(expected)},
                         {"order", to_string(counted)},
                         {"order_by", elements ? "enumeration" : "stabilizer chain"},
                         {"holds", all && order_ok}});
  }
  return r;
}

CheckResult extraspecial_witness(const Manifest& m) {
  CheckResult r{"extraspecial-witness", "the explicit witness is an irredundant base with the stated chain, and I(E) >= m+1 (m for the minus type)", true, true, json::array()};
  for (const std::string text : m.checks.at(r.id).at("groups")) {
    const auto spec = spec_of(text);
    const auto g = build_extraspecial(spec);
    const auto w = witness_extraspecial_base(spec);
    const auto v = verify_irredundant(g, w.points);
    const auto best = max_irredundant(g, search_options(m));
    const std::size_t lower = spec.variant == Variant::Minus ? spec.m : spec.m + 1;
    const bool ok = witness_holds(w, v) && best.value() >= lower && best.value() >= w.points.size();
    r.passed = r.passed && ok;
    r.exact = r.exact && best.exact;
    r.details.push_back({{"group", text},
                         {"witness", witness_json(w, v)},
                         {"I", best.value()},
                         {"I_exact", best.exact},
                         {"I_lower_bound", lower},
                         {"holds", ok}});
  }
  return r;
}

CheckResult tensor_witness(const Manifest& m) {
  CheckResult r{"tensor-witness", "the tensor witness built from factor witnesses is irredundant with the stated chain", true, true, json::array()};
  for (const std::string text : m.checks.at(r.id).at("groups")) {
    const auto expr = dsl::parse(text);
    const auto specs = tensor_specs(*expr);
    std::vector<WitnessSequence> factors;
    for (const auto& s : specs) factors.push_back(witness_extraspecial_base(s));
    const auto g = dsl::elaborate(*expr);
    const auto w = witness_tensor_sequence(specs, factors);
    const auto v = verify_irredundant(g, w.points);
    const auto best = max_irredundant(g, search_options(m));
    const bool ok = witness_holds(w, v) && best.value() >= w.points.size();
    r.passed = r.passed && ok;
    r.exact = r.exact && best.exact;
    r.details.push_back({{"group", text},
                         {"order", to_string(g.order())},
                         {"witness", witness_json(w, v)},
                         {"I", best.value()},
                         {"I_exact", best.exact},
                         {"holds", ok}});
  }
  return r;
}

CheckResult wreath_irredundant(const Manifest& m) {
  CheckResult r{"wreath-irredundant", "I(GL(1,q) wr Cyc(d)) = d, and the group is irreducible for q > 2", true, true, json::array()};
  for (const auto& pq : m.checks.at(r.id).at("parameters")) {
    const unsigned q = pq[0], d = pq[1];
    const auto g = build_wreath(build_gl1(q), build_cyclic(d));
    const auto best = max_irredundant(g, search_options(m));
    const bool irreducible = is_irreducible(g);
    const bool ok = best.value() == d && (q <= 2 || irreducible);
    r.passed = r.passed && ok;
    r.exact = r.exact && best.exact;
    r.details.push_back({{"group", g.label()},
                         {"q", q},
                         {"d", d},
                         {"I", best.value()},
                         {"I_exact", best.exact},
                         {"irreducible", irreducible},
                         {"holds", ok}});
  }
  return r;
}

CheckResult semilinear_lower(const Manifest& m) {
  CheckResult r{"semilinear-lower", "I(GammaL(1,q^d)) >= Omega(d)+1, with an explicit irredundant base of that length", true, true, json::array()};
  for (const auto& pq : m.checks.at(r.id).at("parameters")) {
    const unsigned q = pq[0], d = pq[1];
    const auto g = build_semilinear(q, d);
    const auto w = witness_semilinear_chain(q, d);
    const auto v = verify_irredundant(g, w.points);
    const auto best = max_irredundant(g, search_options(m));
    const unsigned bound = omega(d) + 1;
    const bool ok = witness_holds(w, v) && w.points.size() == bound && best.value() >= bound;
    r.passed = r.passed && ok;
    r.exact = r.exact && best.exact;
    r.details.push_back({{"group", g.label()},
                         {"witness", witness_json(w, v)},
                         {"omega_d_plus_1", bound},
                         {"I", best.value()},
                         {"I_exact", best.exact},
                         {"holds", ok}});
  }
  return r;
}

CheckResult irredundant_upper(const Manifest& m) {
  CheckResult r{"irredundant-upper", "I(H) <= d for irreducible H, and I(H) <= 6.49 log2(d) + 1 for primitive H (finite test matrix)", true, true, json::array()};
  for (const std::string text : m.checks.at(r.id).at("groups")) {
    const auto g = group_of(text);
    const unsigned d = g.context().dimension;
    const auto best = max_irredundant(g, search_options(m));
    const bool irreducible = is_irreducible(g);
    std::string primitivity = "reducible";
    bool ok = true;
    const double bound = 6.49 * std::log2(static_cast<double>(d)) + 1;
    if (irreducible) {
      ok = best.value() <= d;
      const auto p = linear_primitivity(g);
      primitivity = p.verdict == Primitivity::Primitive ? "primitive" : p.verdict == Primitivity::Imprimitive ? "imprimitive" : "unknown";
      if (p.verdict == Primitivity::Primitive) ok = ok && static_cast<double>(best.value()) <= bound;
    }
    r.passed = r.passed && ok;
    r.exact = r.exact && best.exact;
    r.details.push_back({{"group", text},
                         {"d", d},
                         {"I", best.value()},
                         {"I_exact", best.exact},
                         {"irreducible", irreducible},
                         {"primitivity", primitivity},
                         {"primitive_bound", std::round(bound * 100) / 100},
                         {"holds", ok}});
  }
  return r;
}

CheckResult subgroup_inequalities(const Manifest& m) {
  CheckResult r{"subgroup-inequalities", "I(S) <= I(G) for S <= G, and I(G) <= I(N) + Omega(|G:N|) for N normal in G", true, true, json::array()};
  for (const auto& t : m.checks.at(r.id).at("triples")) {
    const auto g = group_of(t.at("group"));
    const auto s = generated_subgroup(g, t.at("subgroup").get<std::vector<std::size_t>>());
    const auto n = normal_closure(g, t.at("normal").get<std::vector<std::size_t>>());
    auto rep = check_subgroup_inequalities(g, s, n, search_options(m));
    const bool ok = rep.subgroup_holds && rep.normal_holds;
    r.passed = r.passed && ok;
    r.exact = r.exact && rep.exact;
    r.details.push_back({{"group", t.at("group")},
                         {"order_G", to_string(g.order())},
                         {"order_S", to_string(s.order())},
                         {"order_N", to_string(n.order())},
                         {"I_S", rep.i_s},
                         {"I_G", rep.i_g},
                         {"I_N", rep.i_n},
                         {"omega_index", rep.quotient_bound},
                         {"holds", ok}});
  }
  if (r.details.size() < 10) r.passed = false;
  return r;
}

CheckResult odd_order_greedy(const Manifest& m) {
  CheckResult r{"odd-order-greedy", "for odd-order irreducible L wr Cyc(k) every greedy run attains b(H), and the sign-flip vector u has H_v = H_u inside the product of point stabilizers", true, true, json::array()};
  for (const auto& in : m.checks.at(r.id).at("instances")) {
    const OddInstance inst{in[0], in[1], in[2]};
    const auto rep = verify_odd_order_instance(inst);
    r.passed = r.passed && rep.passes();
    r.exact = r.exact && rep.exact;
    r.details.push_back(rep.to_json());
  }
  if (r.details.size() < 3) r.passed = false;
  return r;
}

CheckResult greedy_counterexample(const CheckOptions& o) {
  CheckResult r{"greedy-counterexample", "for G = GF(2)^24 : (GammaL(1,4) wr (Sym(4) wr Sym(3))) some greedy base has at least 5 points", false, true, {}};
  CensusOptions co;
  co.threads = o.threads;
  const auto census = run_census(co);
  const auto rep = verify_greedy_counterexample(census);
  r.details = rep.to_json();
  r.details["orbits"] = census.records.size();
  r.passed = rep.verdict;
  return r;
}

}  // namespace

Manifest manifest_from_json(const json& j) {
  Manifest m;
  m.version = j.at("version").get<std::string>();
  m.node_budget = j.value("node_budget", std::uint64_t{10'000'000});
  m.checks = j.at("checks");
  if (const char* env = std::getenv("IRRBASE_NODE_BUDGET")) m.node_budget = std::stoull(env);
  return m;
}

Manifest default_manifest() { return manifest_from_json(kManifest); }

std::vector<std::string> check_ids() {
  return {"extraspecial-relations", "extraspecial-witness", "tensor-witness",         "wreath-irredundant", "semilinear-lower",
          "irredundant-upper",      "subgroup-inequalities", "odd-order-greedy",      "greedy-counterexample"};
}

std::optional<std::string> resolve_check(const std::string& name) {
  for (const auto& id : check_ids())
    if (id == name) return id;
  for (const auto& [id, alias] : kAliases)
    if (alias == name) return id;
  return std::nullopt;
}

CheckResult run_check(const std::string& id, const Manifest& m, const CheckOptions& options) {
  if (id == "extraspecial-relations") return extraspecial_relations(m);
  if (id == "extraspecial-witness") return extraspecial_witness(m);
  if (id == "tensor-witness") return tensor_witness(m);
  if (id == "wreath-irredundant") return wreath_irredundant(m);
  if (id == "semilinear-lower") return semilinear_lower(m);
  if (id == "irredundant-upper") return irredundant_upper(m);
  if (id == "subgroup-inequalities") return subgroup_inequalities(m);
  if (id == "odd-order-greedy") return odd_order_greedy(m);
  if (id == "greedy-counterexample") return greedy_counterexample(options);
  throw std::invalid_argument("unknown check: " + id);
}

json verification_report(const std::vector<CheckResult>& results, const Manifest& m) {
  json checks = json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    std::string alias;
    for (const auto& [id, a] : kAliases)
      if (id == r.id) alias = a;
    checks.push_back({{"id", r.id},
                      {"alias", alias},
                      {"claim", r.claim},
                      {"evidence", "finite instances"},
                      {"passed", r.passed},
                      {"exact", r.exact},
                      {"details", r.details}});
    passed += r.passed;
  }
  return {{"artifact", "irrbase"},
          {"artifact_version", artifact_version()},
          {"manifest_version", m.version},
          {"node_budget", m.node_budget},
          {"checks", checks},
          {"passed", passed},
          {"failed", results.size() - passed},
          {"exit_code", exit_code(results)}};
}

int exit_code(const std::vector<CheckResult>& results) {
  bool inexact = false;
  for (const auto& r : results) {
    if (!r.passed) return 3;
    inexact = inexact || !r.exact;
  }
  return inexact ? 2 : 0;
}

// ---------------------------------------------------------------------------

namespace {

GroupHandle with_exact_order(GroupHandle h) {
  if (auto e = enumerate_elements(h.generators())) h.with_order(e->size());
  return h;
}

std::vector<GroupElement> pick(const GroupHandle& g, const std::vector<std::size_t>& idx) {
  std::vector<GroupElement> out;
  for (auto i : idx) {
    if (i >= g.generators().size())
      throw std::out_of_range("generator index " + std::to_string(i) + " of " + g.label() + " out of range");
    out.push_back(g.generators()[i]);
  }
  if (out.empty()) out.push_back(g.identity());
  return out;
}

}  // namespace

GroupHandle generated_subgroup(const GroupHandle& g, const std::vector<std::size_t>& idx) {
  return with_exact_order(GroupHandle(g.context(), pick(g, idx), "subgroup of " + g.label()));
}

GroupHandle normal_closure(const GroupHandle& g, const std::vector<std::size_t>& idx) {
  auto gens = pick(g, idx);
  for (bool grew = true; grew;) {
    grew = false;
    GroupHandle n(g.context(), gens);
    for (const auto& x : g.generators()) {
      for (const auto& y : n.generators()) {
        auto c = compose(compose(inverse(x), y), x);
        const bool member = n.chain().identity().kind() == c.kind() ? n.chain().contains(c)
                                                                    : n.chain().contains(to_permutation(c, g.degree()));
        if (!member) {
          gens.push_back(std::move(c));
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
  }
  return with_exact_order(GroupHandle(g.context(), gens, "normal closure in " + g.label()));
}

GroupHandle load_generator_list(const json& j) {
  const auto& f = j.at("field");
  const unsigned p = f.at("p"), k = f.value("k", 1u);
  if (!is_prime(p)) throw std::invalid_argument("field.p = " + std::to_string(p) + " is not prime");
  FieldPtr field = f.contains("modulus") ? Field::with_modulus(p, f.at("modulus").get<std::vector<unsigned>>())
                                         : Field::build(p, k);
  if (field->degree() != k) throw std::invalid_argument("field.modulus does not have degree k");
  const unsigned d = j.at("dimension");
  if (d == 0) throw std::invalid_argument("dimension must be positive");
  std::vector<GroupElement> gens;
  for (const auto& entries : j.at("generators")) {
    const auto v = entries.get<std::vector<std::uint64_t>>();
    if (v.size() != std::size_t(d) * d)
      throw std::invalid_argument("generator " + std::to_string(gens.size()) + " has " + std::to_string(v.size()) +
                                  " entries, expected " + std::to_string(d * d));
    Matrix mat(field, d, d);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] >= field->order()) throw std::invalid_argument("matrix entry " + std::to_string(v[i]) + " outside the field");
      mat.entries[i] = static_cast<Elem>(v[i]);
    }
    gens.push_back(GroupElement::matrix(std::move(mat)));
  }
  if (gens.empty()) throw std::invalid_argument("no generators");
  GroupHandle g(ActionContext::vectors(field, d), std::move(gens), j.value("label", std::string("loaded group")));
  return with_exact_order(std::move(g));
}

}  // namespace irrbase
