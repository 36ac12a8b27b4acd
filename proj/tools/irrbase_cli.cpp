// irrbase: construct groups, compute base statistics, run the verification
// checks and the GF(4)^12 census.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "irrbase/base_search.hpp"
#include "irrbase/census.hpp"
#include "irrbase/dsl.hpp"
#include "irrbase/linalg.hpp"
#include "irrbase/linear.hpp"
#include "irrbase/verify.hpp"

using namespace irrbase;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kUsage = 1, kInexact = 2, kFailed = 3;

struct Input {
  std::string expr;
  std::string generators_file;
};

void add_input(CLI::App* cmd, Input& in) {
  auto* e = cmd->add_option("expr", in.expr, "group expression, e.g. \"GL(1,3) wr Cyc(2)\"");
  auto* g = cmd->add_option("--generators", in.generators_file, "JSON generator list instead of an expression");
  e->excludes(g);
}

void print_parse_error(const std::string& text, const dsl::ParseError& e) {
  std::cerr << "error: " << e.what() << "\n  " << text << "\n  " << std::string(e.offset, ' ') << "^\n";
}

GroupHandle load(const Input& in) {
  if (!in.generators_file.empty()) {
    std::ifstream f(in.generators_file);
    if (!f) throw std::runtime_error("cannot open " + in.generators_file);
    return load_generator_list(json::parse(f));
  }
  if (in.expr.empty()) throw CLI::ValidationError("a group expression or --generators is required");
  auto g = dsl::elaborate(*dsl::parse(in.expr));
  g.set_label(dsl::print(*dsl::parse(in.expr)));
  return g;
}

json header(const Manifest& m) {
  return {{"artifact", "irrbase"}, {"artifact_version", artifact_version()}, {"manifest_version", m.version}};
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::string field_name(const ActionContext& ctx) {
  return ctx.is_linear() ? "GF(" + std::to_string(ctx.field->order()) + ")" : "";
}

int cmd_parse(const std::string& text, bool as_json) {
  auto e = dsl::parse(text);
  if (!as_json) {
    std::cout << dsl::print(*e) << "\n";
    return kOk;
  }
  std::function<json(const dsl::GroupExpr&)> tree = [&](const dsl::GroupExpr& x) -> json {
    static const char* names[] = {"GL", "GammaL", "E", "Sym", "Cyc", "counterexample", "tensor", "wreath", "direct"};
    json j{{"kind", names[static_cast<int>(x.kind)]}, {"offset", x.offset}};
    if (x.is_leaf()) {
      j["args"] = x.args;
      if (x.kind == dsl::GroupExpr::Kind::E)
        j["variant"] = x.variant == Variant::Plus ? "+" : x.variant == Variant::Minus ? "-" : "s";
    } else {
      j["left"] = tree(*x.left);
      j["right"] = tree(*x.right);
    }
    return j;
  };
  std::cout << json{{"text", dsl::print(*e)}, {"ast", tree(*e)}}.dump(2) << "\n";
  return kOk;
}

int cmd_describe(const Input& in, const std::string& point, std::uint64_t seed) {
  const auto g = load(in);
  const auto& ctx = g.context();
  json j = header(default_manifest());
  j["group"] = g.label();
  j["action"] = ctx.is_linear() ? "linear" : "permutation";
  j["degree"] = ctx.degree;
  if (ctx.is_linear()) {
    j["field"] = field_name(ctx);
    j["dimension"] = ctx.dimension;
  }
  j["generators"] = g.generators().size();
  j["order"] = to_string(g.order());
  if (ctx.degree <= default_chain_limit()) {
    // independent randomized chain; the order must not depend on the seed
    ChainOptions o;
    o.use_known_order = false;
    o.seed = seed;
    j["order_confirmed"] = schreier_sims(g, o).order() == g.order();
  }
  constexpr std::uint64_t kOrbitLimit = std::uint64_t{1} << 20;
  if (ctx.degree <= kOrbitLimit) {
    const auto orbits = orbit_partition(g);
    j["orbits"] = orbits.size();
    std::uint64_t longest = 0;
    for (const auto& o : orbits) longest = std::max(longest, o.size);
    j["longest_orbit"] = longest;
    if (ctx.is_linear()) {
      const bool irr = is_irreducible(g);
      j["irreducible"] = irr;
      if (irr) {
        const auto p = linear_primitivity(g);
        j["primitivity"] = p.verdict == Primitivity::Primitive     ? "primitive"
                           : p.verdict == Primitivity::Imprimitive ? "imprimitive"
                                                                   : "unknown";
      }
    }
  }
  if (!point.empty()) {
    PointCode code;
    if (ctx.is_linear()) {
      const auto v = dsl::parse_vector(point, ctx.field->order());
      if (v.size() != ctx.dimension)
        throw std::invalid_argument("vector has " + std::to_string(v.size()) + " entries, expected " +
                                    std::to_string(ctx.dimension));
      code = pack(std::span<const Elem>(v.data(), v.size()), ctx.field->order());
    } else {
      code = std::stoull(point);
      if (code >= ctx.degree) throw std::invalid_argument("point outside the domain");
    }
    const PointCode pts[1] = {code};
    j["point"] = {{"code", code}, {"text", ctx.describe_point(code)}, {"stabilizer_order", to_string(pointwise_stabilizer(g, pts).order())}};
  }
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_stats(const Input& in, const std::vector<Statistic>& stats, const SearchOptions& opts, bool affine, bool timing) {
  const auto g = load(in);
  const Manifest m = default_manifest();
  json j = header(m);
  j["group"] = g.label();
  j["degree"] = g.degree();
  j["order"] = to_string(g.order());
  j["reports"] = json::array();
  bool inexact = false;
  for (auto s : stats) {
    BaseReport r = s == Statistic::MinBase          ? min_base(g, opts)
                   : s == Statistic::MaxIrredundant ? max_irredundant(g, opts)
                   : s == Statistic::GreedyMax      ? greedy_max(g, opts)
                                                    : greedy_run(g, opts);
    inexact = inexact || !r.exact;
    json rj = to_json(r, g.context(), timing);
    if (affine) rj["affine"] = to_json(affine_adjust(r, g.degree()), g.context(), false);
    j["reports"].push_back(rj);
  }
  std::cout << j.dump(2) << "\n";
  return inexact ? kInexact : kOk;
}

int cmd_verify(const std::vector<std::string>& names, const std::string& manifest_file, const CheckOptions& opts,
               const std::string& out) {
  Manifest m = default_manifest();
  if (!manifest_file.empty()) {
    std::ifstream f(manifest_file);
    if (!f) throw std::runtime_error("cannot open " + manifest_file);
    m = manifest_from_json(json::parse(f));
  }
  std::vector<std::string> ids;
  for (const auto& n : names) {
    if (n == "all") {
      for (const auto& id : check_ids())
        if (m.checks.contains(id)) ids.push_back(id);
      continue;
    }
    auto id = resolve_check(n);
    if (!id) {
      std::cerr << "error: unknown check '" << n << "'; known:";
      for (const auto& k : check_ids()) std::cerr << " " << k;
      std::cerr << "\n";
      return kUsage;
    }
    if (!m.checks.contains(*id)) {
      std::cerr << "error: check '" << *id << "' is not in manifest version " << m.version << "\n";
      return kUsage;
    }
    ids.push_back(*id);
  }
  std::vector<CheckResult> results;
  for (const auto& id : ids) {
    const auto t0 = std::chrono::steady_clock::now();
    results.push_back(run_check(id, m, opts));
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto& r = results.back();
    std::cerr << (r.passed ? "PASS " : "FAIL ") << (r.exact ? "" : "(inexact) ") << id << "  [" << std::fixed
              << std::setprecision(1) << s << " s]  " << r.claim << "\n";
  }
  write_or_print(out, verification_report(results, m).dump(2) + "\n");
  return exit_code(results);
}

int cmd_census(unsigned threads, std::uint64_t memory, const std::string& out, const std::string& report) {
  CensusOptions o;
  o.threads = threads;
  o.memory_budget = memory;
  const auto c = run_census(o);
  write_or_print(out.empty() ? "census.csv" : out, census_csv(c));
  const auto rep = verify_greedy_counterexample(c);
  std::uint64_t covered = 0;
  for (const auto& r : c.records) covered += r.size;
  std::cout << "points covered: " << covered << "\n"
            << "orbits: " << c.records.size() << "\n"
            << "|H| = " << to_string(c.group_order) << "\n"
            << "|H_w| = " << to_string(rep.w_stabilizer) << "\n"
            << "largest orbit: " << rep.largest.largest_size << " (" << rep.largest.largest.size() << " orbits)\n"
            << "w in a largest orbit: " << (rep.largest.w_in_largest ? "yes" : "no") << "\n"
            << "every largest orbit has a two-zero chunk or contains w: "
            << (rep.largest.all_largest_covered ? "yes" : "no") << "\n"
            << "b(K) = " << rep.b_k << "\n"
            << "verdict: " << (rep.verdict ? "greedy base size of G is at least 5" : "not established") << "\n";
  if (!report.empty()) {
    json j = header(default_manifest());
    j["census"] = rep.to_json();
    write_or_print(report, j.dump(2) + "\n");
  }
  return rep.verdict ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irredundant bases, base sizes and greedy bases of finite linear groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", artifact_version());

  std::string parse_text;
  bool parse_json = false;
  auto* p = app.add_subcommand("parse", "parse a group expression and print its canonical form");
  p->add_option("expr", parse_text, "group expression")->required();
  p->add_flag("--json", parse_json, "print the syntax tree");

  Input describe_in;
  std::string point;
  std::uint64_t seed = 0x5eed;
  auto* d = app.add_subcommand("describe", "order, action and orbit structure of a group");
  add_input(d, describe_in);
  d->add_option("--point", point, "vector literal, e.g. [1,w,0]: report its stabilizer");
  d->add_option("--seed", seed, "seed of the independent randomized stabilizer chain");

  Input stats_in;
  bool want_min = false, want_max = false, want_greedy = false, want_run = false, affine = false, no_timing = false;
  std::string engine = "auto";
  std::uint64_t budget = 0;
  auto* s = app.add_subcommand("stats", "base size, maximal irredundant base and greedy statistics");
  add_input(s, stats_in);
  s->add_flag("--min-base", want_min, "b(G)");
  s->add_flag("--max-irr", want_max, "I(G)");
  s->add_flag("--greedy", want_greedy, "largest greedy base over all tie-breaks");
  s->add_flag("--greedy-run", want_run, "one greedy base, least point first");
  s->add_flag("--affine", affine, "also report the affine group V : G");
  s->add_flag("--no-timing", no_timing, "leave wall times out of the report");
  s->add_option("--engine", engine, "auto, chain or lattice")->check(CLI::IsMember({"auto", "chain", "lattice"}));
  s->add_option("--budget", budget, "search node budget (default from IRRBASE_NODE_BUDGET or 10^7)");

  std::vector<std::string> checks;
  std::string manifest_file, verify_out;
  CheckOptions check_opts;
  auto* v = app.add_subcommand("verify", "run named checks, or all");
  v->add_option("checks", checks, "check ids or 'all'")->required();
  v->add_option("--manifest", manifest_file, "manifest JSON");
  v->add_option("--threads", check_opts.threads, "census threads");
  v->add_option("--seed", check_opts.seed, "seed for randomized chain construction");
  v->add_option("--out", verify_out, "write the JSON report here instead of stdout");

  unsigned census_threads = 1;
  std::uint64_t memory = std::uint64_t{1} << 30;
  std::string census_out, census_report;
  auto* c = app.add_subcommand("census", "orbits of GammaL(1,4) wr (Sym(4) wr Sym(3)) on GF(4)^12");
  c->add_option("--threads", census_threads, "worker threads");
  c->add_option("--memory-budget", memory, "bytes; below the parallel tables the census runs single-threaded");
  c->add_option("--out", census_out, "CSV path (default census.csv)");
  c->add_option("--report", census_report, "also write the verdict JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const std::string& text = p->parsed() ? parse_text : d->parsed() ? describe_in.expr : stats_in.expr;
  try {
    if (p->parsed()) return cmd_parse(parse_text, parse_json);
    if (d->parsed()) return cmd_describe(describe_in, point, seed);
    if (s->parsed()) {
      std::vector<Statistic> stats;
      if (want_min) stats.push_back(Statistic::MinBase);
      if (want_max) stats.push_back(Statistic::MaxIrredundant);
      if (want_greedy) stats.push_back(Statistic::GreedyMax);
      if (want_run) stats.push_back(Statistic::GreedyRun);
      if (stats.empty()) stats = {Statistic::MinBase, Statistic::MaxIrredundant, Statistic::GreedyMax};
      SearchOptions o;
      o.node_budget = budget ? budget : default_manifest().node_budget;
      o.engine = engine == "chain" ? Engine::Chain : engine == "lattice" ? Engine::Lattice : Engine::Auto;
      return cmd_stats(stats_in, stats, o, affine, !no_timing);
    }
    if (v->parsed()) return cmd_verify(checks, manifest_file, check_opts, verify_out);
    return cmd_census(census_threads, memory, census_out, census_report);
  } catch (const dsl::ParseError& e) {
    print_parse_error(text, e);
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
