// Command-line front end: invariants, Menger certificates, catalog sweeps.
// Exit codes: 0 success, 1 counterexample found by verify, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "isoperimetric/catalog.hpp"
#include "isoperimetric/digraph.hpp"
#include "isoperimetric/group.hpp"
#include "isoperimetric/iso.hpp"
#include "isoperimetric/menger.hpp"
#include "isoperimetric/report.hpp"
#include "isoperimetric/verify.hpp"

namespace {

using namespace isoperimetric;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct Args {
  std::string group, set, graph, sign = "fwd", out;
  std::string x_set, theorem = "all", report, manifest;
  int k = 1, x = -1, y = -1, limit = 100, max_order = 12, workers = 1;
  std::uint64_t seed = 0;
  bool timing = false, with_sets = false;
};

Sign parse_sign(const std::string& s) {
  if (s == "fwd") return Sign::forward;
  if (s == "rev") return Sign::reverse;
  throw PreconditionError("--sign must be fwd or rev");
}

// --graph accepts a JSON file or "<group spec>@<elements>"; otherwise
// --group and --set describe a Cayley graph.
Digraph graph_from_args(const Args& a) {
  if (!a.graph.empty()) {
    const auto at = a.graph.find('@');
    if (at == std::string::npos) return load_graph(a.graph);
    const FiniteGroup g = make_group(a.graph.substr(0, at));
    return cayley_graph(g, parse_element_set(static_cast<std::size_t>(g.order()), a.graph.substr(at + 1)));
  }
  if (a.group.empty()) throw PreconditionError("give --graph, or --group with --set");
  const FiniteGroup g = make_group(a.group);
  return cayley_graph(g, parse_element_set(static_cast<std::size_t>(g.order()), a.set));
}

void emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump() << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

json family_json(const FragmentFamily& f, std::size_t limit) { return sets_json(f.take(limit)); }

int run_iso(const Args& a, const std::string& what) {
  if (what == "classify") {
    const FiniteGroup g = make_group(a.group);
    const auto r = classify(g, parse_element_set(static_cast<std::size_t>(g.order()), a.set));
    json j = {{"subgroup_order", r.subgroup_order}, {"generating", r.generating},
              {"delta", r.delta},                   {"kappa1", r.kappa1},
              {"separable1", r.separable1},         {"separable2", r.separable2},
              {"cauchy", r.cauchy},                 {"vosper", r.vosper}};
    j["kappa2"] = r.kappa2 ? json(*r.kappa2) : json(nullptr);
    j["mu"] = r.mu ? json(*r.mu) : json(nullptr);
    emit(j, a.out);
    return kExitOk;
  }
  const Digraph g = graph_from_args(a);
  const Sign sign = parse_sign(a.sign);
  if (what == "kappa" && g.order() > kExhaustiveLimit) {
    emit({{"kappa", kappa(g, a.k, sign)}, {"k", a.k}}, a.out);
    return kExitOk;
  }
  const IsoProfile p = profile(g, a.k, sign);
  json j = {{"k", a.k},
            {"kappa", p.kappa},
            {"alpha", p.alpha},
            {"omega", p.omega},
            {"separable", p.separable},
            {"atoms", family_json(p.atoms, static_cast<std::size_t>(a.limit))},
            {"fragments_count", p.fragments.size()}};
  if (what == "fragments") j["fragments"] = family_json(p.fragments, static_cast<std::size_t>(a.limit));
  emit(j, a.out);
  return kExitOk;
}

int run_menger(const Args& a, const std::string& what) {
  const Digraph g = graph_from_args(a);
  if (what == "match") {
    const ElementSet x = parse_element_set(g.size(), a.x_set);
    const Matching m = strong_iso_matching(g, x, a.k);
    json pairs = json::array();
    for (auto [u, v] : m.pairs) pairs.push_back({u, v});
    emit({{"k", a.k}, {"pairs", pairs}, {"verified", verify_matching(g, x, m, a.k)}}, a.out);
    return kExitOk;
  }
  if (what == "connect") {
    const KPart part = min_k_part(g, a.x, a.y);
    emit({{"x", a.x},
          {"y", a.y},
          {"connectivity", local_connectivity(g, a.x, a.y)},
          {"k_part", set_json(part.set)},
          {"boundary_size", part.boundary_size}},
         a.out);
    return kExitOk;
  }
  try {
    const PathFamily fam = disjoint_paths(g, a.x, a.y, a.k);
    emit({{"x", a.x}, {"y", a.y}, {"paths", fam.paths}, {"verified", verify_path_family(g, fam, a.k)}},
         a.out);
  } catch (const ConnectivityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit({{"error", e.what()},
          {"witness", {{"k_part", set_json(e.witness().set)},
                       {"boundary_size", e.witness().boundary_size}}}},
         a.out);
    return kExitUsage;
  }
  return kExitOk;
}

int run_verify(const Args& a) {
  if (a.max_order < 1 || a.max_order > kExhaustiveLimit)
    throw PreconditionError("--max-order must lie in 1.." + std::to_string(kExhaustiveLimit));
  VerifyOptions opt;
  opt.max_order = a.max_order;
  opt.seed = a.seed;
  opt.workers = a.workers;
  if (!a.manifest.empty()) opt.manifest = load_manifest(a.manifest);
  const auto reports = run_theorems(a.theorem, opt);
  json out = json::array();
  bool clean = true;
  for (const auto& r : reports) {
    out.push_back(to_json(r, a.timing));
    clean = clean && r.passed();
    std::cerr << r.theorem_id << ": " << (r.passed() ? "passed" : "FAILED") << " (tested "
              << r.instances_tested << ", skipped " << r.instances_skipped << ", counterexamples "
              << r.counterexamples_found << ")\n";
  }
  if (a.report.empty())
    std::cout << out.dump() << "\n";
  else
    emit(out, a.report);
  return clean ? kExitOk : kExitCounterexample;
}

int run_catalog(const Args& a) {
  const auto specs = a.manifest.empty() ? default_manifest() : load_manifest(a.manifest);
  json out = json::array();
  for (const auto& e : build_catalog(a.max_order, specs)) {
    const auto gens = generating_sets(e.group);
    json j = {{"spec", e.spec},
              {"order", e.group.order()},
              {"abelian", e.group.is_abelian()},
              {"generating_sets", gens.size()}};
    if (a.with_sets) {
      json sets = json::array();
      for (auto s : gens) sets.push_back(detail::mask_json(s));
      j["sets"] = std::move(sets);
    }
    out.push_back(std::move(j));
  }
  emit(out, a.out);
  return kExitOk;
}

int run_export(const Args& a) {
  emit(graph_to_json(graph_from_args(a)), a.out);
  return kExitOk;
}

void add_graph_options(CLI::App* cmd, Args& a) {
  cmd->add_option("--group", a.group, "group spec, e.g. cyclic:7");
  cmd->add_option("--set", a.set, "element indices, e.g. 0,1,3");
  cmd->add_option("--graph", a.graph, "graph JSON file, or <group spec>@<elements>");
  cmd->add_option("--out", a.out, "write JSON here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  Args a;
  std::function<int()> action;
  CLI::App app{"Isoperimetric invariants of Cayley graphs and reflexive digraphs"};
  app.require_subcommand(1);

  auto* iso = app.add_subcommand("iso", "connectivities, fragments and atoms");
  iso->require_subcommand(1);
  for (const std::string what : {"kappa", "atoms", "fragments", "classify"}) {
    auto* cmd = iso->add_subcommand(what);
    add_graph_options(cmd, a);
    cmd->add_option("--k", a.k, "order of the connectivity")->check(CLI::PositiveNumber);
    cmd->add_option("--sign", a.sign, "fwd or rev")->check(CLI::IsMember({"fwd", "rev"}));
    cmd->add_option("--limit", a.limit, "maximum number of sets listed")->check(CLI::NonNegativeNumber);
    cmd->callback([&, what] { action = [&, what] { return run_iso(a, what); }; });
  }

  auto* menger = app.add_subcommand("menger", "disjoint paths, cuts and matchings");
  menger->require_subcommand(1);
  for (const std::string what : {"connect", "paths", "match"}) {
    auto* cmd = menger->add_subcommand(what);
    add_graph_options(cmd, a);
    if (what == "match") {
      cmd->add_option("--x-set", a.x_set, "the set X to match from")->required();
    } else {
      cmd->add_option("--x", a.x, "source vertex")->required();
      cmd->add_option("--y", a.y, "target vertex")->required();
    }
    if (what != "connect") cmd->add_option("--k", a.k, "number of paths or pairs")->required();
    cmd->callback([&, what] { action = [&, what] { return run_menger(a, what); }; });
  }

  auto* verify = app.add_subcommand("verify", "machine-check the theorems over the catalog");
  verify->add_option("--theorem", a.theorem, "checker id or all");
  verify->add_option("--max-order", a.max_order, "largest group order swept");
  verify->add_option("--seed", a.seed, "sampling seed");
  verify->add_option("--workers", a.workers, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--report", a.report, "write the JSON report here");
  verify->add_option("--manifest", a.manifest, "JSON list of group specs");
  verify->add_flag("--timing", a.timing, "include elapsed_ms in reports");
  verify->callback([&] { action = [&] { return run_verify(a); }; });

  auto* catalog = app.add_subcommand("catalog", "list catalog groups and generating sets");
  catalog->add_option("--max-order", a.max_order, "largest group order listed");
  catalog->add_option("--manifest", a.manifest, "JSON list of group specs");
  catalog->add_option("--out", a.out, "write JSON here instead of stdout");
  catalog->add_flag("--with-sets", a.with_sets, "list every generating set");
  catalog->callback([&] { action = [&] { return run_catalog(a); }; });

  auto* exp = app.add_subcommand("export", "write a Cayley graph as graph JSON");
  add_graph_options(exp, a);
  exp->callback([&] { action = [&] { return run_export(a); }; });

  app.add_subcommand("theorems", "list checker ids")->callback([&] {
    action = [] {
      for (const auto& id : theorem_ids()) std::cout << id << "\n";
      return kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
