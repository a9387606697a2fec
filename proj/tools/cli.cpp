#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bistellar/bistellar.hpp"

namespace bistellar::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string rational_list(const std::vector<Rational>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += to_string(xs[i]);
  }
  return s + ")";
}

Json rationals_json(const std::vector<Rational>& xs) {
  Json arr = Json::array();
  for (const Rational& x : xs) arr.push_back(rational_to_json(x));
  return arr;
}

Json functional_json(const LinearFunctional& v) {
  return {{"dimension", v.n}, {"coeffs", rationals_json(v.coeffs)}, {"constant", rational_to_json(v.constant)}};
}

Json site_json(std::size_t index, const MoveSite& s) {
  return {{"index", index},
          {"type", s.type},
          {"sigma", std::vector<VertexId>(s.sigma.begin(), s.sigma.end())},
          {"tau", std::vector<VertexId>(s.tau.begin(), s.tau.end())}};
}

Json pseudomanifold_json(const PseudomanifoldReport& r) {
  return {{"pure", r.pure}, {"closed", r.closed}, {"connected", r.connected}};
}

std::string pseudomanifold_text(const PseudomanifoldReport& r) {
  return "pure " + yes_no(r.pure) + ", closed " + yes_no(r.closed) + ", connected " + yes_no(r.connected);
}

/// Shared state of one invocation.
struct Context {
  bool json = false;
  std::ostream& out;

  void emit(const Json& j) const { out << j.dump(2) << "\n"; }
};

int cmd_gen(const Context& ctx, const std::string& spec, const std::string& output) {
  const Complex c = named_complex(spec);
  if (output.empty() || output == "-") {
    ctx.out << complex_to_json(c);
    return 0;
  }
  save_complex(output, c);
  if (ctx.json) {
    ctx.emit({{"generator", spec}, {"output", output}, {"dimension", c.dimension()}, {"f", f_vector(c).counts}});
  } else {
    ctx.out << "wrote " << output << ": " << spec << ", dimension " << c.dimension() << ", f-vector "
            << f_vector(c).to_string() << "\n";
  }
  return 0;
}

int cmd_info(const Context& ctx, const std::string& path) {
  const Complex c = load_complex(path);
  const FVector f = f_vector(c);
  const HVector h = h_vector(f);
  const auto ds = dehn_sommerville(f);
  const auto report = closed_pseudomanifold_report(c);
  if (ctx.json) {
    ctx.emit({{"dimension", c.dimension()},
              {"facets", c.facet_count()},
              {"vertices", c.vertices().size()},
              {"f", f.counts},
              {"h", h.entries},
              {"euler_characteristic", f.euler_characteristic()},
              {"dehn_sommerville", rationals_json(ds)},
              {"pseudomanifold", pseudomanifold_json(report)}});
    return 0;
  }
  ctx.out << "dimension: " << c.dimension() << "\n"
          << "facets: " << c.facet_count() << "\n"
          << "vertices: " << c.vertices().size() << "\n"
          << "f-vector: " << f.to_string() << "\n"
          << "h-vector: " << h.to_string() << "\n"
          << "euler characteristic: " << f.euler_characteristic() << "\n"
          << "dehn-sommerville h_k - h_{n+1-k}, k = 0.." << (c.dimension() + 1) / 2 << ": " << rational_list(ds)
          << "\n"
          << "pseudomanifold: " << pseudomanifold_text(report) << "\n";
  return 0;
}

int cmd_check(const Context& ctx, const std::string& path) {
  const Complex c = load_complex(path);
  const Verdict v = is_combinatorial_manifold(c);
  const auto report = closed_pseudomanifold_report(c);
  if (ctx.json) {
    ctx.emit({{"verdict", to_string(v)}, {"pseudomanifold", pseudomanifold_json(report)}});
  } else {
    ctx.out << "pseudomanifold: " << pseudomanifold_text(report) << "\n"
            << "closed combinatorial manifold: " << to_string(v) << "\n";
  }
  return v == Verdict::Refuted ? 1 : 0;
}

int cmd_moves(const Context& ctx, const std::string& path, int type) {
  const Complex c = load_complex(path);
  if (type >= 0 && type > c.dimension()) {
    throw RangeError("move type " + std::to_string(type) + " outside [0, " + std::to_string(c.dimension()) + "]");
  }
  const auto sites = enumerate_all_moves(c);
  Json list = Json::array();
  std::ostringstream text;
  std::size_t shown = 0;
  for (std::size_t k = 0; k < sites.size(); ++k) {
    if (type >= 0 && sites[k].type != type) continue;
    ++shown;
    list.push_back(site_json(k, sites[k]));
    text << k << "  type " << sites[k].type << "  sigma " << sites[k].sigma.to_string() << "  tau "
         << sites[k].tau.to_string() << "\n";
  }
  if (ctx.json) {
    ctx.emit({{"total", sites.size()}, {"sites", list}});
  } else {
    ctx.out << "admissible sites: " << sites.size();
    if (type >= 0) ctx.out << " (" << shown << " of type " << type << ")";
    ctx.out << "\n" << text.str();
  }
  return 0;
}

int cmd_apply(const Context& ctx, const std::string& path, std::size_t index, const std::string& output) {
  const Complex c = load_complex(path);
  const auto sites = enumerate_all_moves(c);
  if (index >= sites.size()) {
    throw StaleSiteError("site index " + std::to_string(index) + " is not admissible (" +
                         std::to_string(sites.size()) + " sites)");
  }
  const MoveSite& site = sites[index];
  const Complex after = apply_move(c, site);
  save_complex(output, after);
  const FVector before_f = f_vector(c);
  const FVector after_f = f_vector(after);
  std::vector<std::int64_t> measured;
  for (int k = 0; k <= c.dimension(); ++k) measured.push_back(after_f.at(k) - before_f.at(k));
  const DeltaVector expected = move_delta(c.dimension(), site.type);
  const bool ok = measured == expected.entries;
  if (ctx.json) {
    ctx.emit({{"site", site_json(index, site)},
              {"f_before", before_f.counts},
              {"f_after", after_f.counts},
              {"delta", measured},
              {"delta_matches", ok},
              {"output", output}});
  } else {
    ctx.out << "applied site " << index << ": " << site.to_string() << "\n"
            << "f-vector: " << before_f.to_string() << " -> " << after_f.to_string() << "\n"
            << "delta: " << FVector(c.dimension(), measured).to_string() << (ok ? " (matches" : " (DIFFERS from")
            << " move delta " << expected.to_string() << ")\n"
            << "wrote " << output << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_walk(const Context& ctx, const std::string& path, std::size_t steps, std::uint64_t seed, std::size_t cap,
             const std::string& output, const std::string& final_path) {
  const Complex c = load_complex(path);
  const WalkTrace trace = random_walk(c, steps, seed, cap);
  write_file(output, trace_to_jsonl(trace));
  if (!final_path.empty()) save_complex(final_path, trace.final_complex);

  const std::int64_t chi = trace.initial.euler_characteristic();
  const auto ds = dehn_sommerville(trace.initial);
  bool chi_constant = true;
  bool ds_constant = true;
  bool deltas_exact = true;
  FVector previous = trace.initial;
  for (const WalkStep& s : trace.steps) {
    chi_constant = chi_constant && s.f.euler_characteristic() == chi;
    ds_constant = ds_constant && dehn_sommerville(s.f) == ds;
    std::vector<std::int64_t> d;
    for (int k = 0; k <= c.dimension(); ++k) d.push_back(s.f.at(k) - previous.at(k));
    deltas_exact = deltas_exact && d == move_delta(c.dimension(), s.site.type).entries;
    previous = s.f;
  }
  const bool completed = trace.status == WalkStatus::Completed;
  if (ctx.json) {
    ctx.emit({{"seed", seed},
              {"cap", cap},
              {"requested_steps", steps},
              {"steps", trace.steps.size()},
              {"status", completed ? "completed" : "stuck"},
              {"initial_f", trace.initial.counts},
              {"final_f", previous.counts},
              {"euler_characteristic_constant", chi_constant},
              {"dehn_sommerville_constant", ds_constant},
              {"deltas_exact", deltas_exact},
              {"trace", output}});
  } else {
    ctx.out << "steps: " << trace.steps.size() << " of " << steps << " (" << (completed ? "completed" : "stuck")
            << ")\n"
            << "seed: " << seed << ", cap: " << cap << "\n"
            << "initial f-vector: " << trace.initial.to_string() << "\n"
            << "final f-vector: " << previous.to_string() << "\n"
            << "euler characteristic " << chi << " constant: " << yes_no(chi_constant) << "\n"
            << "dehn-sommerville " << rational_list(ds) << " constant: " << yes_no(ds_constant) << "\n"
            << "every step changed f by its move delta: " << yes_no(deltas_exact) << "\n"
            << "wrote " << output << "\n";
  }
  return chi_constant && ds_constant && deltas_exact ? 0 : 1;
}

int cmd_solve(const Context& ctx, int n) {
  const NullspaceBasis ns = invariant_nullspace(n);
  const bool euler_in = in_span(euler_functional(n), ns.basis);
  const bool universal_in = in_span(universal_relation(n), ns.basis);
  bool annihilate = true;
  for (const auto& v : ns.basis) annihilate = annihilate && annihilates_all_moves(v);
  const bool ok = euler_in && universal_in && annihilate;
  if (ctx.json) {
    Json deltas = Json::array();
    for (const auto& d : ns.constraints) deltas.push_back({{"type", d.type}, {"delta", d.entries}});
    Json basis = Json::array();
    for (const auto& v : ns.basis) basis.push_back(functional_json(v));
    ctx.emit({{"dimension", n},
              {"deltas", deltas},
              {"rank", ns.rank_of_constraints},
              {"nullspace_dimension", ns.dimension()},
              {"basis", basis},
              {"euler_in_span", euler_in},
              {"universal_relation_in_span", universal_in},
              {"annihilates_all_types", annihilate}});
    return ok ? 0 : 1;
  }
  ctx.out << "dimension: " << n << "\n" << "move deltas:\n";
  for (const auto& d : ns.constraints) ctx.out << "  type " << d.type << ": " << d.to_string() << "\n";
  ctx.out << "constraint rank: " << ns.rank_of_constraints << "\n"
          << "nullspace dimension: " << ns.dimension() << "\n"
          << "basis (reduced echelon form):\n";
  for (const auto& v : ns.basis) ctx.out << "  " << v.to_string() << "\n";
  ctx.out << "euler characteristic " << euler_functional(n).to_string() << " in span: " << yes_no(euler_in) << "\n"
          << "universal relation " << universal_relation(n).to_string() << " in span: " << yes_no(universal_in)
          << "\n"
          << "basis annihilates all " << n + 1 << " move types: " << yes_no(annihilate) << "\n";
  return ok ? 0 : 1;
}

int cmd_verify(const Context& ctx, int n) {
  const auto entries = zoo(n);
  std::vector<FVector> corpus;
  std::set<std::int64_t> chis;
  for (const auto& e : entries) {
    corpus.push_back(f_vector(e.complex));
    chis.insert(corpus.back().euler_characteristic());
  }
  const TheoremReport report = verify_theorem(n, corpus);
  std::string constants;
  for (std::size_t i = 0; i < report.constants.size(); ++i) {
    if (i) constants += ", ";
    constants += to_string(report.constants[i]);
  }
  if (ctx.json) {
    Json basis = Json::array();
    for (const auto& v : report.basis) basis.push_back(functional_json(v));
    Json violations = Json::array();
    for (const auto& v : report.violations) {
      violations.push_back({{"functional", v.basis_index},
                            {"entry", entries[v.corpus_index].name},
                            {"value", rational_to_json(v.value)},
                            {"expected", rational_to_json(v.expected)}});
    }
    ctx.emit({{"dimension", n},
              {"status", report.status},
              {"corpus_size", report.corpus_size},
              {"euler_characteristics", std::vector<std::int64_t>(chis.begin(), chis.end())},
              {"basis", basis},
              {"constants", rationals_json(report.constants)},
              {"checks", report.checks},
              {"violations", violations}});
    return report.passed() ? 0 : 1;
  }
  ctx.out << "dimension: " << n << "\n"
          << "corpus: " << report.corpus_size << " complexes, euler characteristics {";
  for (auto it = chis.begin(); it != chis.end(); ++it) ctx.out << (it == chis.begin() ? "" : ", ") << *it;
  ctx.out << "}\n" << "invariant basis and v(S^" << n << ")/2:\n";
  for (std::size_t i = 0; i < report.basis.size(); ++i) {
    ctx.out << "  " << report.basis[i].to_string() << ": " << to_string(report.constants[i]) << "\n";
  }
  ctx.out << "checks: " << report.checks << ", violations: " << report.violations.size() << "\n";
  for (const auto& v : report.violations) {
    ctx.out << "  violation: functional " << v.basis_index << " on " << entries[v.corpus_index].name << ": value "
            << to_string(v.value) << ", expected " << to_string(v.expected) << "\n";
  }
  if (report.passed()) {
    ctx.out << "all basis functionals proportional to χ; constants: " << constants << "\n";
  } else {
    ctx.out << "FAILED: some basis functional is not proportional to χ\n";
  }
  return report.passed() ? 0 : 1;
}

int cmd_rank_table(const Context& ctx, int n_max) {
  const auto rows = rank_report(n_max);
  bool consistent = true;
  for (const auto& r : rows) {
    consistent = consistent && r.rank + r.nullity == static_cast<std::size_t>(r.n + 1) &&
                 r.nullity == static_cast<std::size_t>(r.n / 2 + 1) && r.ds_rank == r.nullity;
  }
  if (ctx.json) {
    Json list = Json::array();
    for (const auto& r : rows) {
      list.push_back({{"n", r.n},
                      {"move_types", r.move_types},
                      {"rank", r.rank},
                      {"nullity", r.nullity},
                      {"ds_rank", r.ds_rank},
                      {"stated_rank", r.stated_rank},
                      {"stated_nullity", r.stated_nullity},
                      {"rank_matches_stated", r.rank_matches},
                      {"nullity_matches_stated", r.nullity_matches}});
    }
    ctx.emit({{"rows", list}, {"consistent", consistent}});
    return consistent ? 0 : 1;
  }
  ctx.out << " n  types  rank  nullity  ds-rank  stated-rank  stated-nullity  flags\n";
  for (const auto& r : rows) {
    std::string flags;
    if (!r.rank_matches) flags += "rank!=stated ";
    if (!r.nullity_matches) flags += "nullity!=stated ";
    if (flags.empty()) flags = "-";
    while (flags.back() == ' ') flags.pop_back();
    char line[160];
    std::snprintf(line, sizeof line, "%2d  %5d  %4zu  %7zu  %7zu  %11zu  %14zu  %s\n", r.n, r.move_types, r.rank,
                  r.nullity, r.ds_rank, r.stated_rank, r.stated_nullity, flags.c_str());
    ctx.out << line;
  }
  ctx.out << "rank + nullity = n + 1, nullity = floor(n/2) + 1, ds-rank = nullity: " << yes_no(consistent) << "\n";
  return consistent ? 0 : 1;
}

std::string file_name_for(const std::string& name) {
  std::string s = name;
  std::replace_if(s.begin(), s.end(), [](char ch) { return ch == ':' || ch == ',' || ch == '~'; }, '_');
  return s + ".json";
}

int cmd_zoo(const Context& ctx, int n, const std::string& dir) {
  std::filesystem::create_directories(dir);
  Json manifest = Json::array();
  bool ok = true;
  const auto entries = zoo(n);
  for (const auto& e : entries) {
    const std::string file = file_name_for(e.name);
    save_complex((std::filesystem::path(dir) / file).string(), e.complex);
    const FVector f = f_vector(e.complex);
    ok = ok && f.euler_characteristic() == e.expected_chi && e.verified != Verdict::Refuted;
    manifest.push_back({{"name", e.name},
                        {"file", file},
                        {"dimension", e.dimension},
                        {"f", f.counts},
                        {"euler_characteristic", e.expected_chi},
                        {"verdict", to_string(e.verified)}});
  }
  write_file((std::filesystem::path(dir) / "manifest.json").string(), manifest.dump(2) + "\n");
  if (ctx.json) {
    ctx.emit({{"dimension", n}, {"entries", entries.size()}, {"directory", dir}});
  } else {
    ctx.out << "wrote " << entries.size() << " complexes and manifest.json to " << dir << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bistellar moves, f-vectors and move-invariant functionals of combinatorial manifolds", "bistellar"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of text");
  app.fallthrough();

  std::string spec, file, output, final_path;
  int type = -1, dim = 0, n_max = 0;
  std::size_t site = 0, steps = 0, cap = 0;
  std::uint64_t seed = 0;

  auto* gen = app.add_subcommand("gen", "generate a complex: NAME, sphere:n, simplex:n, cycle:n, join:p,q, consum:a,b");
  gen->add_option("spec", spec, "generator spec")->required();
  gen->add_option("-o,--output", output, "output file (stdout if omitted)");

  auto* info = app.add_subcommand("info", "f-vector, h-vector, Euler characteristic, Dehn-Sommerville quantities");
  info->add_option("file", file, "complex file")->required();

  auto* check = app.add_subcommand("check", "closed combinatorial manifold verdict");
  check->add_option("file", file, "complex file")->required();

  auto* moves = app.add_subcommand("moves", "list admissible bistellar move sites");
  moves->add_option("file", file, "complex file")->required();
  moves->add_option("--type", type, "only sites of this type")->check(CLI::NonNegativeNumber);

  auto* apply = app.add_subcommand("apply", "apply the move site with the given index");
  apply->add_option("file", file, "complex file")->required();
  apply->add_option("--site", site, "index into the list printed by `moves`")->required();
  apply->add_option("-o,--output", output, "output file")->required();

  auto* walk = app.add_subcommand("walk", "seeded random walk through the flip graph");
  walk->add_option("file", file, "complex file")->required();
  walk->add_option("--steps", steps, "number of moves")->required();
  walk->add_option("--seed", seed, "random seed")->required();
  walk->add_option("--cap", cap, "maximum facet count")->required();
  walk->add_option("-o,--output", output, "trace file (JSON lines)")->required();
  walk->add_option("--final", final_path, "also write the final complex");

  auto* solve = app.add_subcommand("solve", "move deltas, constraint rank and invariant nullspace");
  solve->add_option("--dim", dim, "dimension n >= 1")->required()->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "check invariant functionals against chi on the zoo");
  verify->add_option("--dim", dim, "dimension 1..5")->required()->check(CLI::Range(1, 5));

  auto* rank = app.add_subcommand("rank-table", "constraint ranks and nullspace dimensions for n = 1..max");
  rank->add_option("--max", n_max, "largest dimension")->required()->check(CLI::Range(1, 40));

  auto* zoo_cmd = app.add_subcommand("zoo", "export the zoo of dimension n with a manifest");
  zoo_cmd->add_option("--dim", dim, "dimension 1..5")->required()->check(CLI::Range(1, 5));
  zoo_cmd->add_option("-o,--output", output, "output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return 2;
  }

  const Context ctx{json, out};
  try {
    if (*gen) return cmd_gen(ctx, spec, output);
    if (*info) return cmd_info(ctx, file);
    if (*check) return cmd_check(ctx, file);
    if (*moves) return cmd_moves(ctx, file, type);
    if (*apply) return cmd_apply(ctx, file, site, output);
    if (*walk) return cmd_walk(ctx, file, steps, seed, cap, output, final_path);
    if (*solve) return cmd_solve(ctx, dim);
    if (*verify) return cmd_verify(ctx, dim);
    if (*rank) return cmd_rank_table(ctx, n_max);
    if (*zoo_cmd) return cmd_zoo(ctx, dim, output);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace bistellar::cli
