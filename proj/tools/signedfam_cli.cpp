#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"
#include "signedfam/canonical.hpp"
#include "signedfam/family_io.hpp"
#include "signedfam/harness.hpp"
#include "signedfam/search.hpp"

using namespace signedfam;
using nlohmann::json;

namespace {

struct GridOptions {
  std::string n = "3", r = "2", k = "2", t = "1";
  std::string mode = "enum";
  std::size_t max_cliques = SearchLimits{}.max_cliques;
  double seconds = SearchLimits{}.time_budget.count();
  std::size_t max_vertices = SearchLimits{}.max_vertices;
  std::uint64_t seed = 1;
  unsigned jobs = 0;
  bool explore_below = false;
  std::string out;
  std::string format = "json";

  harness::GridSpec spec() const {
    harness::GridSpec g;
    g.n = harness::RangeExpr(n);
    g.r = harness::RangeExpr(r);
    g.k = harness::RangeExpr(k);
    g.t = harness::RangeExpr(t);
    g.mode = mode == "arith" ? harness::Mode::arithmetic : harness::Mode::enumeration;
    g.limits.max_cliques = max_cliques;
    g.limits.time_budget = std::chrono::duration<double>(seconds);
    g.limits.max_vertices = max_vertices;
    g.require_k_threshold = !explore_below;
    g.seed = seed;
    g.jobs = jobs;
    return g;
  }
};

void add_grid_options(CLI::App* cmd, GridOptions& o, bool with_mode) {
  cmd->add_option("--n", o.n, "ground set size: value, range a..b or list")->capture_default_str();
  cmd->add_option("--r", o.r, "member size (may refer to t)")->capture_default_str();
  cmd->add_option("--k", o.k, "alphabet size (may refer to n, r, t and g)")->capture_default_str();
  cmd->add_option("--t", o.t, "intersection threshold")->capture_default_str();
  if (with_mode)
    cmd->add_option("--mode", o.mode, "verification mode")->check(CLI::IsMember({"enum", "arith"}))->capture_default_str();
  cmd->add_option("--limits-max-cliques", o.max_cliques, "stop after this many maximal families")->capture_default_str();
  cmd->add_option("--limits-seconds", o.seconds, "time budget per cell")->capture_default_str();
  cmd->add_option("--limits-max-vertices", o.max_vertices, "largest universe to enumerate")->capture_default_str();
  cmd->add_option("--seed", o.seed, "seed for random wreath maps")->capture_default_str();
  cmd->add_option("--jobs", o.jobs, "worker threads (0: all cores)")->capture_default_str();
  cmd->add_flag("--explore-below-threshold", o.explore_below, "enumerate cells with k < g descriptively");
  cmd->add_option("--out", o.out, "output file (default stdout)");
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
}

std::ostream& output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

int emit_report(const harness::Report& report, const GridOptions& o) {
  std::ofstream file;
  auto& os = output(o.out, file);
  if (o.format == "csv")
    os << report.to_csv();
  else
    os << report.to_json().dump(2) << '\n';
  std::cerr << report.command << ": " << report.records.size() << " cells, " << report.count(harness::Status::pass)
            << " pass, " << report.count(harness::Status::fail) << " fail, " << report.count(harness::Status::skip)
            << " skip\n";
  return report.exit_code();
}

json map_json(const WreathMap& m) { return {{"column_perm", m.column_perm()}, {"sign_perms", m.sign_perms()}}; }

json profile_json(const CoverProfile& p) {
  json covers = json::array();
  for (const auto& c : p.covers) covers.push_back(to_json(c));
  json out{{"tau", p.tau}, {"covers", covers}};
  if (p.cover_union) out["cover_union"] = to_json(*p.cover_union);
  if (p.ell) out["ell"] = *p.ell;
  if (p.cover_tau) out["cover_tau"] = *p.cover_tau;
  return out;
}

int run_enumerate(const GridOptions& o, bool classify_members) {
  const auto grid = o.spec();
  std::ofstream file;
  auto& os = output(o.out, file);
  std::vector<harness::CensusRow> rows;
  bool truncated = false;
  for (const auto& cell : harness::expand_grid(grid)) {
    harness::CensusRow row{cell, 0, 0, 0, 0, false, {}};
    if (!cell.params) {
      row.note = cell.invalid_reason;
      rows.push_back(row);
      continue;
    }
    try {
      IntersectionGraph graph(*cell.params, grid.limits.max_vertices);
      std::optional<Classifier> classifier;
      if (classify_members) classifier.emplace(*cell.params);
      auto stats = for_each_maximal_clique(graph, grid.limits, [&](std::span<const std::uint32_t> clique) {
        Family fam = family_from_clique(graph, clique);
        const bool trivial = is_trivial(fam).trivial;
        ++row.total;
        if (trivial) {
          ++row.trivial;
        } else {
          ++row.nontrivial;
          row.max_nontrivial_size = std::max(row.max_nontrivial_size, fam.size());
        }
        if (o.format == "json") {
          json line{{"family", to_json(fam)}, {"size", fam.size()}, {"trivial", trivial}};
          if (classifier) line["class"] = classifier->classify_trusted(fam).label();
          os << line.dump() << '\n';
        }
      });
      row.truncated = stats.truncated;
      row.note = stats.reason;
    } catch (const CapacityError& e) {
      row.truncated = true;
      row.note = e.what();
    }
    if (row.truncated) {
      truncated = true;
      std::cerr << "(" << cell.n << "," << cell.r << "," << cell.k << "," << cell.t << "): " << row.note << '\n';
    }
    rows.push_back(row);
  }
  if (o.format == "csv") os << harness::census_csv(rows);
  return truncated ? 3 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for t-intersecting families of k-signed r-sets"};
  app.require_subcommand(1);

  GridOptions formulas, audit, thm1, thm2, enumerate;
  auto* c_formulas = app.add_subcommand("formulas", "check size identities and closed forms over a grid");
  add_grid_options(c_formulas, formulas, true);
  auto* c_audit = app.add_subcommand("audit-bounds", "audit cover-structure conclusions and size bounds");
  add_grid_options(c_audit, audit, false);
  auto* c_thm1 = app.add_subcommand("verify-theorem1", "size threshold classification of maximal families");
  add_grid_options(c_thm1, thm1, true);
  auto* c_thm2 = app.add_subcommand("verify-theorem2", "structure of the largest non-trivial families");
  add_grid_options(c_thm2, thm2, true);

  bool classify_members = false;
  auto* c_enum = app.add_subcommand("enumerate", "list maximal families (NDJSON) or a census (CSV)");
  add_grid_options(c_enum, enumerate, false);
  c_enum->add_flag("--classify", classify_members, "label each family");

  std::string input;
  auto* c_classify = app.add_subcommand("classify", "classify a maximal t-intersecting family");
  c_classify->add_option("input", input, "family JSON file")->required()->check(CLI::ExistingFile);

  std::string file_a, file_b;
  auto* c_iso = app.add_subcommand("isomorphic", "test two families for isomorphism");
  c_iso->add_option("a", file_a, "first family JSON file")->required()->check(CLI::ExistingFile);
  c_iso->add_option("b", file_b, "second family JSON file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_formulas->parsed()) return emit_report(harness::run_formulas(formulas.spec()), formulas);
    if (c_audit->parsed()) return emit_report(harness::run_audit_bounds(audit.spec()), audit);
    if (c_thm1->parsed()) return emit_report(harness::run_theorem1(thm1.spec()), thm1);
    if (c_thm2->parsed()) return emit_report(harness::run_theorem2(thm2.spec()), thm2);
    if (c_enum->parsed()) return run_enumerate(enumerate, classify_members);
    if (c_classify->parsed()) {
      const Family fam = read_family_file(input);
      const auto result = classify(fam);
      json out{{"class", result.label()}, {"parameter", result.parameter}, {"cover_profile", profile_json(result.diagnostics)}};
      if (result.witness) out["witness"] = map_json(*result.witness);
      std::cout << out.dump(2) << '\n';
      return 0;
    }
    if (c_iso->parsed()) {
      const auto result = are_isomorphic(read_family_file(file_a), read_family_file(file_b));
      json out{{"isomorphic", result.isomorphic}};
      if (result.witness) out["witness"] = map_json(*result.witness);
      std::cout << out.dump(2) << '\n';
      return result.isomorphic ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
