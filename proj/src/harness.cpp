#include "signedfam/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "signedfam/canonical.hpp"
#include "signedfam/constructions.hpp"
#include "signedfam/counting.hpp"
#include "signedfam/covers.hpp"
#include "signedfam/family_io.hpp"

namespace signedfam::harness {

using nlohmann::json;

// ---------------------------------------------------------------- ranges

namespace {

long parse_int(const std::string& s, std::size_t& i, const std::string& text) {
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (start == i) throw ParameterError("expected a number in range '" + text + "'");
  return std::stol(s.substr(start, i - start));
}

} // namespace

RangeExpr::RangeExpr(std::string text) : text_(std::move(text)) {
  std::string s;
  for (char c : text_)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParameterError("empty range");
  std::size_t i = 0;
  auto term = [&]() {
    Term out;
    if (i < s.size() && std::string_view("nrtg").find(s[i]) != std::string_view::npos) {
      out.var = s[i++];
    } else {
      bool neg = i < s.size() && s[i] == '-';
      if (neg) ++i;
      out.offset = parse_int(s, i, text_) * (neg ? -1 : 1);
      return out;
    }
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      const long sign = s[i++] == '+' ? 1 : -1;
      out.offset += sign * parse_int(s, i, text_);
    }
    return out;
  };
  for (;;) {
    Item item;
    item.lo = term();
    item.hi = item.lo;
    if (s.compare(i, 2, "..") == 0) {
      i += 2;
      item.hi = term();
    }
    items_.push_back(item);
    if (i == s.size()) break;
    if (s[i] != ',') throw ParameterError("unexpected '" + std::string(1, s[i]) + "' in range '" + text_ + "'");
    ++i;
  }
}

std::string RangeExpr::variables() const {
  std::string out;
  for (const auto& it : items_)
    for (char v : {it.lo.var, it.hi.var})
      if (v && out.find(v) == std::string::npos) out.push_back(v);
  return out;
}

std::vector<int> RangeExpr::expand(const Env& env) const {
  auto value = [&](const Term& term) -> long {
    if (!term.var) return term.offset;
    const std::optional<long>* slot = term.var == 'n' ? &env.n : term.var == 'r' ? &env.r : term.var == 't' ? &env.t : &env.g;
    if (!*slot) throw ParameterError(std::string("variable '") + term.var + "' is not bound in range '" + text_ + "'");
    return **slot + term.offset;
  };
  std::vector<int> out;
  for (const auto& it : items_)
    for (long v = value(it.lo), hi = value(it.hi); v <= hi; ++v) out.push_back(static_cast<int>(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Cell> expand_grid(const GridSpec& grid) {
  const std::map<char, const RangeExpr*> exprs{{'n', &grid.n}, {'r', &grid.r}, {'k', &grid.k}, {'t', &grid.t}};
  std::map<char, std::string> deps;
  for (const auto& [name, e] : exprs) {
    std::string d = e->variables();
    if (d.find('g') != std::string::npos) {
      if (name != 'k') throw ParameterError("only the k range may refer to g");
      d.erase(d.find('g'), 1);
      d += "nrt";
    }
    deps[name] = d;
  }
  std::string order;
  while (order.size() < 4) {
    bool progressed = false;
    for (char v : std::string("trnk")) {
      if (order.find(v) != std::string::npos) continue;
      if (std::all_of(deps[v].begin(), deps[v].end(), [&](char d) { return order.find(d) != std::string::npos; })) {
        order.push_back(v);
        progressed = true;
      }
    }
    if (!progressed) throw ParameterError("grid ranges refer to each other cyclically");
  }

  std::vector<Cell> cells;
  std::map<char, long> bound;
  auto recurse = [&](auto& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      Cell c{static_cast<int>(bound['n']), static_cast<int>(bound['r']), static_cast<int>(bound['k']),
             static_cast<int>(bound['t']), std::nullopt, {}};
      if (Params::is_valid(c.n, c.r, c.k, c.t))
        c.params = Params(c.n, c.r, c.k, c.t);
      else
        c.invalid_reason = "invalid parameters: need n >= r >= t >= 1 and k >= 2";
      cells.push_back(std::move(c));
      return;
    }
    const char v = order[depth];
    RangeExpr::Env env;
    for (char name : std::string("nrt"))
      if (order.find(name) < depth) (name == 'n' ? env.n : name == 'r' ? env.r : env.t) = bound[name];
    if (v == 'k' && exprs.at('k')->variables().find('g') != std::string::npos) {
      try {
        env.g = k_threshold(static_cast<int>(bound['n']), static_cast<int>(bound['r']), static_cast<int>(bound['t']))
                    .convert_to<long>();
      } catch (const Error& e) {
        Cell c{static_cast<int>(bound['n']), static_cast<int>(bound['r']), 0, static_cast<int>(bound['t']),
               std::nullopt, std::string("k refers to g, undefined here: ") + e.what()};
        cells.push_back(std::move(c));
        return;
      }
    }
    for (int value : exprs.at(v)->expand(env)) {
      bound[v] = value;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
  return cells;
}

// ---------------------------------------------------------------- records

std::string to_string(Status s) {
  switch (s) {
  case Status::pass: return "pass";
  case Status::fail: return "fail";
  case Status::skip: return "skip";
  }
  return "skip";
}

json to_json(const VerdictRecord& rec) {
  return {{"check", rec.check},
          {"params", {{"n", rec.cell.n}, {"r", rec.cell.r}, {"k", rec.cell.k}, {"t", rec.cell.t}}},
          {"expected", rec.expected},
          {"provenance", rec.provenance},
          {"observed", rec.observed},
          {"status", to_string(rec.status)},
          {"runtime_s", rec.runtime_s},
          {"witness", rec.witness}};
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [s](const VerdictRecord& r) { return r.status == s; }));
}

json Report::to_json() const {
  json recs = json::array();
  for (const auto& r : records) recs.push_back(harness::to_json(r));
  return {{"schema_version", kReportSchemaVersion},
          {"command", command},
          {"summary",
           {{"cells", records.size()}, {"pass", count(Status::pass)}, {"fail", count(Status::fail)},
            {"skip", count(Status::skip)}}},
          {"records", recs}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

} // namespace

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "check,n,r,k,t,status,expected,observed,provenance,runtime_s\n";
  for (const auto& r : records)
    os << csv_field(r.check) << ',' << r.cell.n << ',' << r.cell.r << ',' << r.cell.k << ',' << r.cell.t << ','
       << to_string(r.status) << ',' << csv_field(r.expected) << ',' << csv_field(r.observed) << ','
       << csv_field(r.provenance) << ',' << r.runtime_s << '\n';
  return os.str();
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "n,r,k,t,total,trivial,nontrivial,max_nontrivial_size\n";
  for (const auto& r : rows)
    os << r.cell.n << ',' << r.cell.r << ',' << r.cell.k << ',' << r.cell.t << ',' << r.total << ',' << r.trivial
       << ',' << r.nontrivial << ',' << r.max_nontrivial_size << '\n';
  return os.str();
}

// ---------------------------------------------------------------- helpers

namespace {

json map_json(const WreathMap& m) { return {{"column_perm", m.column_perm()}, {"sign_perms", m.sign_perms()}}; }

// Collects the outcome of the individual checks of one cell.
class Checks {
public:
  void expect(bool ok, const std::string& what, json values = json::object()) {
    ++total_;
    if (!ok) failures_.push_back({{"check", what}, {"values", std::move(values)}});
  }
  void not_applicable(const std::string& what) { ++na_[what]; }
  std::size_t total() const { return total_; }
  bool failed() const { return !failures_.empty(); }

  void finish(VerdictRecord& rec) const {
    rec.witness["checks"] = total_;
    if (!na_.empty()) rec.witness["not_applicable"] = na_;
    if (failed()) {
      rec.witness["failures"] = failures_;
      rec.status = Status::fail;
    } else {
      rec.status = total_ ? Status::pass : Status::skip;
    }
    std::string obs = total_ ? std::to_string(total_) + " checks, " + std::to_string(failures_.size()) + " failed"
                             : std::string("no applicable checks");
    rec.observed = rec.observed.empty() ? obs : rec.observed + "; " + obs;
  }

private:
  std::size_t total_ = 0;
  json failures_ = json::array();
  std::map<std::string, std::size_t> na_;
};

VerdictRecord make_record(std::string check, const Cell& cell) {
  VerdictRecord rec;
  rec.check = std::move(check);
  rec.cell = cell;
  return rec;
}

bool skip_invalid(VerdictRecord& rec) {
  if (rec.cell.params) return false;
  rec.status = Status::skip;
  rec.provenance = "n/a";
  rec.observed = rec.cell.invalid_reason;
  return true;
}

// Below the alphabet threshold the theorems claim nothing; mismatches are kept as data.
void descriptive(VerdictRecord& rec) {
  if (rec.witness.contains("failures")) {
    rec.witness["deviations"] = std::move(rec.witness["failures"]);
    rec.witness.erase("failures");
  }
  rec.status = Status::skip;
  rec.observed = "below threshold, descriptive only; " + rec.observed;
}

void skip(VerdictRecord& rec, std::string why) {
  rec.status = Status::skip;
  rec.observed = rec.observed.empty() ? std::move(why) : std::move(why) + "; " + rec.observed;
}

std::string str(const BigInt& v) { return v.str(); }
std::string str(const Rational& v) { return v.str(); }

bool below_threshold(const Params& p) { return !k_meets_threshold(p); }

} // namespace

// ---------------------------------------------------------------- formulas

VerdictRecord formulas_cell(const Cell& cell, const GridSpec& grid) {
  auto rec = make_record("formulas", cell);
  if (skip_invalid(rec)) return rec;
  const Params& p = *cell.params;
  const int n = p.n(), r = p.r(), k = p.k(), t = p.t();
  rec.expected = "size identities and closed forms hold exactly";
  rec.provenance = "identity";
  Checks checks;

  if (r >= t + 1)
    for (int a = t + 1; a <= p.p(); ++a) {
      auto s = check_slc_identity(p, a);
      checks.expect(s.equal, "slc a=" + std::to_string(a), {{"lhs", str(s.lhs)}, {"rhs", str(s.rhs)}});
    }

  if (r >= t + 1 && t + 2 <= p.p()) {
    const BigInt closed = size_h1_closed(p, t + 2);
    const BigInt z = (t + 2) * extensions(n - t - 1, r - t - 1, k) - (t + 1) * extensions(n - t - 2, r - t - 2, k);
    checks.expect(closed == z, "Z", {{"closed", str(closed)}, {"formula", str(z)}});
  }

  if (r == t + 2 && t + 3 <= n) {
    const BigInt closed = size_h1_closed(p, t + 3);
    const BigInt expect = BigInt(3) * (n - t - 1) * k + t - 3;
    checks.expect(closed == expect, "H1(t+3) at r=t+2", {{"closed", str(closed)}, {"formula", str(expect)}});
  }

  if (r >= t + 2 && r < n && n >= t + 2 && !below_threshold(p)) {
    const BigInt diff = f_value(p, r + 1) - f_value(p, r);
    const Rational ratio(diff, extensions(n - t - 2, r - t - 2, k));
    const Rational expect = Rational(BigInt(n - t - 1) * k, BigInt(r - t - 1)) - (r - t);
    checks.expect(diff > 0 && ratio == expect, "f(r+1) > f(r)",
                  {{"difference", str(diff)}, {"ratio", str(ratio)}, {"formula", str(expect)}});
  }

  // the C(t+2,i) factor counts positions in M_p \ M_t, so the bound needs p - t <= t + 2
  if (r >= t + 3 && p.p() <= 2 * t + 2)
    for (int i = 3; i <= p.p() - t && t + i <= r; ++i) {
      const BigInt count = count_N(t + i, p.p(), p);
      const BigInt bound = binomial(t + 2, i) * extensions(n - t - i, r - t - i, k);
      checks.expect(count <= bound, "N bound i=" + std::to_string(i), {{"count", str(count)}, {"bound", str(bound)}});
    }

  if (grid.mode == Mode::enumeration) {
    if (universe_size(p) > grid.limits.max_vertices || n > kMaxColumns || k > kMaxSigns) {
      checks.not_applicable("enumeration: universe above the vertex budget");
    } else {
      // direct N_b(M_a, M_t) counts from one pass over the universe
      std::vector<std::vector<BigInt>> counted(static_cast<std::size_t>(n + 1),
                                               std::vector<BigInt>(static_cast<std::size_t>(r + 1)));
      const std::uint64_t mt = prefix_set(t, p).mask();
      for_each_in_universe(p, [&](const SignedSet& f) {
        if ((f.mask() & mt) != mt) return;
        for (int a = t + 1; a <= n; ++a)
          ++counted[static_cast<std::size_t>(a)][static_cast<std::size_t>(
              std::popcount(f.mask() & prefix_set(a, p).mask()))];
      });
      for (int a = t + 1; a <= n; ++a)
        for (int b = t + 1; b <= std::min(a, r); ++b) {
          const BigInt closed = count_N(b, a, p);
          const BigInt& direct = counted[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
          checks.expect(closed == direct, "N a=" + std::to_string(a) + " b=" + std::to_string(b),
                        {{"closed", str(closed)}, {"enumerated", str(direct)}});
        }
      if (r >= t + 1)
        for (int ell = t + 2; ell <= p.p(); ++ell) {
          const BigInt closed = size_h1_closed(p, ell);
          const std::size_t built = build_h1(p, ell).size();
          checks.expect(closed == built, "H1 size ell=" + std::to_string(ell),
                        {{"closed", str(closed)}, {"enumerated", built}});
        }
      if (r >= t + 2 && n >= r + 2)
        for (int c = r + 2; c <= std::min(2 * r - t, n); ++c) {
          const BigInt closed = size_h2_closed(p, c);
          const std::size_t built = build_h2(p, c).size();
          checks.expect(closed == built, "H2 size c=" + std::to_string(c),
                        {{"closed", str(closed)}, {"enumerated", built}});
        }
    }
  }
  checks.finish(rec);
  return rec;
}

// ---------------------------------------------------------------- bounds

namespace {

constexpr std::size_t kFsSweepBudget = 2'000'000;

std::vector<std::uint64_t> all_signed_sets(int n, int k) {
  std::vector<std::uint64_t> out{0};
  for (int x = 1; x <= n; ++x) {
    const std::size_t before = out.size();
    for (int y = 1; y <= k; ++y)
      for (std::size_t i = 0; i < before; ++i) out.push_back(out[i] | std::uint64_t{1} << point_bit(x, y));
  }
  return out;
}

} // namespace

VerdictRecord audit_bounds_cell(const Cell& cell, const GridSpec& grid) {
  auto rec = make_record("audit-bounds", cell);
  if (skip_invalid(rec)) return rec;
  const Params& p = *cell.params;
  const int n = p.n(), r = p.r(), k = p.k(), t = p.t();
  rec.expected = "cover-structure conclusions and size bounds hold for every applicable maximal family";
  rec.provenance = "lemma";
  if (grid.mode == Mode::arithmetic) {
    skip(rec, "bound audits need enumeration mode");
    return rec;
  }

  IntersectionGraph graph(p, grid.limits.max_vertices);
  Checks checks;
  std::mt19937_64 rng(grid.seed ^ (static_cast<std::uint64_t>(n) << 24 | static_cast<std::uint64_t>(r) << 16 |
                                   static_cast<std::uint64_t>(k) << 8 | static_cast<std::uint64_t>(t)));
  const bool large_tau_applies = n >= t + 2 && r >= t + 2 && !below_threshold(p);
  const auto probes = all_signed_sets(n, k);
  std::size_t families = 0, trivial = 0, fs_checks = 0;
  bool fs_truncated = false;

  auto stats = for_each_maximal_clique(graph, grid.limits, [&](std::span<const std::uint32_t> clique) {
    ++families;
    Family fam = family_from_clique(graph, clique);
    const json fam_json = to_json(fam);
    const auto size = fam.size();

    for (const auto& u : probes) {
      if (fs_checks >= kFsSweepBudget) {
        fs_truncated = true;
        break;
      }
      const SignedSet us = SignedSet::from_mask(u);
      for (const auto& f : fam.members()) {
        if (std::popcount(u & f.mask()) >= t) continue;
        ++fs_checks;
        auto fs = fs_bound_check(fam, us, f);
        if (!fs.pass)
          checks.expect(false, "superset bound",
                        {{"family", fam_json}, {"u", to_json(us)}, {"witness", to_json(f)},
                         {"with_u", fs.with_u}, {"best_with_r", fs.best_with_r}, {"multiplier", str(fs.multiplier)}});
        else
          checks.expect(true, "superset bound");
      }
    }

    if (is_trivial(fam).trivial) {
      ++trivial;
      checks.not_applicable("trivial family");
      return;
    }
    const CoverProfile profile = covering_number(fam);
    checks.expect(profile.tau >= t + 1, "non-trivial family has tau >= t+1", {{"family", fam_json}, {"tau", profile.tau}});
    const WreathMap sigma = WreathMap::random(n, k, rng);
    checks.expect(covering_number(apply_map(sigma, fam)).tau == profile.tau, "tau invariant under a wreath map",
                  {{"family", fam_json}, {"map", map_json(sigma)}});

    if (profile.tau == t + 1) {
      const auto audit = audit_assumption1(fam, profile);
      checks.expect(audit.pass, "cover union structure",
                    {{"family", fam_json}, {"reason", audit.failure}, {"cover_tau", audit.cover_tau}, {"ell", audit.ell}});
      if (profile.covers.size() == 1) {
        const BigInt bound = bound_unique_cover(p);
        checks.expect(size <= bound, "unique-cover bound", {{"family", fam_json}, {"size", size}, {"bound", str(bound)}});
      } else if (profile.cover_tau == t && profile.ell && *profile.ell >= t + 2) {
        const BigInt bound = bound_multi_cover(p, *profile.ell);
        checks.expect(size <= bound, "multi-cover bound",
                      {{"family", fam_json}, {"size", size}, {"ell", *profile.ell}, {"bound", str(bound)}});
      } else {
        checks.not_applicable("several covers with cover covering number t+1");
      }
    } else if (large_tau_applies) {
      const BigInt bound = bound_large_tau(p);
      checks.expect(size <= bound, "large-tau bound",
                    {{"family", fam_json}, {"size", size}, {"tau", profile.tau}, {"bound", str(bound)}});
    } else {
      checks.not_applicable("tau >= t+2 below the alphabet threshold");
    }
  });

  rec.witness["families"] = families;
  rec.witness["trivial"] = trivial;
  rec.witness["superset_checks"] = fs_checks;
  if (fs_truncated) rec.witness["superset_sweep"] = "stopped at the check budget";
  rec.observed = std::to_string(families) + " maximal families (" + std::to_string(trivial) + " trivial)";
  checks.finish(rec);
  if (stats.truncated && rec.status != Status::fail) skip(rec, "search truncated: " + stats.reason);
  return rec;
}

// ---------------------------------------------------------------- theorem 1

namespace {

bool theorem1_hypotheses(const Params& p) { return p.n() >= p.t() + 2 && p.r() >= p.t() + 1; }

// Whether the named construction is on the theorem's list for these parameters.
bool on_theorem1_list(const Params& p, Kind kind, int parameter) {
  const int n = p.n(), r = p.r(), t = p.t();
  if (kind == Kind::h1) {
    if (r >= t + 2 && (parameter == r || parameter == p.p())) return true;
    return r <= 2 * t + 2 && r != t + 2 && parameter == t + 2;
  }
  if (kind == Kind::h2) return n >= r + 2 && r + 2 >= t + 4;
  return false;
}

Family construction(const Params& p, Kind kind, int parameter) {
  return kind == Kind::h1 ? build_h1(p, parameter) : build_h2(p, parameter);
}

} // namespace

VerdictRecord theorem1_cell(const Cell& cell, const GridSpec& grid) {
  auto rec = make_record("verify-theorem1", cell);
  if (skip_invalid(rec)) return rec;
  const Params& p = *cell.params;
  const int n = p.n(), r = p.r(), t = p.t();
  if (!theorem1_hypotheses(p)) {
    rec.provenance = "n/a";
    skip(rec, "outside the theorem's hypotheses (n >= t+2, r >= t+1)");
    return rec;
  }
  const bool below = below_threshold(p);
  const BigInt f = f_value(p, r);
  rec.witness["f"] = str(f);
  rec.witness["g"] = str(g_value(n, r, t));
  Checks checks;

  if (grid.mode == Mode::arithmetic) {
    rec.expected = "listed constructions reach f(n,r,k,r,t), unlisted ones and the large-tau bound stay below";
    rec.provenance = "theorem";
    if (below) {
      skip(rec, "k below max{2, g}");
      return rec;
    }
    for (int ell = t + 2; ell <= p.p(); ++ell) {
      const BigInt size = size_h1_closed(p, ell);
      const bool listed = on_theorem1_list(p, Kind::h1, ell);
      checks.expect((size >= f) == listed, std::string("H1 ") + (listed ? ">= f" : "< f") + " ell=" + std::to_string(ell),
                    {{"size", str(size)}, {"f", str(f)}});
    }
    if (r >= t + 2 && n >= r + 2)
      for (int c = r + 2; c <= std::min(2 * r - t, n); ++c) {
        const BigInt size = size_h2_closed(p, c);
        checks.expect(size >= f, "H2 >= f c=" + std::to_string(c), {{"size", str(size)}, {"f", str(f)}});
      }
    if (r >= t + 2) {
      const BigInt bound = bound_large_tau(p);
      const auto phi = phi_sign(p, bound);
      checks.expect(bound < f && phi.sign > 0, "large-tau bound < f",
                    {{"bound", str(bound)}, {"f", str(f)}, {"phi", str(phi.value)}});
    }
    checks.finish(rec);
    return rec;
  }

  rec.expected = "every maximal non-trivial family has size >= f iff it is isomorphic to a listed construction";
  rec.provenance = below ? "n/a" : "theorem";
  if (below && grid.require_k_threshold) {
    skip(rec, "k below max{2, g}");
    return rec;
  }
  IntersectionGraph graph(p, grid.limits.max_vertices);
  Classifier classifier(p);
  std::map<std::string, std::size_t> census;
  std::map<std::pair<Kind, int>, Family> targets;
  std::size_t trivial = 0;
  auto stats = for_each_maximal_clique(graph, grid.limits, [&](std::span<const std::uint32_t> clique) {
    Family fam = family_from_clique(graph, clique);
    if (is_trivial(fam).trivial) {
      ++trivial;
      return;
    }
    const auto cls = classifier.classify_trusted(fam);
    ++census[cls.label() + " size " + std::to_string(fam.size())];
    const bool listed = on_theorem1_list(p, cls.kind, cls.parameter);
    const bool large = BigInt(fam.size()) >= f;
    checks.expect(large == listed, "size >= f iff listed",
                  {{"family", to_json(fam)}, {"class", cls.label()}, {"size", fam.size()}, {"f", str(f)}});
    if (cls.kind == Kind::h1 || cls.kind == Kind::h2) {
      auto key = std::make_pair(cls.kind, cls.parameter);
      auto it = targets.find(key);
      if (it == targets.end()) it = targets.emplace(key, construction(p, cls.kind, cls.parameter)).first;
      checks.expect(apply_map(*cls.witness, fam) == it->second, "witness maps onto the construction",
                    {{"family", to_json(fam)}, {"class", cls.label()}, {"map", map_json(*cls.witness)}});
    }
  });
  rec.witness["census"] = census;
  rec.witness["trivial"] = trivial;
  std::size_t nontrivial = 0;
  for (const auto& [label, count] : census) nontrivial += count;
  rec.observed = std::to_string(nontrivial) + " non-trivial maximal families";
  checks.finish(rec);
  if (below) descriptive(rec);
  if (stats.truncated) skip(rec, "search truncated: " + stats.reason);
  return rec;
}

// ---------------------------------------------------------------- theorem 2

VerdictRecord theorem2_cell(const Cell& cell, const GridSpec& grid) {
  auto rec = make_record("verify-theorem2", cell);
  if (skip_invalid(rec)) return rec;
  const Params& p = *cell.params;
  const int n = p.n(), r = p.r(), t = p.t();
  if (t < 2 || !theorem1_hypotheses(p)) {
    rec.provenance = "n/a";
    skip(rec, "outside the theorem's hypotheses (t >= 2, n >= t+2, r >= t+1)");
    return rec;
  }
  const bool below = below_threshold(p);
  const int designated = p.p() <= 2 * t + 2 ? t + 2 : p.p();
  rec.witness["designated_ell"] = designated;
  Checks checks;

  if (grid.mode == Mode::arithmetic) {
    rec.expected = "mu > 0 iff p <= 2t+2; H1(ell=" + std::to_string(designated) + ") strictly largest candidate";
    rec.provenance = "theorem";
    if (below) {
      skip(rec, "k below max{2, g}");
      return rec;
    }
    if (r < t + 2 || n < t + 3) {
      skip(rec, "mu needs r >= t+2 and n >= t+3");
      return rec;
    }
    const auto mu = mu_sign(p);
    const int want = p.p() <= 2 * t + 2 ? 1 : -1;
    checks.expect(mu.sign == want, "mu sign", {{"mu", str(mu.value)}, {"expected_sign", want}});
    const BigInt best = size_h1_closed(p, designated);
    for (int ell = t + 2; ell <= p.p(); ++ell) {
      if (ell == designated) continue;
      const BigInt other = size_h1_closed(p, ell);
      checks.expect(best > other, "H1 designated > H1 ell=" + std::to_string(ell),
                    {{"designated", str(best)}, {"other", str(other)}});
    }
    if (n >= r + 2)
      for (int c = r + 2; c <= std::min(2 * r - t, n); ++c) {
        const BigInt other = size_h2_closed(p, c);
        checks.expect(best > other, "H1 designated > H2 c=" + std::to_string(c),
                      {{"designated", str(best)}, {"other", str(other)}});
      }
    checks.finish(rec);
    return rec;
  }

  rec.expected = "every largest non-trivial family is isomorphic to H1(ell=" + std::to_string(designated) + ")";
  rec.provenance = below ? "n/a" : "theorem";
  if (below && grid.require_k_threshold) {
    skip(rec, "k below max{2, g}");
    return rec;
  }
  const auto largest = largest_nontrivial(p, grid.limits);
  const Family target = build_h1(p, designated);
  checks.expect(!largest.families.empty(), "a non-trivial family exists");
  for (const auto& fam : largest.families) {
    const auto iso = are_isomorphic(fam, target);
    json values{{"family", to_json(fam)}, {"size", fam.size()}, {"target_size", target.size()}};
    checks.expect(iso.isomorphic, "isomorphic to the designated H1", values);
    if (iso.isomorphic)
      checks.expect(apply_map(*iso.witness, fam) == target, "witness maps onto H1",
                    {{"family", to_json(fam)}, {"map", map_json(*iso.witness)}});
  }
  rec.witness["largest_size"] = largest.size;
  rec.witness["largest_count"] = largest.families.size();
  rec.observed = std::to_string(largest.families.size()) + " largest families of size " + std::to_string(largest.size);
  checks.finish(rec);
  if (below) descriptive(rec);
  return rec;
}

// ---------------------------------------------------------------- runners

namespace {

using CellFn = VerdictRecord (*)(const Cell&, const GridSpec&);

VerdictRecord run_one(CellFn fn, const std::string& command, const Cell& cell, const GridSpec& grid) {
  const auto start = std::chrono::steady_clock::now();
  VerdictRecord rec;
  try {
    rec = fn(cell, grid);
  } catch (const TruncatedError& e) {
    rec = make_record(command, cell);
    skip(rec, e.what());
  } catch (const CapacityError& e) {
    rec = make_record(command, cell);
    skip(rec, e.what());
  } catch (const std::exception& e) {
    rec = make_record(command, cell);
    rec.status = Status::fail;
    rec.observed = std::string("error: ") + e.what();
    rec.witness["error"] = e.what();
  }
  rec.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

Report run_cells(const std::string& command, const GridSpec& grid, CellFn fn) {
  const auto cells = expand_grid(grid);
  Report report;
  report.command = command;
  report.records.resize(cells.size());
  unsigned jobs = grid.jobs ? grid.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(cells.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();)
      report.records[i] = run_one(fn, command, cells[i], grid);
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }
  return report;
}

} // namespace

Report run_formulas(const GridSpec& grid) { return run_cells("formulas", grid, formulas_cell); }
Report run_audit_bounds(const GridSpec& grid) { return run_cells("audit-bounds", grid, audit_bounds_cell); }
Report run_theorem1(const GridSpec& grid) { return run_cells("verify-theorem1", grid, theorem1_cell); }
Report run_theorem2(const GridSpec& grid) { return run_cells("verify-theorem2", grid, theorem2_cell); }

} // namespace signedfam::harness
