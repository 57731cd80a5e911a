// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wlp/cli/cli.hpp"
#include "wlp/json_io.hpp"
#include "wlp/matroid.hpp"
#include "wlp/realization.hpp"
#include "wlp/wilson_matroid.hpp"

#ifndef WLP_VERSION
#define WLP_VERSION "0.0.0"
#endif

namespace wlp::cli {
namespace {

using nlohmann::json;

struct Options {
  std::vector<std::string> diagrams;
  std::string input;
  std::string config;
  bool json_out = false;
  bool text_out = false;
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 1;
  std::string n_range = "4:6";
  std::string k_range = "0:2";
  std::string definedness;
  std::string connected;
  std::string crossing;
  int configs = 3;
  bool summary_only = false;
  bool zero_z = false;
  bool inject_fault = false;
};

Limits limits_of(const Options& o) {
  return Limits{o.budget ? *o.budget : budget_from_env(Limits{}.max_subsets)};
}

json envelope(std::string_view command, const Options& o) {
  return {{"schema", kReportSchema},
          {"tool", "wlp"},
          {"version", WLP_VERSION},
          {"command", command},
          {"seed", o.seed}};
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

std::vector<WilsonDiagram> read_diagrams(const Options& o) {
  std::vector<WilsonDiagram> out;
  for (const std::string& text : o.diagrams) {
    try {
      out.push_back(parse_diagram(text));
    } catch (const Error& e) {
      throw Error(e.code(), "--diagram: " + std::string(e.what()));
    }
  }
  if (!o.input.empty()) {
    std::ifstream file(o.input);
    if (!file) throw Error(Errc::kParse, "cannot open '" + o.input + "'");
    std::string line;
    for (int number = 1; std::getline(file, line); ++number) {
      const std::string body = trim(line);
      if (body.empty() || body[0] == '#') continue;
      try {
        out.push_back(parse_diagram(body));
      } catch (const Error& e) {
        throw Error(e.code(), o.input + ":" + std::to_string(number) + ": " + e.what());
      }
    }
  }
  if (out.empty()) throw Error(Errc::kParse, "no diagram given; use --diagram or --input");
  return out;
}

WilsonDiagram single_diagram(const Options& o) {
  const std::vector<WilsonDiagram> all = read_diagrams(o);
  if (all.size() != 1) throw Error(Errc::kParse, "this command takes exactly one diagram");
  return all.front();
}

std::optional<bool> yes_no(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  if (text == "yes") return true;
  if (text == "no") return false;
  throw Error(Errc::kParse, std::string(flag) + " takes 'yes' or 'no'");
}

SweepSpec sweep_of(const Options& o) {
  SweepSpec sweep;
  sweep.n = parse_range(o.n_range);
  sweep.k = parse_range(o.k_range);
  if (!o.definedness.empty()) {
    if (o.definedness != "generic" && o.definedness != "exact" &&
        o.definedness != "overdefined" && o.definedness != "well-defined") {
      throw Error(Errc::kParse, "--definedness takes generic, exact, overdefined or well-defined");
    }
    sweep.definedness = o.definedness;
  }
  sweep.connected = yes_no(o.connected, "--connected");
  sweep.crossing = yes_no(o.crossing, "--crossing");
  sweep.configs = o.configs;
  sweep.seed = o.seed;
  validate_sweep(sweep);
  return sweep;
}

void require_sweep_budget(const SweepSpec& sweep, const Limits& limits) {
  std::uint64_t total = 0;
  for (int n = sweep.n.lo; n <= sweep.n.hi; ++n) {
    for (int k = sweep.k.lo; k <= sweep.k.hi; ++k) {
      const std::uint64_t c = diagram_count(n, k);
      total = c > UINT64_MAX - total ? UINT64_MAX : total + c;
    }
  }
  limits.require(total, "enumeration");
}

bool passes_filters(const SweepSpec& sweep, const WilsonDiagram& w, const DefinednessClass& d) {
  if (sweep.definedness) {
    const std::string& f = *sweep.definedness;
    if (f == "well-defined" && !d.well_defined()) return false;
    if (f == "generic" && d.tag != Definedness::kWellDefinedGeneric) return false;
    if (f == "exact" && d.tag != Definedness::kExact) return false;
    if (f == "overdefined" && d.tag != Definedness::kOverdefined) return false;
  }
  if (sweep.crossing && crossing_pairs(w).empty() == *sweep.crossing) return false;
  if (sweep.connected && wilson_is_connected(w) != *sweep.connected) return false;
  return true;
}

json classify_report(const WilsonDiagram& w, const Limits& limits) {
  const AdmissibilityVerdict v = is_admissible(w, limits);
  std::optional<Matroid> m;
  if (v.well_defined) m = build_matroid(w, limits).matroid;
  return report_to_json(w, v, m);
}

std::string yes(const json& b) { return b.is_null() ? "-" : (b.get<bool>() ? "yes" : "no"); }

std::string compact(const json& j) { return j.dump(); }

void print_report_text(const json& r, std::ostream& out) {
  out << r["diagram"].get<std::string>() << '\n';
  out << "  definedness " << r["definedness"].get<std::string>() << "  witness "
      << compact(r["witness"]) << '\n';
  out << "  connected " << yes(r["connected"]) << "  positroid " << yes(r["positroid"])
      << "  admissible " << yes(r["admissible"]) << "  route " << r["route"].get<std::string>()
      << '\n';
  if (!r["matroid"].is_null()) {
    out << "  matroid rank " << r["matroid"]["rank"] << ", " << r["matroid"]["bases"]
        << " bases\n";
  }
  if (!r["crossings"].empty()) out << "  crossings " << compact(r["crossings"]) << '\n';
  for (const json& c : r["components"]) {
    out << "  component " << compact(c["props"]) << " on " << compact(c["vertices"]) << '\n';
  }
  for (const json& f : r["flacets"]) {
    out << "  flacet " << compact(f["props"]) << " -> " << compact(f["flat"])
        << (f["cyclic_interval"].get<bool>() ? "" : "  (not a cyclic interval)") << '\n';
  }
  if (!r["untangled"].is_null()) out << "  untangled " << r["untangled"].get<std::string>() << '\n';
}

void emit(const Options& o, const json& j, std::ostream& out,
          const std::function<void(std::ostream&)>& text) {
  if (o.json_out) {
    out << j.dump(2) << '\n';
  } else {
    text(out);
  }
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Limits limits = limits_of(o);
  json env = envelope("classify", o);
  json reports = json::array();
  std::map<std::string, int> by_definedness;
  int admissible = 0;
  for (const WilsonDiagram& w : read_diagrams(o)) {
    json r = classify_report(w, limits);
    ++by_definedness[r["definedness"].get<std::string>()];
    admissible += r["admissible"].get<bool>();
    reports.push_back(std::move(r));
  }
  env["reports"] = reports;
  env["summary"] = {{"diagrams", reports.size()},
                    {"admissible", admissible},
                    {"by_definedness", by_definedness}};
  emit(o, env, out, [&](std::ostream& s) {
    for (const json& r : reports) print_report_text(r, s);
  });
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const Limits limits = limits_of(o);
  const SweepSpec sweep = sweep_of(o);
  require_sweep_budget(sweep, limits);
  json reports = json::array();
  std::map<std::string, int> table;
  int count = 0;
  for (int n = sweep.n.lo; n <= sweep.n.hi; ++n) {
    for (int k = sweep.k.lo; k <= sweep.k.hi; ++k) {
      for_each_diagram(n, k, [&](const WilsonDiagram& w) {
        const DefinednessClass d = classify_definedness(w, limits);
        if (!passes_filters(sweep, w, d)) return true;
        json r = classify_report(w, limits);
        const std::string key = r["definedness"].get<std::string>() + "/" +
                                (r["crossings"].empty() ? "noncrossing" : "crossing") + "/" +
                                (r["positroid"].is_null()
                                     ? "n/a"
                                     : (r["positroid"].get<bool>() ? "positroid" : "not-positroid"));
        ++table[key];
        ++count;
        if (!o.summary_only) reports.push_back(std::move(r));
        return true;
      });
    }
  }
  json env = envelope("enumerate", o);
  env["sweep"] = {{"n", {sweep.n.lo, sweep.n.hi}}, {"k", {sweep.k.lo, sweep.k.hi}}};
  env["reports"] = reports;
  env["summary"] = {{"diagrams", count}, {"table", table}};
  emit(o, env, out, [&](std::ostream& s) {
    for (const json& r : reports) print_report_text(r, s);
    s << "diagrams " << count << '\n';
    for (const auto& [key, c] : table) s << "  " << key << ' ' << c << '\n';
  });
  return kExitOk;
}

struct Verifier {
  const SweepSpec& sweep;
  const Limits& limits;
  bool inject_fault = false;
  std::map<std::string, int> checks;
  json failures = json::array();

  void record(const std::string& check, bool ok, const WilsonDiagram& w,
              std::optional<std::uint64_t> seed, const std::string& detail = "") {
    ++checks[check];
    if (ok) return;
    json f = {{"check", check}, {"diagram", w.to_string()}, {"detail", detail}};
    f["config_seed"] = seed ? json(*seed) : json(nullptr);
    failures.push_back(std::move(f));
  }

  std::vector<TwistorConfig> configs_for(int n, int k) const {
    std::vector<TwistorConfig> out;
    for (int i = 0; i < sweep.configs; ++i) {
      out.push_back(seeded_config(n, k, config_seed(sweep.seed, n, k, i)));
    }
    return out;
  }

  void overdefined(const WilsonDiagram& w, const std::vector<TwistorConfig>& zs) {
    for (int i = 0; i < sweep.configs; ++i) {
      const RankReport rr = check_rank_theorems(w, zs[i]);
      record("rank-theorem", rr.pass, w, config_seed(sweep.seed, w.n(), w.k(), i),
             "rank " + std::to_string(rr.rank) + " for k = " + std::to_string(w.k()));
    }
  }

  Matroid well_defined(const WilsonDiagram& w, const std::vector<TwistorConfig>& zs) {
    Matroid m = build_matroid(w, limits).matroid;
    if (inject_fault && m.bases().size() > 1) {
      // Perturbed basis set for the fault-injection test.
      std::vector<VertexSet> bases = m.bases();
      bases.erase(bases.begin());
      m = Matroid::from_valid_bases(w.n(), std::move(bases));
      inject_fault = false;
    }
    for (int i = 0; i < sweep.configs; ++i) {
      const std::uint64_t seed = config_seed(sweep.seed, w.n(), w.k(), i);
      const RankReport rr = check_rank_theorems(w, zs[i]);
      record("rank-theorem", rr.pass, w, seed, "rank " + std::to_string(rr.rank));
      if (!rr.pass) continue;
      const Matroid realized = matroid_of_matrix(build_realization(w, zs[i]).m);
      record("matroid-realization", realized == m, w, seed,
             std::to_string(realized.bases().size()) + " realized bases vs " +
                 std::to_string(m.bases().size()));
    }
    const bool by_flacets = is_positroid(m);
    const bool by_necklace = necklace_positroid_oracle(m);
    const bool by_diagram = wilson_is_positroid(w, limits);
    record("positroid-oracles", by_flacets == by_necklace && by_necklace == by_diagram, w,
           std::nullopt,
           std::string("flacet ") + (by_flacets ? "1" : "0") + ", necklace " +
               (by_necklace ? "1" : "0") + ", diagram " + (by_diagram ? "1" : "0"));
    if (crossing_pairs(w).empty()) {
      record("noncrossing-positroid", by_diagram, w, std::nullopt);
    }
    if (wilson_is_connected(w, limits)) {
      std::vector<VertexSet> generic;
      for (const Flacet& f : flacets(m)) {
        if (!f.trivial) generic.push_back(f.set);
      }
      std::vector<VertexSet> from_props;
      for (PropSet p : propagator_flacets(w, limits)) {
        const VertexSet f = propagator_flat(w, p).flat;
        if (f.size() > 1 && (w.vertices() - f).size() > 1) from_props.push_back(f);
      }
      std::sort(from_props.begin(), from_props.end());
      from_props.erase(std::unique(from_props.begin(), from_props.end()), from_props.end());
      record("flacets", generic == from_props, w, std::nullopt);
    }
    return m;
  }

  struct ExactEntry {
    WilsonDiagram w;
    Matroid m;
    std::vector<Matrix> realized;
  };

  void equivalence(const std::vector<ExactEntry>& exact) {
    std::map<std::uint32_t, std::vector<const ExactEntry*>> buckets;
    for (const ExactEntry& e : exact) {
      VertexSet all;
      for (int r = 0; r < e.w.k(); ++r) all = all | e.w.support(r);
      buckets[all.bits()].push_back(&e);
    }
    for (const auto& [key, group] : buckets) {
      for (std::size_t i = 0; i < group.size(); ++i) {
        for (std::size_t j = i + 1; j < group.size(); ++j) {
          const ExactEntry& a = *group[i];
          const ExactEntry& b = *group[j];
          if (!are_exact_equivalent(a.w, b.w, limits)) continue;
          record("equivalence-matroid", a.m == b.m, a.w, std::nullopt, "vs " + b.w.to_string());
          for (int c = 0; c < sweep.configs; ++c) {
            record("equivalence-rowspace", rowspace_equal(a.realized[c], b.realized[c]), a.w,
                   config_seed(sweep.seed, a.w.n(), a.w.k(), c), "vs " + b.w.to_string());
          }
        }
      }
    }
  }
};

int cmd_verify(const Options& o, std::ostream& out) {
  const Limits limits = limits_of(o);
  const SweepSpec sweep = sweep_of(o);
  require_sweep_budget(sweep, limits);
  Verifier v{sweep, limits, o.inject_fault, {}, json::array()};
  int diagrams = 0;
  for (int n = sweep.n.lo; n <= sweep.n.hi; ++n) {
    for (int k = sweep.k.lo; k <= sweep.k.hi; ++k) {
      // Built on first use: no generic configuration exists when n < k.
      std::vector<TwistorConfig> zs;
      std::vector<Verifier::ExactEntry> exact;
      for_each_diagram(n, k, [&](const WilsonDiagram& w) {
        const DefinednessClass d = classify_definedness(w, limits);
        if (!passes_filters(sweep, w, d)) return true;
        ++diagrams;
        if (zs.empty()) zs = v.configs_for(n, k);
        if (!d.well_defined()) {
          v.overdefined(w, zs);
          return true;
        }
        Matroid m = v.well_defined(w, zs);
        if (d.tag == Definedness::kExact) {
          std::vector<Matrix> realized;
          for (const TwistorConfig& z : zs) realized.push_back(build_realization(w, z).m);
          exact.push_back({w, std::move(m), std::move(realized)});
        }
        return true;
      });
      v.equivalence(exact);
    }
  }
  int total = 0;
  for (const auto& [name, c] : v.checks) total += c;
  json env = envelope("verify", o);
  env["sweep"] = {{"n", {sweep.n.lo, sweep.n.hi}},
                  {"k", {sweep.k.lo, sweep.k.hi}},
                  {"configs", sweep.configs}};
  env["summary"] = {{"diagrams", diagrams},
                    {"checks", total},
                    {"by_check", v.checks},
                    {"failures", v.failures.size()}};
  env["failures"] = v.failures;
  emit(o, env, out, [&](std::ostream& s) {
    s << "diagrams " << diagrams << ", checks " << total << ", failures " << v.failures.size()
      << '\n';
    for (const auto& [name, c] : v.checks) s << "  " << name << ' ' << c << '\n';
    for (const json& f : v.failures) {
      s << "FAIL " << f["check"].get<std::string>() << ' ' << f["diagram"].get<std::string>();
      if (!f["config_seed"].is_null()) s << " config-seed " << f["config_seed"];
      if (!f["detail"].get<std::string>().empty()) s << " (" << f["detail"].get<std::string>() << ')';
      s << '\n';
    }
  });
  return v.failures.empty() ? kExitOk : kExitCheckFailed;
}

int cmd_matroid(const Options& o, std::ostream& out) {
  const WilsonDiagram w = single_diagram(o);
  const WilsonMatroid wm = build_matroid(w, limits_of(o));
  json j = matroid_to_json(wm.matroid);
  j["diagram"] = w.to_string();
  j["schema"] = kReportSchema;
  emit(o, j, out, [&](std::ostream& s) {
    s << w.to_string() << "\nrank " << wm.matroid.rank() << ", " << wm.matroid.bases().size()
      << " bases\n";
    for (const json& b : j["bases"]) s << "  " << compact(b) << '\n';
  });
  return kExitOk;
}

int cmd_flacets(const Options& o, std::ostream& out) {
  const Limits limits = limits_of(o);
  const WilsonDiagram w = single_diagram(o);
  const WilsonMatroid wm = build_matroid(w, limits);
  const AdmissibilityVerdict v = is_admissible(w, limits);
  json props = json::array();
  for (const FlacetRecord& f : v.flacets) {
    props.push_back({{"props", props_to_json(w, f.props)},
                     {"flat", to_json(f.flat)},
                     {"cyclic_interval", f.cyclic_interval}});
  }
  json generic = json::array();
  if (v.connected) {
    for (const Flacet& f : flacets(wm.matroid)) {
      if (!f.trivial) generic.push_back(to_json(f.set));
    }
  }
  json j = {{"schema", kReportSchema},
            {"diagram", w.to_string()},
            {"connected", v.connected},
            {"positroid", v.positroid},
            {"propagator_flacets", props},
            {"matroid_flacets", v.connected ? generic : json(nullptr)}};
  emit(o, j, out, [&](std::ostream& s) {
    s << w.to_string() << "\n  connected " << (v.connected ? "yes" : "no") << "  positroid "
      << (v.positroid ? "yes" : "no") << '\n';
    for (const json& f : props) {
      s << "  " << compact(f["props"]) << " -> " << compact(f["flat"])
        << (f["cyclic_interval"].get<bool>() ? "  cyclic interval" : "  not a cyclic interval")
        << '\n';
    }
  });
  return kExitOk;
}

TwistorConfig config_of(const Options& o, const WilsonDiagram& w) {
  if (o.config.empty()) return seeded_config(w.n(), w.k(), o.seed);
  std::ifstream file(o.config);
  if (!file) throw Error(Errc::kParse, "cannot open '" + o.config + "'");
  json j;
  try {
    j = json::parse(file);
  } catch (const json::parse_error& e) {
    throw Error(Errc::kParse, o.config + ": " + e.what());
  }
  TwistorConfig z = config_from_json(j);
  if (z.n != w.n() || z.k != w.k()) {
    throw Error(Errc::kSizeMismatch, "configuration does not match the diagram's n and k");
  }
  return z;
}

json minor_to_json(const MinorCheck& c) {
  return {{"family", c.family}, {"index", c.index}, {"value", to_string(c.value)}};
}

void print_matrix(const char* name, const Matrix& m, std::ostream& s) {
  s << name << '\n';
  for (int r = 0; r < m.rows(); ++r) {
    s << ' ';
    for (int c = 0; c < m.cols(); ++c) s << ' ' << m(r, c).get_str();
    s << '\n';
  }
}

int cmd_realize(const Options& o, std::ostream& out) {
  const WilsonDiagram w = single_diagram(o);
  const TwistorConfig z = config_of(o, w);
  const ConfigCertificate cert = validate_config(z);
  const RealizedMatrix rm = build_realization(w, z);
  json j = {{"schema", kReportSchema}, {"config", config_to_json(z)}};
  j["certificate"] = {{"valid", cert.valid()},
                      {"minors", cert.minors.size()},
                      {"violation", cert.violation ? minor_to_json(*cert.violation) : json(nullptr)}};
  j["realization"] = realization_to_json(w, rm);
  emit(o, j, out, [&](std::ostream& s) {
    s << w.to_string() << "\nconfig " << (cert.valid() ? "valid" : "INVALID") << ", "
      << cert.minors.size() << " minors checked\n";
    print_matrix("C (star column first)", rm.c, s);
    print_matrix("M", rm.m, s);
    s << "rank " << rank_of(rm.m) << '\n';
  });
  return kExitOk;
}

int cmd_integrand(const Options& o, std::ostream& out) {
  const WilsonDiagram w = single_diagram(o);
  TwistorConfig z = config_of(o, w);
  if (o.zero_z) {
    for (int v = 0; v < z.n; ++v) {
      for (int c = 4; c < z.width(); ++c) z.rows(v, c) = 0;
    }
  }
  const IntegrandValue value = integrand_value(w, z);
  json terms = json::array();
  for (const IntegrandTerm& t : value.terms) {
    json minors = json::array();
    for (const Rational& q : t.minors) minors.push_back(to_string(q));
    terms.push_back({{"propagator", to_json(t.p)},
                     {"minors", minors},
                     {"numerator", to_string(t.numerator)},
                     {"denominator", to_string(t.denominator)}});
  }
  json j = {{"schema", kReportSchema},
            {"diagram", w.to_string()},
            {"config", config_to_json(z)},
            {"terms", terms},
            {"value", to_string(value.value)}};
  emit(o, j, out, [&](std::ostream& s) {
    s << w.to_string() << '\n';
    for (const json& t : terms) {
      s << "  " << compact(t["propagator"]) << " minors";
      for (const json& m : t["minors"]) s << ' ' << m.get<std::string>();
      s << "\n    numerator " << t["numerator"].get<std::string>() << "  denominator "
        << t["denominator"].get<std::string>() << '\n';
    }
    s << "value " << j["value"].get<std::string>() << '\n';
  });
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  CLI::App app{"Wilson loop diagrams: matroids, positroids and realizations", "wlp"};
  app.set_version_flag("--version", WLP_VERSION);
  app.require_subcommand(1);
  Options o;

  const auto input_options = [&](CLI::App* sub) {
    sub->add_option("--diagram", o.diagrams, "Diagram such as \"n=5; props=(1,3),(2,4)\"");
    sub->add_option("--input", o.input, "File with one diagram per line");
  };
  const auto common_options = [&](CLI::App* sub) {
    auto* json_flag = sub->add_flag("--json", o.json_out, "JSON output");
    sub->add_flag("--text", o.text_out, "Text output (default)")->excludes(json_flag);
    sub->add_option("--budget", o.budget, "Largest subset scan allowed; overrides WLP_BUDGET");
    sub->add_option("--seed", o.seed, "Seed for generated configurations");
  };
  const auto sweep_options = [&](CLI::App* sub) {
    sub->add_option("--n", o.n_range, "Polygon sizes, e.g. 6 or 4:8");
    sub->add_option("--k", o.k_range, "Propagator counts, e.g. 2 or 0:3");
    sub->add_option("--definedness", o.definedness, "generic, exact, overdefined or well-defined");
    sub->add_option("--connected", o.connected, "yes or no");
    sub->add_option("--crossing", o.crossing, "yes or no");
  };

  CLI::App* classify = app.add_subcommand("classify", "Classify diagrams");
  input_options(classify);
  common_options(classify);

  CLI::App* enumerate = app.add_subcommand("enumerate", "Enumerate and classify a sweep");
  sweep_options(enumerate);
  common_options(enumerate);
  enumerate->add_flag("--summary-only", o.summary_only, "Omit per-diagram reports");

  CLI::App* verify = app.add_subcommand("verify", "Cross-check a sweep against realizations");
  sweep_options(verify);
  common_options(verify);
  verify->add_option("--configs", o.configs, "Configurations per diagram");
  verify->add_flag("--inject-fault", o.inject_fault)->group("");

  CLI::App* matroid = app.add_subcommand("matroid", "Bases of M(W)");
  input_options(matroid);
  common_options(matroid);

  CLI::App* flacets = app.add_subcommand("flacets", "Propagator flacets of a diagram");
  input_options(flacets);
  common_options(flacets);

  CLI::App* realize = app.add_subcommand("realize", "Realization matrices at one configuration");
  input_options(realize);
  common_options(realize);
  realize->add_option("--config", o.config, "Configuration JSON file");

  CLI::App* integrand = app.add_subcommand("integrand", "Evaluate the integrand");
  input_options(integrand);
  common_options(integrand);
  integrand->add_option("--config", o.config, "Configuration JSON file");
  integrand->add_flag("--zero-z", o.zero_z, "Zero the z columns of the configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << WLP_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*matroid) return cmd_matroid(o, out);
    if (*flacets) return cmd_flacets(o, out);
    if (*realize) return cmd_realize(o, out);
    if (*integrand) return cmd_integrand(o, out);
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"wlp"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace wlp::cli
