#include "ie/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

namespace ie {

CheckContext RunConfig::context() const {
  CheckContext ctx;
  ctx.samples = samples;
  ctx.seed = seed;
  ctx.degree = degree;
  ctx.sigmas = sigmas;
  ctx.det_tol = det_tol;
  ctx.eq_tol = eq_tol;
  ctx.random_directions = random_directions;
  ctx.sample_points = sample_points;
  return ctx;
}

void validate_config(RunConfig& cfg) {
  if (!cfg.seed_set)
    throw ConfigError("a seed is required (--seed or the VERIFY_SEED variable)");
  if (cfg.samples < 10000)
    throw ConfigError("--samples must be at least 10000 for Monte Carlo checks");
  if (cfg.degree < 4) throw ConfigError("--degree must be at least 4");
  if (cfg.surfaces.empty())
    throw ConfigError("at least one --surface is required");
  std::vector<std::string> suites;
  for (const auto& s : cfg.suites) {
    if (s == "all") {
      suites = all_check_ids();
      break;
    }
    if (std::find(all_check_ids().begin(), all_check_ids().end(), s) ==
        all_check_ids().end())
      throw ConfigError("unknown suite '" + s + "'");
    suites.push_back(s);
  }
  std::vector<std::string> unique;
  for (const auto& s : suites)
    if (std::find(unique.begin(), unique.end(), s) == unique.end())
      unique.push_back(s);
  cfg.suites = unique;
  for (const auto& s : cfg.surfaces) parse_surface_spec(s);  // grammar check
}

RunOutcome run_suites(const RunConfig& cfg) {
  RunOutcome out;
  const CheckContext ctx = cfg.context();
  for (const auto& surface_text : cfg.surfaces) {
    const HypersurfaceSpec spec = parse_surface_spec(surface_text);
    for (const auto& check_id : cfg.suites) {
      if (!check_applicable(check_id, spec)) {
        out.skipped.push_back(
            {check_id, surface_text, "check does not apply to this surface"});
        continue;
      }
      try {
        out.results.push_back(run_check(check_id, spec, ctx));
      } catch (const std::exception& e) {
        // flush the failure as an inconclusive result and keep going
        CheckResult res;
        res.check_id = check_id;
        res.surface = surface_text;
        res.verdict = Verdict::Inconclusive;
        res.outcome = "error";
        res.notes.push_back(e.what());
        out.results.push_back(std::move(res));
      }
    }
  }
  for (const auto& r : out.results)
    if (r.verdict != Verdict::Pass) out.exit_code = 1;
  return out;
}

namespace {

nlohmann::ordered_json measurement_json(const Measurement& m) {
  nlohmann::ordered_json j;
  j["name"] = m.name;
  if (!m.direction.empty()) j["direction"] = m.direction;
  j["value"] = m.value;
  if (m.std_error > 0) j["stderr"] = m.std_error;
  if (m.target) j["target"] = *m.target;
  if (!m.provenance.empty()) j["provenance"] = m.provenance;
  if (m.verdict) j["verdict"] = to_string(*m.verdict);
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

nlohmann::ordered_json report_json(const RunConfig& cfg, const RunOutcome& out) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  nlohmann::ordered_json jc;
  jc["suites"] = cfg.suites;
  jc["surfaces"] = cfg.surfaces;
  jc["samples"] = cfg.samples;
  jc["seed"] = cfg.seed;
  jc["degree"] = cfg.degree;
  jc["sigmas"] = cfg.sigmas;
  jc["det_tol"] = cfg.det_tol;
  jc["eq_tol"] = cfg.eq_tol;
  jc["random_directions"] = cfg.random_directions;
  jc["sample_points"] = cfg.sample_points;
  j["config"] = jc;

  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& r : out.results) {
    nlohmann::ordered_json jr;
    jr["check_id"] = r.check_id;
    jr["surface"] = r.surface;
    jr["verdict"] = to_string(r.verdict);
    jr["outcome"] = r.outcome;
    if (r.expected_outcome) jr["expected_outcome"] = *r.expected_outcome;
    jr["tolerance_rule"] = r.tolerance_rule;
    if (!r.directions.empty()) jr["directions"] = r.directions;
    nlohmann::ordered_json jm = nlohmann::ordered_json::array();
    for (const auto& m : r.measured) jm.push_back(measurement_json(m));
    jr["measured"] = jm;
    if (!r.notes.empty()) jr["notes"] = r.notes;
    results.push_back(jr);
  }
  j["results"] = results;

  nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
  for (const auto& s : out.skipped) {
    nlohmann::ordered_json js;
    js["check_id"] = s.check_id;
    js["surface"] = s.surface;
    js["reason"] = s.reason;
    skipped.push_back(js);
  }
  j["skipped"] = skipped;

  int pass = 0, fail = 0, inconclusive = 0;
  for (const auto& r : out.results) {
    if (r.verdict == Verdict::Pass) ++pass;
    else if (r.verdict == Verdict::Fail) ++fail;
    else ++inconclusive;
  }
  nlohmann::ordered_json summary;
  summary["pass"] = pass;
  summary["fail"] = fail;
  summary["inconclusive"] = inconclusive;
  summary["total"] = pass + fail + inconclusive;
  summary["exit_code"] = out.exit_code;
  j["summary"] = summary;
  return j;
}

std::string report_csv(const RunOutcome& out) {
  std::string csv =
      "check_id,surface,direction,name,value,stderr,target,provenance,verdict\n";
  for (const auto& r : out.results) {
    for (const auto& m : r.measured) {
      csv += csv_escape(r.check_id) + ',' + csv_escape(r.surface) + ',' +
             csv_escape(m.direction) + ',' + csv_escape(m.name) + ',' +
             format_double(m.value) + ',' + format_double(m.std_error) + ',' +
             (m.target ? format_double(*m.target) : "") + ',' +
             csv_escape(m.provenance) + ',' +
             (m.verdict ? to_string(*m.verdict) : to_string(r.verdict)) + '\n';
    }
  }
  return csv;
}

std::string directions_csv(const RunOutcome& out) {
  std::string csv = "check_id,surface,direction,phi2_over_vol,stderr\n";
  for (const auto& r : out.results) {
    for (const auto& m : r.measured) {
      if (m.name != "phi2_over_vol" || m.direction.empty()) continue;
      csv += csv_escape(r.check_id) + ',' + csv_escape(r.surface) + ',' +
             csv_escape(m.direction) + ',' + format_double(m.value) + ',' +
             format_double(m.std_error) + '\n';
    }
  }
  return csv;
}

std::string sweeps_csv(const RunConfig& cfg) {
  std::string csv = "surface,theta,h,sin2_weighted_h\n";
  std::set<std::string> done;
  for (const auto& surface_text : cfg.surfaces) {
    const HypersurfaceSpec spec = parse_surface_spec(surface_text);
    IsoparametricProfile pr;
    if (spec.kind == HypersurfaceSpec::Kind::Profile)
      pr = profile_lambdas(spec.g, spec.m_plus, spec.m_minus);
    else if (spec.kind == HypersurfaceSpec::Kind::CartanCubic)
      pr = profile_lambdas(3, 1, 1);
    else if (spec.kind == HypersurfaceSpec::Kind::CliffordTorus &&
             std::abs(spec.r1 - CliffordTorusSurface::minimal_radius(
                                    spec.k, spec.n)) < 1e-12)
      pr = profile_lambdas(2, spec.k, spec.n - spec.k);
    else
      continue;
    if (!done.insert(surface_text).second) continue;
    const int grid = 200;
    for (int i = 0; i <= grid; ++i) {
      const double theta = kPi / pr.g * i / grid;
      const double h = profile_h(pr, theta);
      const double s = std::sin(pr.theta0 - theta);
      csv += csv_escape(surface_text) + ',' + format_double(theta) + ',' +
             format_double(h) + ',' + format_double(s * s * std::abs(h)) + '\n';
    }
  }
  return csv;
}

namespace {

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << contents;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace

int run_and_emit(RunConfig cfg) {
  try {
    validate_config(cfg);
  } catch (const SpecParseError& e) {
    fprintf(stderr, "configuration error: %s (at position %zu)\n", e.what(),
            e.position);
    return 2;
  } catch (const ConfigError& e) {
    fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  }

  const RunOutcome out = run_suites(cfg);

  for (const auto& r : out.results) {
    std::string line = "[" + to_string(r.verdict) + "] " + r.check_id + " on " +
                       r.surface + ": " + r.outcome;
    if (r.expected_outcome) line += " (expected " + *r.expected_outcome + ")";
    printf("%s\n", line.c_str());
  }
  for (const auto& s : out.skipped)
    printf("[skip] %s on %s: %s\n", s.check_id.c_str(), s.surface.c_str(),
           s.reason.c_str());

  try {
    if (!cfg.out_json.empty())
      write_file(cfg.out_json, report_json(cfg, out).dump(2) + "\n");
    if (!cfg.out_csv.empty()) write_file(cfg.out_csv, report_csv(out));
    if (!cfg.plots_dir.empty()) {
      std::filesystem::create_directories(cfg.plots_dir);
      const auto base = std::filesystem::path(cfg.plots_dir);
      write_file((base / "directions.csv").string(), directions_csv(out));
      write_file((base / "sweeps.csv").string(), sweeps_csv(cfg));
    }
  } catch (const std::exception& e) {
    fprintf(stderr, "report output failed: %s\n", e.what());
    return 2;
  }
  return out.exit_code;
}

}  // namespace ie
