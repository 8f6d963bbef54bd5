#include "voa/workbench.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "experiments.hpp"

namespace voa {

namespace {

using Runner = std::function<void(const ExperimentConfig&, Report&)>;

struct Entry {
  ExperimentInfo info;
  Runner runner;
  std::function<void(ExperimentConfig&)> defaults;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"o-identity-suite", "sampled check of o_{n-p}(u) o_{p-m}(v) = o_{n-m}(u *_{m,p}^n v) on M(m)",
        "composition identity for the degree-shifting zero modes"},
       experiments::o_identity_suite,
       [](ExperimentConfig& c) {
         c.central_charges = {Scalar(1), Scalar(-2)};
         c.highest_weights = {Scalar(1), make_scalar(1, 3)};
         c.gram = {{2}};
         c.levels = {0, 1, 2};
         c.max_weight = 4;
         c.max_level = 4;
         c.samples = 70;
         c.seed = 7;
       }},
      {{"pairing-invariance", "invariance of the contravariant pairing under every generator mode",
        "invariance proposition for the pairing between M(U*) and M(U)"},
       experiments::pairing_invariance,
       [](ExperimentConfig& c) {
         c.central_charges = {Scalar(1)};
         c.highest_weights = {Scalar(1), make_scalar(2, 3)};
         c.gram = {{2}};
         c.max_weight = 2;
         c.max_level = 4;
       }},
      {{"virasoro-c1-counterexample",
        "Gram matrices, radical and singular vectors of the c = 1 Verma module, with a generic control",
        "Virasoro c = 1 counterexample and the radical as maximal proper submodule"},
       experiments::virasoro_counterexample,
       [](ExperimentConfig& c) {
         c.central_charges = {Scalar(1)};
         c.highest_weights = {Scalar(1), make_scalar(2, 3)};
         c.max_level = 4;
         c.D = 6;
       }},
      {{"zhu-rank-and-dimension", "action rank of A_n(V) on module levels against the dimension formula",
        "dimension formula for A_n(V) of a rational algebra"},
       experiments::zhu_rank_and_dimension,
       [](ExperimentConfig& c) {
         c.gram = {{2}};
         c.levels = {0, 1};
         c.D = 6;
       }},
      {{"lattice-plus-relations", "matrix units and product relations of A(V_L^+) acting on untwisted top levels",
        "matrix-unit lemmas for V_L^+ and the E^alpha relations"},
       experiments::lattice_plus_relations,
       [](ExperimentConfig& c) {
         c.gram = {{2, 0}, {0, 2}};
         c.D = 4;
         c.G = 10;
       }},
      {{"phi-antiinvolution", "phi(u *_n v) and phi(v) *_n phi(u) act equally, and phi preserves O_n(V)",
        "phi = e^{L(1)} (-1)^{L(0)} is an anti-involution of A_n(V)"},
       experiments::phi_antiinvolution,
       [](ExperimentConfig& c) {
         c.central_charges = {Scalar(1)};
         c.highest_weights = {Scalar(1), make_scalar(2, 3)};
         c.gram = {{2}};
         c.levels = {0, 1};
         c.samples = 50;
         c.max_weight = 4;
         c.D = 4;
         c.G = 6;
         c.seed = 7;
       }},
  };
  return entries;
}

const Entry& lookup(const std::string& name) {
  for (const auto& e : registry())
    if (e.info.name == name) return e;
  std::string names;
  for (const auto& e : registry()) names += (names.empty() ? "" : ", ") + e.info.name;
  throw Error(ErrorKind::UnknownExperiment, "'" + name + "' is not registered; known experiments: " + names);
}

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw Error(ErrorKind::InvalidConfig, "field '" + field + "': " + why);
}

IntMat parse_int_matrix(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) bad_field(field, "expected a nonempty list of integer rows");
  IntMat out;
  for (const auto& row : j) {
    if (!row.is_array()) bad_field(field, "expected a list of integer rows");
    IntVec r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) bad_field(field, "entries must be integers");
      r.push_back(x.get<int>());
    }
    out.push_back(std::move(r));
  }
  for (const auto& r : out)
    if (r.size() != out.size()) bad_field(field, "matrix must be square");
  return out;
}

std::vector<Scalar> parse_scalars(const Json& j, const std::string& field) {
  if (!j.is_array()) bad_field(field, "expected a list of rationals");
  std::vector<Scalar> out;
  for (const auto& x : j) {
    if (x.is_number_integer()) {
      out.push_back(make_scalar(x.get<std::int64_t>()));
    } else if (x.is_string()) {
      try {
        out.push_back(parse_scalar(x.get<std::string>()));
      } catch (const Error&) {
        bad_field(field, "'" + x.get<std::string>() + "' is not a rational number");
      }
    } else {
      bad_field(field, "entries must be integers or strings like \"2/3\"");
    }
  }
  return out;
}

int parse_positive(const Json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<std::int64_t>() <= 0) bad_field(field, "must be a positive integer");
  return j.get<int>();
}

Json scalars_json(const std::vector<Scalar>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void diff_into(const Json& a, const Json& b, const std::string& path, std::vector<std::string>& out) {
  const std::string here = path.empty() ? "<root>" : path;
  if (a.type() != b.type() && !(a.is_number() && b.is_number())) {
    out.push_back(here + ": " + a.dump() + " != " + b.dump());
    return;
  }
  if (a.is_object()) {
    std::set<std::string> keys;
    for (const auto& [k, v] : a.items()) keys.insert(k);
    for (const auto& [k, v] : b.items()) keys.insert(k);
    for (const auto& k : keys) {
      const std::string sub = path.empty() ? k : path + "." + k;
      if (!a.contains(k)) {
        out.push_back(sub + ": missing != " + b[k].dump());
      } else if (!b.contains(k)) {
        out.push_back(sub + ": " + a[k].dump() + " != missing");
      } else {
        diff_into(a[k], b[k], sub, out);
      }
    }
  } else if (a.is_array()) {
    if (a.size() != b.size()) {
      out.push_back(here + ": length " + std::to_string(a.size()) + " != " + std::to_string(b.size()));
      return;
    }
    for (std::size_t i = 0; i < a.size(); ++i) diff_into(a[i], b[i], path + "[" + std::to_string(i) + "]", out);
  } else if (a != b) {
    out.push_back(here + ": " + a.dump() + " != " + b.dump());
  }
}

}  // namespace

LatticeData ExperimentConfig::lattice() const {
  LatticeData data = LatticeData::with_default_cocycle(gram);
  if (cocycle) data.cocycle = *cocycle;
  return data;
}

Json ExperimentConfig::to_json() const {
  Json j;
  j["experiment"] = experiment;
  j["gram"] = gram;
  if (cocycle) j["cocycle"] = *cocycle;
  j["central_charges"] = scalars_json(central_charges);
  j["highest_weights"] = scalars_json(highest_weights);
  j["levels"] = levels;
  j["D"] = D;
  j["G"] = G;
  j["max_level"] = max_level;
  j["max_weight"] = max_weight;
  j["samples"] = samples;
  j["seed"] = seed;
  return j;
}

ExperimentConfig default_config(const std::string& experiment) {
  const Entry& e = lookup(experiment);
  ExperimentConfig c;
  c.experiment = experiment;
  e.defaults(c);
  return c;
}

ExperimentConfig ExperimentConfig::from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidConfig, "config must be a JSON object");
  if (!j.contains("experiment") || !j["experiment"].is_string()) bad_field("experiment", "missing experiment name");
  ExperimentConfig c = default_config(j["experiment"].get<std::string>());
  for (const auto& [key, value] : j.items()) {
    if (key == "experiment") continue;
    if (key == "gram") {
      c.gram = parse_int_matrix(value, key);
    } else if (key == "cocycle") {
      if (!value.is_null()) c.cocycle = parse_int_matrix(value, key);
    } else if (key == "central_charges") {
      c.central_charges = parse_scalars(value, key);
    } else if (key == "highest_weights") {
      c.highest_weights = parse_scalars(value, key);
    } else if (key == "levels") {
      if (!value.is_array()) bad_field(key, "expected a list of levels");
      c.levels.clear();
      for (const auto& x : value) {
        if (!x.is_number_integer() || x.get<int>() < 0) bad_field(key, "levels must be nonnegative integers");
        c.levels.push_back(x.get<int>());
      }
    } else if (key == "D") {
      c.D = parse_positive(value, key);
    } else if (key == "G") {
      c.G = parse_positive(value, key);
    } else if (key == "max_level") {
      c.max_level = parse_positive(value, key);
    } else if (key == "max_weight") {
      c.max_weight = parse_positive(value, key);
    } else if (key == "samples") {
      c.samples = static_cast<std::size_t>(parse_positive(value, key));
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) bad_field(key, "must be a nonnegative integer");
      c.seed = value.get<std::uint64_t>();
    } else if (key == "out") {
      if (!value.is_string()) bad_field(key, "must be a path string");
      c.out = value.get<std::string>();
    } else {
      bad_field(key, "unknown field");
    }
  }
  if (c.cocycle && c.cocycle->size() != c.gram.size()) bad_field("cocycle", "must have the size of the Gram matrix");
  return c;
}

bool Report::passed() const {
  if (verdicts.empty()) return false;
  for (const auto& v : verdicts)
    if (!v.passed) return false;
  return true;
}

void Report::verdict(std::string name, bool ok, std::string detail) {
  verdicts.push_back({std::move(name), ok, std::move(detail)});
}

Json Report::to_json(bool include_timing) const {
  Json j;
  j["experiment"] = experiment;
  j["config"] = config;
  j["results"] = results;
  Json vs = Json::array();
  for (const auto& v : verdicts) vs.push_back(Json{{"name", v.name}, {"passed", v.passed}, {"detail", v.detail}});
  j["verdicts"] = vs;
  j["passed"] = passed();
  if (include_timing) j["timing"] = Json{{"milliseconds", milliseconds}};
  return j;
}

std::string Report::serialize(bool include_timing) const { return to_json(include_timing).dump(2) + "\n"; }

std::string Report::to_text() const {
  std::ostringstream os;
  os << "experiment: " << experiment << "\n";
  for (const auto& v : verdicts) {
    os << (v.passed ? "PASS " : "FAIL ") << v.name;
    if (!v.detail.empty()) os << " (" << v.detail << ")";
    os << "\n";
  }
  os << "result: " << (passed() ? "PASS" : "FAIL") << " in " << milliseconds << " ms\n";
  return os.str();
}

Report Report::from_json(const Json& j) {
  auto need = [&j](const char* key, bool ok) {
    if (!ok) throw Error(ErrorKind::ParseError, std::string("report field '") + key + "' is missing or malformed");
  };
  need("experiment", j.is_object() && j.contains("experiment") && j["experiment"].is_string());
  need("config", j.contains("config") && j["config"].is_object());
  need("results", j.contains("results") && j["results"].is_object());
  need("verdicts", j.contains("verdicts") && j["verdicts"].is_array());
  need("passed", j.contains("passed") && j["passed"].is_boolean());
  Report r;
  r.experiment = j["experiment"].get<std::string>();
  r.config = j["config"];
  r.results = j["results"];
  for (const auto& v : j["verdicts"]) {
    need("verdicts", v.is_object() && v.contains("name") && v.contains("passed") && v["passed"].is_boolean());
    r.verdicts.push_back({v["name"].get<std::string>(), v["passed"].get<bool>(), v.value("detail", std::string())});
  }
  if (j.contains("timing") && j["timing"].contains("milliseconds"))
    r.milliseconds = j["timing"]["milliseconds"].get<std::int64_t>();
  return r;
}

const std::vector<ExperimentInfo>& list_experiments() {
  static const std::vector<ExperimentInfo> infos = [] {
    std::vector<ExperimentInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

Report run(const ExperimentConfig& config) {
  const Entry& e = lookup(config.experiment);
  Report report;
  report.experiment = config.experiment;
  report.config = config.to_json();
  const auto start = std::chrono::steady_clock::now();
  e.runner(config, report);
  report.milliseconds =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Report run_cached(const ExperimentConfig& config, const CacheOptions& cache) {
  std::optional<std::string> dir = cache.directory;
  if (!dir) {
    if (const char* env = std::getenv("WORKBENCH_CACHE_DIR"); env && *env) dir = env;
  }
  if (!cache.enabled || !dir) return run(config);

  const std::string canonical = config.to_json().dump();
  std::ostringstream name;
  name << config.experiment << "-" << std::hex << fnv1a(canonical) << ".json";
  const std::filesystem::path path = std::filesystem::path(*dir) / name.str();
  if (std::filesystem::exists(path)) {
    try {
      Report cached = Report::from_json(read_json_file(path.string()));
      if (cached.config.dump() == canonical) return cached;
    } catch (const Error&) {
      // A damaged cache entry is recomputed.
    }
  }
  Report report = run(config);
  std::filesystem::create_directories(*dir);
  std::ofstream(path) << report.serialize(true);
  return report;
}

ReportDiff compare_reports(const Json& a, const Json& b) {
  Json x = a, y = b;
  if (x.is_object()) x.erase("timing");
  if (y.is_object()) y.erase("timing");
  ReportDiff d;
  diff_into(x, y, "", d.differences);
  d.equal = d.differences.empty();
  return d;
}

ReportDiff compare_golden(const std::string& report_path, const std::string& golden_path) {
  const Json a = read_json_file(report_path);
  const Json b = read_json_file(golden_path);
  Report::from_json(a);
  Report::from_json(b);
  return compare_reports(a, b);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, "'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace voa
