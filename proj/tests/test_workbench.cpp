#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "voa/workbench.hpp"

using namespace voa;

namespace {

const std::string kGolden = GOLDEN_DIR;

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "workbench-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& x : j)
      if (has_float(x)) return true;
  return false;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidSpec;
}

}  // namespace

TEST_CASE("registry lists six experiments in a stable order") {
  const auto& list = list_experiments();
  REQUIRE(list.size() == 6);
  const std::vector<std::string> names{"o-identity-suite",       "pairing-invariance",     "virasoro-c1-counterexample",
                                       "zhu-rank-and-dimension", "lattice-plus-relations", "phi-antiinvolution"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    CHECK(list[i].name == names[i]);
    CHECK_FALSE(list[i].description.empty());
    CHECK_FALSE(list[i].anchor.empty());
  }
  CHECK(&list_experiments() == &list);
}

TEST_CASE("unknown experiment lists the registry") {
  try {
    default_config("no-such-thing");
    FAIL("expected UnknownExperiment");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownExperiment);
    const std::string msg = e.what();
    for (const auto& info : list_experiments()) CHECK(msg.find(info.name) != std::string::npos);
  }
}

TEST_CASE("config parsing and field-level errors") {
  auto cfg = ExperimentConfig::from_json(Json{{"experiment", "zhu-rank-and-dimension"}, {"D", 5}});
  CHECK(cfg.D == 5);
  CHECK(cfg.levels == std::vector<int>{0, 1});
  CHECK(cfg.gram == IntMat{{2}});

  cfg = ExperimentConfig::from_json(Json{{"experiment", "pairing-invariance"}, {"highest_weights", {"1", "2/3", 3}}});
  CHECK(cfg.highest_weights == std::vector<Scalar>{Scalar(1), make_scalar(2, 3), Scalar(3)});
  CHECK(ExperimentConfig::from_json(cfg.to_json()).to_json() == cfg.to_json());

  auto bad = [](Json j) { return kind_of([&] { ExperimentConfig::from_json(j); }); };
  CHECK(bad(Json{{"experiment", "zhu-rank-and-dimension"}, {"D", 0}}) == ErrorKind::InvalidConfig);
  CHECK(bad(Json{{"experiment", "zhu-rank-and-dimension"}, {"gram", {{2, 1}}}}) == ErrorKind::InvalidConfig);
  CHECK(bad(Json{{"experiment", "zhu-rank-and-dimension"}, {"colour", 1}}) == ErrorKind::InvalidConfig);
  CHECK(bad(Json{{"experiment", "pairing-invariance"}, {"highest_weights", {"x/0"}}}) == ErrorKind::InvalidConfig);
  CHECK(bad(Json{{"experiment", "nope"}}) == ErrorKind::UnknownExperiment);
  CHECK(bad(Json{{"D", 3}}) == ErrorKind::InvalidConfig);
  try {
    ExperimentConfig::from_json(Json{{"experiment", "zhu-rank-and-dimension"}, {"samples", -1}});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("samples") != std::string::npos);
  }
}

TEST_CASE("reports are deterministic and match the golden files") {
  for (const auto& info : list_experiments()) {
    INFO(info.name);
    const auto cfg = default_config(info.name);
    const Report a = run(cfg);
    const Report b = run(cfg);
    CHECK(a.passed());
    CHECK(a.serialize() == b.serialize());
    CHECK_FALSE(has_float(a.to_json(true)));
    const auto diff = compare_reports(a.to_json(true), read_json_file(kGolden + "/" + info.name + ".json"));
    INFO((diff.differences.empty() ? std::string() : diff.differences.front()));
    CHECK(diff.equal);
  }
}

TEST_CASE("virasoro counterexample reports the level-3 radical") {
  const Report r = run(default_config("virasoro-c1-counterexample"));
  CHECK(r.results["subject"]["levels"][3]["radical_dimension"] == 1);
  CHECK(r.results["subject"]["first_radical_level"] == 3);
}

TEST_CASE("golden comparison") {
  const std::string golden = kGolden + "/zhu-rank-and-dimension.json";
  CHECK(compare_golden(golden, golden).equal);

  Json j = read_json_file(golden);
  j["timing"] = Json{{"milliseconds", 12345}};
  const auto timed = scratch("timed.json");
  write(timed, j.dump(2));
  CHECK(compare_golden(timed.string(), golden).equal);

  j["results"]["levels"][0]["action_rank"] = 4;
  const auto changed = scratch("changed.json");
  write(changed, j.dump(2));
  const auto d = compare_golden(changed.string(), golden);
  CHECK_FALSE(d.equal);
  REQUIRE(d.differences.size() == 1);
  CHECK(d.differences[0] == "results.levels[0].action_rank: 4 != 5");

  const auto junk = scratch("junk.json");
  write(junk, "{not json");
  CHECK(kind_of([&] { compare_golden(junk.string(), golden); }) == ErrorKind::ParseError);
  write(junk, "{\"experiment\": 3}");
  CHECK(kind_of([&] { compare_golden(junk.string(), golden); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { compare_golden("/nonexistent/report.json", golden); }) == ErrorKind::ParseError);
}

TEST_CASE("report cache") {
  const auto dir = scratch("cache");
  std::filesystem::remove_all(dir);
  const auto cfg = default_config("zhu-rank-and-dimension");
  CacheOptions opts;
  opts.directory = dir.string();
  const Report first = run_cached(cfg, opts);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.is_regular_file();
  CHECK(files == 1);
  const Report second = run_cached(cfg, opts);
  CHECK(second.serialize() == first.serialize());
  CHECK(second.milliseconds == first.milliseconds);

  opts.enabled = false;
  CHECK(run_cached(cfg, opts).serialize() == first.serialize());
}

TEST_CASE("text rendering") {
  const Report r = run(default_config("zhu-rank-and-dimension"));
  const std::string text = r.to_text();
  CHECK(text.rfind("experiment: zhu-rank-and-dimension\n", 0) == 0);
  CHECK(text.find("PASS action rank equals the dimension formula at n = 1 (18 vs 18)") != std::string::npos);
  CHECK(Report::from_json(r.to_json(true)).serialize() == r.serialize());
}
