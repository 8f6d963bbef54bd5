// Acceptance suite: one PASS/FAIL line per criterion with pinned limits.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "voa/properties.hpp"
#include "voa/workbench.hpp"

using namespace voa;

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes.push_back("failed: " + what);
    }
  }
};

const Verdict* find_verdict(const Report& r, const std::string& prefix) {
  for (const auto& v : r.verdicts)
    if (v.name.rfind(prefix, 0) == 0) return &v;
  return nullptr;
}

void require_verdict(Outcome& o, const Report& r, const std::string& prefix) {
  const Verdict* v = find_verdict(r, prefix);
  o.require(v != nullptr && v->passed, "verdict '" + prefix + "'" + (v ? " (" + v->detail + ")" : " missing"));
}

Report run_default(const std::string& name) { return run(default_config(name)); }

// Criterion 1: exact composition identity on >= 200 sampled pairs.
Outcome composition_identity() {
  Outcome o;
  const Report r = run_default("o-identity-suite");
  const auto& cfg = r.config;
  o.require(cfg["levels"] == Json::array({0, 1, 2}), "indices (m, p, n) range over {0,1,2}^3");
  o.require(cfg["max_weight"] == 4 && cfg["max_level"] == 4, "weights <= 4 and modules to level 4");
  o.require(r.results["total_pairs"].get<std::size_t>() >= 200, "at least 200 sampled pairs");
  std::vector<std::string> algebras;
  for (const auto& inst : r.results["instances"]) {
    algebras.push_back(inst["algebra"].get<std::string>());
    o.require(inst["index_triples"].get<std::size_t>() == inst["pairs"].get<std::size_t>() * 27, "all 27 index triples");
    for (const auto& m : inst["modules"]) o.require(m["graded_dims"].size() == 5, "module built to level 4");
  }
  o.require(algebras == std::vector<std::string>{"V(1)", "V(-2)", "V_L gram [2]"}, "instances V(1), V(-2), rank-1 V_L");
  o.require(r.results["total_failures"] == 0 && r.passed(), "zero failures");
  o.notes.push_back(std::to_string(r.results["total_pairs"].get<std::size_t>()) + " pairs, " +
                    std::to_string(r.results["total_failures"].get<std::size_t>()) + " failures");
  return o;
}

// Criterion 2: pairing invariance for every generator mode, levels <= 4.
Outcome pairing_invariance() {
  Outcome o;
  const Report r = run_default("pairing-invariance");
  o.require(r.config["max_level"] == 4, "levels <= 4");
  std::vector<std::string> seen;
  std::size_t checks = 0;
  for (const auto& p : r.results["pairs"]) {
    seen.push_back(p["modules"].get<std::string>());
    checks += p["checked"].get<std::size_t>();
    o.require(p["passed"].get<bool>() && p["checked"].get<std::size_t>() > 0, "invariance on " + seen.back());
  }
  o.require(seen.size() == 4 && seen[0] == "M(1,1)" && seen[1] == "M(1,2/3)", "Verma(1,1), Verma(1,2/3) and both lattice cosets");
  o.notes.push_back(std::to_string(checks) + " exact checks over " + std::to_string(seen.size()) + " module pairs");
  return o;
}

// Criterion 3: c = 1 counterexample against a brute-force Shapovalov oracle.
Outcome counterexample() {
  Outcome o;
  const Report r = run_default("virasoro-c1-counterexample");
  const auto& subject = r.results["subject"];
  const oracle::Shapovalov shap{Scalar(1), Scalar(1)};
  std::vector<std::size_t> oracle_radical;
  for (int l = 0; l <= 4; ++l) {
    const auto [rank, det] = oracle::rank_det(shap.gram(l));
    const std::size_t size = oracle::Shapovalov::monomials(l, l).size();
    oracle_radical.push_back(size - rank);
    o.require(subject["levels"][l]["determinant"] == to_string(det), "determinant at level " + std::to_string(l));
  }
  o.require(oracle_radical[1] == 0 && oracle_radical[2] == 0, "nonzero determinants at levels 1 and 2");
  o.require(oracle_radical[3] == 1, "level 3 kernel of dimension 1");
  o.require(oracle_radical == std::vector<std::size_t>{0, 0, 0, 1, 1}, "oracle radical levels (0,0,0,1,1)");
  o.require(subject["radical_dims"].get<std::vector<std::size_t>>() == oracle_radical, "reported radical dims match the oracle");

  // The oracle's own level-3 kernel vector is killed by L(1) and L(2).
  const auto ker = oracle::kernel(shap.gram(3));
  const auto monos = oracle::Shapovalov::monomials(3, 3);
  bool singular = ker.size() == 1;
  if (singular) {
    oracle::Shapovalov::Vec v;
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (ker[0][i] != 0) v[monos[i]] = ker[0][i];
    auto vanishes = [](const oracle::Shapovalov::Vec& x) {
      return std::all_of(x.begin(), x.end(), [](const auto& t) { return t.second == 0; });
    };
    singular = vanishes(shap.apply_all(1, v)) && vanishes(shap.apply_all(2, v));
  }
  o.require(singular, "oracle kernel vector is singular");
  o.require(subject["singular_vectors"].size() == 1 && subject["singular_vectors"][0]["singular"] == true,
            "reported kernel vector passes singular_check");
  // The submodule generated by a level-3 singular vector has dimension p(k - 3) at level k.
  o.require(oracle_radical[3] == 1 && oracle_radical[4] == 1, "radical matches the generated submodule dims (1, 1)");
  o.require(subject["matches_singular_submodule"] == true && subject["submodule_stable"] == true,
            "radical equals the submodule generated by the singular vector");

  const oracle::Shapovalov control{Scalar(1), make_scalar(2, 3)};
  bool control_zero = true;
  for (int l = 0; l <= 4; ++l)
    control_zero = control_zero && oracle::rank_det(control.gram(l)).first == oracle::Shapovalov::monomials(l, l).size();
  o.require(control_zero, "oracle: Verma(1,2/3) nondegenerate through level 4");
  o.require(r.results["controls"][0]["radical_dims"] == Json::array({0, 0, 0, 0, 0}), "reported control radical is zero");
  o.require(r.passed(), "all report verdicts");
  o.notes.push_back("radical dims (0,0,0,1,1); level-3 singular vector confirmed by the oracle");
  return o;
}

// Criterion 4: action rank equals the dimension formula, 5 and 18.
Outcome dimension_formula_check() {
  Outcome o;
  const Report r = run_default("zhu-rank-and-dimension");
  const IntMat gram{{2}};
  const std::vector<std::vector<Scalar>> cosets{{Scalar(0)}, {make_scalar(1, 2)}};
  std::vector<long> expected;
  long total = 0, last_squares = 0;
  for (int n = 0; n <= 1; ++n) {
    last_squares = 0;
    for (const auto& lambda : cosets) {
      const long dim = oracle::coset_dim(gram, lambda, n);
      last_squares += dim * dim;
    }
    total += last_squares;
    expected.push_back(total);
  }
  o.require(expected == std::vector<long>{5, 18} && last_squares == 13, "oracle dims 5, 18 and increment 13");
  const auto& levels = r.results["levels"];
  o.require(levels.size() == 2, "levels n = 0 and n = 1");
  if (levels.size() == 2) {
    for (int n = 0; n <= 1; ++n) {
      o.require(levels[n]["action_rank"] == expected[n], "action rank at n = " + std::to_string(n));
      o.require(levels[n]["dimension_formula"] == std::to_string(expected[n]), "dimension formula at n = " + std::to_string(n));
    }
    o.require(levels[1]["increment"] == "13" && levels[1]["top_squares"] == "13", "increment 13");
    o.notes.push_back("ranks " + levels[0]["action_rank"].dump() + ", " + levels[1]["action_rank"].dump() + "; increment " +
                      levels[1]["increment"].get<std::string>());
  }
  o.require(r.passed(), "all report verdicts");
  return o;
}

// Criterion 5: matrix units, E^alpha square and untwisted action rank 29.
Outcome lattice_relations() {
  Outcome o;
  const Report r = run_default("lattice-plus-relations");
  require_verdict(o, r, "matrix units act on V_L^-(0)");
  require_verdict(o, r, "matrix-unit law");
  require_verdict(o, r, "[E^alpha] * [E^alpha] = 4 eps(alpha, alpha) [omega_alpha]");
  const auto& certs = r.results["e_alpha_square_certificates"];
  bool recorded = !certs.empty();
  for (const auto& c : certs) recorded = recorded && c.contains("status");
  o.require(recorded, "certificate outcome recorded for every root");
  long expected = 0;
  for (long d : oracle::untwisted_top_dims({{2, 0}, {0, 2}})) expected += d * d;
  o.require(expected == 29, "oracle sum of squared top dims is 29");
  o.require(r.results["action"]["rank"] == expected, "untwisted action rank equals the oracle");
  o.require(r.passed(), "all report verdicts");
  o.notes.push_back("action rank " + r.results["action"]["rank"].dump() + " vs oracle " + std::to_string(expected) +
                    "; certificate: " + (certs.empty() ? "none" : certs[0]["status"].get<std::string>()));
  return o;
}

// Criterion 6: engine property suites and report determinism.
Outcome properties() {
  Outcome o;
  SampleOptions opt;
  opt.samples = 100;
  opt.seed = 2024;
  auto vir = make_virasoro(Scalar(1));
  auto verma = vir->verma(make_scalar(1, 4));
  auto a1 = make_lattice(LatticeData::with_default_cocycle({{2}}));
  auto half = a1->coset({make_scalar(1, 2)});
  auto rank2 = make_lattice(LatticeData::with_default_cocycle({{2, 0}, {0, 2}}));
  auto rank2_half = rank2->coset({make_scalar(1, 2), make_scalar(1, 2)});

  OSpanOptions span_opts;
  span_opts.D = 4;
  span_opts.G = 6;
  const auto span = ospan_generate(*a1, full_basis(*a1), span_opts);

  SampleOptions lattice_opt = opt;
  lattice_opt.max_weight = 2;
  std::vector<CheckResult> checks{
      creation_axiom(*vir, opt),
      creation_axiom(*a1, opt),
      derivative_property(*vir, *verma, opt),
      derivative_property(*a1, *half, opt),
      commutator_identity(*vir, *verma, opt),
      commutator_identity(*a1, *half, opt),
      theta_equivariance(*rank2, *rank2_half, lattice_opt),
      theta_involution(*rank2, lattice_opt),
      phi_involution(*vir, opt),
      phi_involution(*a1, opt),
      certificate_reverification(span, opt),
      reduce_idempotence(*a1, opt),
  };
  std::size_t total = 0;
  for (const auto& c : checks) {
    total += c.checked;
    o.require(c.passed() && c.checked >= 100, c.name + (c.counterexample.empty() ? "" : ": " + c.counterexample));
  }
  for (const auto& e : list_experiments()) {
    const auto cfg = default_config(e.name);
    o.require(run(cfg).serialize() == run(cfg).serialize(), "byte-identical double run of " + e.name);
  }
  o.notes.push_back(std::to_string(total) + " property checks, 6 experiments run twice");
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "o-composition identity", 120, composition_identity},
      {2, "pairing invariance", 600, pairing_invariance},
      {3, "c = 1 counterexample and radical", 60, counterexample},
      {4, "dimension formula 5 / 18", 120, dimension_formula_check},
      {5, "V_L^+ relation suite, rank 29", 900, lattice_relations},
      {6, "engine property suites and determinism", 600, properties},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.passed = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(seconds < c.limit_seconds, "runtime limit");
    all = all && o.passed;
    std::ostringstream notes;
    for (std::size_t i = 0; i < o.notes.size(); ++i) notes << (i ? "; " : "") << o.notes[i];
    std::cout << "criterion " << c.id << " " << (o.passed ? "PASS" : "FAIL") << " " << c.title << " [" << std::fixed
              << std::setprecision(2) << seconds << " s, limit " << std::setprecision(0) << c.limit_seconds
              << " s] " << notes.str() << std::endl;
  }
  return all ? 0 : 1;
}
