#include <catch_amalgamated.hpp>

#include <random>

#include "voa/semisimple.hpp"
#include "voa/zhu.hpp"

using namespace voa;

namespace {

// Coefficients of (1+z)^k by repeated multiplication by (1+z).
std::vector<Scalar> one_plus_z(long k) {
  std::vector<Scalar> c{1};
  for (long s = 0; s < k; ++s) {
    std::vector<Scalar> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] += c[i];
    }
    c = next;
  }
  return c;
}

// Res_z (1+z)^k z^{-N} Y(u,z) v with u homogeneous, term by term.
State residue_oracle(const Voa& V, const State& u, long k, long N, const State& v) {
  State out;
  const auto c = one_plus_z(k);
  for (std::size_t j = 0; j < c.size(); ++j) {
    // z^{j - N} z^{-p-1} has residue when p = j - N.
    out.add_scaled(mode_apply(V, u, static_cast<long>(j) - N, v), c[j]);
  }
  return out;
}

long wt(const Voa& V, const State& u) { return to_int64(weight(V.space(), u)); }

State star_oracle(const Voa& V, const State& u, const State& v, int n) {
  State out;
  for (int m = 0; m <= n; ++m)
    out.add_scaled(residue_oracle(V, u, wt(V, u) + n, n + m + 1, v), Scalar(sign_power(m) * binomial(m + n, n)));
  return out;
}

std::vector<State> sample_basis(const Voa& V, int max_weight) {
  std::vector<State> out;
  for (int w = 0; w <= max_weight; ++w)
    for (const auto& k : V.space().basis(w)) out.emplace_back(k);
  return out;
}

}  // namespace

TEST_CASE("vacuum products") {
  auto vir = make_virasoro(Scalar(1));
  const State one = vir->vacuum();
  const State w = vir->omega();
  for (int n = 0; n <= 2; ++n) {
    CHECK(star_n(*vir, one, w, n) == w);
    CHECK(circ_n(*vir, one, w, n).is_zero());
  }
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= n; ++m) CHECK(circ_mn(*vir, one, w, m, n).is_zero());
}

TEST_CASE("explicit residue products") {
  auto vir = make_virasoro(Scalar(1));
  const State w = vir->omega();
  State expected = State(virasoro_key({2, 2})) + State(virasoro_key({3})) * Scalar(2) + w * Scalar(2);
  CHECK(star_n(*vir, w, w, 0) == expected);

  State mpn = State(virasoro_key({3, 2})) * Scalar(-1) - State(virasoro_key({2, 2})) + State(virasoro_key({3})) +
              w * Scalar(2);
  CHECK(star_mpn(*vir, w, w, 0, 1, 1) == mpn);

  auto m1 = make_heisenberg(1);
  const State h = m1->oscillator_state({{0, 1}});
  CHECK(circ_n(*m1, h, m1->vacuum(), 0) == m1->oscillator_state({{0, 2}}) + h);
  CHECK(circ_mn(*m1, h, m1->vacuum(), 0, 1) == m1->oscillator_state({{0, 3}}) + m1->oscillator_state({{0, 2}}));
}

TEST_CASE("products agree with the term-by-term oracle") {
  std::mt19937_64 rng(5);
  auto vl = make_lattice(LatticeData::with_default_cocycle({{2}}));
  auto vir = make_virasoro(Scalar(-2));
  for (const Voa* V : {static_cast<const Voa*>(vl.get()), static_cast<const Voa*>(vir.get())}) {
    const auto pool = sample_basis(*V, 3);
    for (int s = 0; s < 50; ++s) {
      const State& u = pool[rng() % pool.size()];
      const State& v = pool[rng() % pool.size()];
      const int n = static_cast<int>(rng() % 3);
      CHECK(star_n(*V, u, v, n) == star_oracle(*V, u, v, n));
      CHECK(circ_n(*V, u, v, n) == residue_oracle(*V, u, wt(*V, u) + n, 2 * n + 2, v));
      CHECK(star_mpn(*V, u, v, 0, 0, 0) == star_n(*V, u, v, 0));
      CHECK(star_mpn(*V, u, v, n, n, n) == star_n(*V, u, v, n));
      CHECK(circ_mn(*V, u, v, n, n) == circ_n(*V, u, v, n));
      // Bilinearity in the second slot.
      const State& x = pool[rng() % pool.size()];
      CHECK(star_n(*V, u, v * Scalar(3) + x, n) == star_n(*V, u, v, n) * Scalar(3) + star_n(*V, u, x, n));
    }
  }
}

TEST_CASE("phi") {
  auto vl = make_lattice(LatticeData::with_default_cocycle({{2}}));
  CHECK(phi(*vl, vl->vacuum()) == vl->vacuum());
  CHECK(phi(*vl, vl->omega()) == vl->omega());
  const State h = vl->oscillator_state({{0, 1}});
  CHECK(phi(*vl, h) == -h);
  for (const auto& u : sample_basis(*vl, 4)) CHECK(phi(*vl, phi(*vl, u)) == u);
}

TEST_CASE("zero modes on modules") {
  auto vir = make_virasoro(Scalar(1));
  for (int m = 1; m <= 3; ++m) {
    ModuleInstance M("verma", vir->verma(Scalar(m)));
    const Matrix o = o_matrix(*vir, vir->omega(), 0, M, 0);
    CHECK(o == Matrix::identity(1) * Scalar(m));
    CHECK(o_matrix(*vir, vir->vacuum(), 0, M, 2) == Matrix::identity(M.dimension(2)));
    CHECK(o_matrix(*vir, vir->vacuum(), 1, M, 1).is_zero());
  }
}

TEST_CASE("o-composition identity on samples") {
  std::mt19937_64 rng(17);
  auto vir = make_virasoro(Scalar(1));
  ModuleInstance verma("verma", vir->verma(Scalar(1)));
  const auto pool = sample_basis(*vir, 4);
  const State w = vir->omega();
  CHECK(o_composition_check(*vir, w, w, 0, 0, 0, verma).passed);
  for (int s = 0; s < 20; ++s) {
    const State& u = pool[rng() % pool.size()];
    const State& v = pool[rng() % pool.size()];
    const int m = rng() % 3, p = rng() % 3, n = rng() % 3;
    auto r = o_composition_check(*vir, u, v, m, p, n, verma);
    CHECK(r.passed);
    CHECK(r.checked == verma.dimension(m));
  }
  auto vl = make_lattice(LatticeData::with_default_cocycle({{2}}));
  ModuleInstance half("half", vl->coset({Scalar(1, 2)}));
  const auto lpool = sample_basis(*vl, 2);
  for (int s = 0; s < 20; ++s) {
    const State& u = lpool[rng() % lpool.size()];
    const State& v = lpool[rng() % lpool.size()];
    const int m = rng() % 3, p = rng() % 3, n = rng() % 3;
    CHECK(o_composition_check(*vl, u, v, m, p, n, half).passed);
  }
}

TEST_CASE("O-span generation and certificates") {
  auto vir = make_virasoro(Scalar(1));
  OSpanOptions opts;
  opts.D = 4;
  opts.G = 6;
  auto span = ospan_generate(*vir, full_basis(*vir), opts);
  CHECK(span.span.verify_certificates(span.generators));
  State x = l_mode(*vir, -1, vir->omega()) + vir->omega() * Scalar(2);
  auto cert = o_membership(x, span);
  REQUIRE(cert.has_value());
  CHECK(cert->verified);
  CHECK_FALSE(o_membership(vir->vacuum(), span).has_value());

  auto m1 = make_heisenberg(1);
  auto hspan = ospan_generate(*m1, full_basis(*m1), opts);
  CHECK(o_membership(m1->oscillator_state({{0, 2}}) + m1->oscillator_state({{0, 1}}), hspan).has_value());

  // Monotone in G.
  std::size_t last = 0;
  for (int G = 2; G <= 6; ++G) {
    OSpanOptions o = opts;
    o.G = G;
    const std::size_t d = ospan_generate(*vir, full_basis(*vir), o).dimension_within(4);
    CHECK(d >= last);
    last = d;
  }

  OSpanOptions tiny = opts;
  tiny.budget = 3;
  CHECK_THROWS_AS(ospan_generate(*vir, full_basis(*vir), tiny), Error);
}

TEST_CASE("action map ranks for the rank-one lattice") {
  auto vl = make_lattice(LatticeData::with_default_cocycle({{2}}));
  auto mods = lattice_modules(*vl);
  REQUIRE(mods.size() == 2);
  std::vector<ActionTarget> t0, t1;
  for (const auto& m : mods) {
    t0.push_back({m, 0});
    t1.push_back({m, 1});
  }
  auto r0 = action_map(*vl, basis_up_to(full_basis(*vl), 3), t0);
  CHECK(r0.rank == 5);
  CHECK(r0.full_dimension == 5);
  CHECK(r0.closure_dimension == 5);
  auto r1 = action_map(*vl, basis_up_to(full_basis(*vl), 6), t1);
  CHECK(r1.rank == 18);
  CHECK(r1.full_dimension == 18);

  // The certified part of O(V) maps to zero.
  OSpanOptions opts;
  opts.D = 3;
  opts.G = 4;
  auto span = ospan_generate(*vl, full_basis(*vl), opts);
  for (const auto& row : span.rows_within(3)) CHECK(action_image(*vl, row, t0).is_zero());

  // Single module V itself: o(1) is the identity on V(0).
  auto self = std::make_shared<ModuleInstance>("V", std::shared_ptr<const Space>(vl, &vl->space()));
  CHECK(action_image(*vl, vl->vacuum(), {{self, 0}}) == Matrix::identity(1));
}

TEST_CASE("anti-involution at the action level") {
  std::mt19937_64 rng(3);
  auto vl = make_lattice(LatticeData::with_default_cocycle({{2}}));
  std::vector<ActionTarget> t;
  for (const auto& m : lattice_modules(*vl)) t.push_back({m, 0});
  const auto pool = sample_basis(*vl, 2);
  for (int s = 0; s < 20; ++s) {
    const State& u = pool[rng() % pool.size()];
    const State& v = pool[rng() % pool.size()];
    CHECK(action_image(*vl, phi(*vl, star_n(*vl, u, v, 0)), t) ==
          action_image(*vl, star_n(*vl, phi(*vl, v), phi(*vl, u), 0), t));
  }
}
