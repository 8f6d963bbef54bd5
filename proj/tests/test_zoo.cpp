#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "voa/modules.hpp"

using namespace voa;

namespace {

using oracle::colored;
using oracle::coset_dim;

}  // namespace

TEST_CASE("Heisenberg and Virasoro graded dimensions") {
  auto m1 = make_heisenberg(1);
  CHECK(m1->space().dimension(2) == 2);
  CHECK(m1->space().dimension(0) == 1);
  CHECK(make_heisenberg(2)->space().dimension(1) == 2);
  auto vir = make_virasoro(Scalar(1));
  CHECK(vir->space().dimension(4) == 2);
  CHECK(vir->space().dimension(1) == 0);
  CHECK(vir->verma(Scalar(1))->dimension(3) == 3);
  for (int n = 0; n <= 6; ++n) CHECK(static_cast<long>(make_heisenberg(2)->space().dimension(n)) == colored(n, 2, n));
}

TEST_CASE("lattice graded dimensions against enumeration") {
  for (const auto& gram : std::vector<std::vector<std::vector<int>>>{{{2}}, {{2, 0}, {0, 2}}, {{2, -1}, {-1, 2}}}) {
    auto vl = make_lattice(LatticeData::with_default_cocycle(gram));
    for (const auto& lambda : dual_coset_reps(vl->core())) {
      auto space = vl->coset(lambda);
      const int top = gram.size() == 1 ? 8 : 5;
      for (int n = 0; n <= top; ++n) CHECK(static_cast<long>(space->dimension(n)) == coset_dim(gram, lambda, n));
    }
  }
  CHECK(make_lattice(LatticeData::with_default_cocycle({{2}}))->space().dimension(1) == 3);
  CHECK(make_lattice(LatticeData::with_default_cocycle({{2, 0}, {0, 2}}))->space().dimension(1) == 6);
}

TEST_CASE("invalid lattices and cocycles") {
  CHECK_THROWS_AS(make_lattice(LatticeData::with_default_cocycle({{1}})), Error);
  CHECK_THROWS_AS(make_lattice(LatticeData::with_default_cocycle({{2, 3}, {3, 2}})), Error);
  CHECK_THROWS_AS(make_lattice(LatticeData{{{2, 1}, {1, 2}}, {{0, 0}, {0, 0}}}), Error);
}

TEST_CASE("theta on basic states") {
  auto vl = make_lattice(LatticeData::with_default_cocycle({{2}}));
  State h = vl->oscillator_state({{0, 1}});
  CHECK(vl->theta(h) == -h);
  State sym = State(vl->lattice_key({1})) + State(vl->lattice_key({-1}));
  CHECK(vl->theta(sym) == sym);
  auto half = vl->coset({Scalar(1, 2)});
  for (const auto& k : half->basis(0)) {
    const State t = half->theta(k);
    CHECK(t.size() == 1);
    CHECK(half->theta(t) == State(k));
  }
  auto fresh = make_lattice(LatticeData::with_default_cocycle({{2}}));
  CHECK_THROWS_AS(fresh->space_of(Key{0, {1}, {}}), Error);
}

TEST_CASE("theta-eigenspaces") {
  auto vl = make_lattice(LatticeData::with_default_cocycle({{2}}));
  CHECK(fixed_subspace(vl->lattice_space(), 1, 0).rank() == 1);
  CHECK(fixed_subspace(vl->lattice_space(), -1, 1).rank() == 2);
  CHECK(fixed_subspace(vl->lattice_space(), 1, 1).rank() == 1);
}

TEST_CASE("Delta sets") {
  auto v1 = make_lattice(LatticeData::with_default_cocycle({{2}}));
  CHECK(delta_set(v1->core(), {Scalar(0)}) == std::vector<IntVec>{{0}});
  CHECK(delta_set(v1->core(), {Scalar(1, 2)}) == std::vector<IntVec>{{-1}, {0}});
  auto v2 = make_lattice(LatticeData::with_default_cocycle({{2, 0}, {0, 2}}));
  CHECK(delta_set(v2->core(), {Scalar(1, 2), Scalar(1, 2)}).size() == 4);
}

TEST_CASE("module top levels") {
  auto v1 = make_lattice(LatticeData::with_default_cocycle({{2}}));
  auto half = v1->coset({Scalar(1, 2)});
  CHECK(half->dimension(0) == 2);
  CHECK(half->dimension(1) == 2);
  ModuleInstance plus("p", half, 1), minus("m", half, -1);
  CHECK(plus.dimension(0) == 1);
  CHECK(minus.dimension(0) == 1);

  auto v2 = make_lattice(LatticeData::with_default_cocycle({{2, 0}, {0, 2}}));
  auto mods = untwisted_plus_modules(*v2);
  REQUIRE(mods.size() == 8);
  std::multiset<std::size_t> tops, expected{1, 4, 1, 1, 1, 1, 2, 2};
  std::size_t squares = 0;
  for (const auto& m : mods) {
    tops.insert(m->dimension(0));
    squares += m->dimension(0) * m->dimension(0);
  }
  CHECK(tops == expected);
  CHECK(squares == 29);
}

TEST_CASE("theta equivariance and involution on samples") {
  auto vl = make_lattice(LatticeData::with_default_cocycle({{2, 0}, {0, 2}}));
  auto coset = vl->coset({Scalar(1, 2), Scalar(1, 2)});
  std::mt19937_64 rng(11);
  std::vector<Key> us, ws;
  for (int l = 0; l <= 2; ++l)
    for (const auto& k : vl->space().basis(l)) us.push_back(k);
  for (int l = 0; l <= 2; ++l)
    for (const auto& k : coset->basis(l)) ws.push_back(k);
  int checked = 0;
  for (int s = 0; s < 100; ++s) {
    const Key& u = us[rng() % us.size()];
    const Key& w = ws[rng() % ws.size()];
    const int p = static_cast<int>(rng() % 5) - 3;
    const State lhs = vl->theta(mode_apply(*vl, State(u), p, *coset, State(w)));
    const State tu = vl->theta(State(u));
    const State tw = vl->theta(State(w));
    auto target = vl->space_of(tw.leading_key());
    const State rhs = mode_apply(*vl, tu, p, *target, tw);
    CHECK(lhs == rhs);
    CHECK(vl->theta(tw) == State(w));
    ++checked;
  }
  CHECK(checked == 100);
}
