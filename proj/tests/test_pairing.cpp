#include <catch_amalgamated.hpp>

#include <map>

#include "oracles.hpp"
#include "voa/pairing.hpp"

using namespace voa;

namespace {

using oracle::Shapovalov;

std::shared_ptr<ModuleInstance> verma_module(const VirasoroVoa& vir, const Scalar& h) {
  return std::make_shared<ModuleInstance>("V(c,h)", vir.verma(h));
}

}  // namespace

TEST_CASE("pairing on Verma modules equals the Shapovalov form") {
  auto vir = make_virasoro(Scalar(1));
  for (const Scalar h : {Scalar(1), Scalar(2, 3)}) {
    auto M = verma_module(*vir, h);
    Pairing P(*vir, M, M);
    CHECK(P.bottom() == Matrix::identity(1));
    Shapovalov oracle{Scalar(1), h};
    for (int l = 0; l <= 4; ++l) {
      const auto& basis = M->level_basis(l);
      const Matrix& G = P.gram(l);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
          CHECK(G(i, j) == oracle.form(basis[i].leading_key().modes, basis[j].leading_key().modes));
      CHECK(shapovalov_gram(*vir->verma(h), l) == G);
    }
  }
}

TEST_CASE("small Gram values and block rule") {
  auto vir = make_virasoro(Scalar(1));
  auto M = verma_module(*vir, Scalar(1));
  Pairing P(*vir, M, M);
  CHECK(P.gram(0) == Matrix::identity(1));
  CHECK(P.gram(1) == Matrix::identity(1) * Scalar(2));
  const State v = M->level_basis(0)[0];
  const State l1 = l_mode(*vir, -1, M->space(), v);
  CHECK(P.pair(v, v) == 1);
  CHECK(P.pair(l1, l1) == 2);
  CHECK(P.pair(l1, M->level_basis(2)[0]) == 0);

  auto generic = verma_module(*vir, Scalar(2, 3));
  Pairing Q(*vir, generic, generic);
  CHECK(Q.gram(3).rank() == 3);
}

TEST_CASE("Gram matrices do not depend on the peeling order") {
  auto vir = make_virasoro(Scalar(1));
  auto M = verma_module(*vir, Scalar(1));
  Pairing a(*vir, M, M), b(*vir, M, M, std::nullopt, true);
  for (int l = 0; l <= 4; ++l) CHECK(a.gram(l) == b.gram(l));

  auto vl = make_lattice(LatticeData::with_default_cocycle({{2}}));
  auto half = std::make_shared<ModuleInstance>("half", vl->coset({Scalar(1, 2)}));
  Pairing c(*vl, half, half), d(*vl, half, half, std::nullopt, true);
  for (int l = 0; l <= 3; ++l) CHECK(c.gram(l) == d.gram(l));
}

TEST_CASE("invariance of the pairing") {
  auto vir = make_virasoro(Scalar(1));
  for (const Scalar h : {Scalar(1), Scalar(2, 3)}) {
    auto M = verma_module(*vir, h);
    Pairing P(*vir, M, M);
    auto r = invariance_suite(P, *vir, {vir->omega(), vir->vacuum()}, 4);
    CHECK(r.passed);
    CHECK(r.checked > 0);
  }
  auto vl = make_lattice(LatticeData::with_default_cocycle({{2}}));
  for (const auto& lambda : dual_coset_reps(vl->core())) {
    auto right = std::make_shared<ModuleInstance>("right", vl->coset(lambda));
    std::vector<Scalar> neg(lambda);
    for (auto& x : neg) x = -x;
    auto left = std::make_shared<ModuleInstance>("left", vl->coset(neg));
    Pairing P(*vl, left, right);
    const State ea = State(vl->lattice_key({1})) + State(vl->lattice_key({-1}));
    auto r = invariance_suite(P, *vl, {vl->oscillator_state({{0, 1}}), ea, vl->omega()}, 3);
    CHECK(r.passed);
  }
}

TEST_CASE("radicals and singular vectors") {
  auto vir = make_virasoro(Scalar(1));
  auto M = verma_module(*vir, Scalar(1));
  Pairing P(*vir, M, M);
  auto rep = radical(P, *vir, 4);
  CHECK(rep.radical_dims() == std::vector<std::size_t>{0, 0, 0, 1, 1});
  CHECK(rep.levels[1].determinant != 0);
  CHECK(rep.levels[2].determinant != 0);
  CHECK(rep.levels[3].determinant == 0);
  REQUIRE(rep.levels[3].radical.size() == 1);
  CHECK(singular_check(*vir, *M, rep.levels[3].radical[0]));
  CHECK(rep.submodule_stable);
  CHECK(rep.matches_singular_submodule);
  CHECK(omega_n(*vir, *M, 0, 3).rank() == 1);
  CHECK_FALSE(singular_check(*vir, *M, M->level_basis(0)[0]));

  auto generic = verma_module(*vir, Scalar(2, 3));
  Pairing Q(*vir, generic, generic);
  CHECK(radical(Q, *vir, 4).radical_dims() == std::vector<std::size_t>{0, 0, 0, 0, 0});
  for (int l = 1; l <= 3; ++l) CHECK(omega_n(*vir, *generic, 0, l).rank() == 0);
  CHECK_FALSE(singular_check(*vir, *generic, l_mode(*vir, -1, generic->space(), generic->level_basis(0)[0])));

  auto vl = make_lattice(LatticeData::with_default_cocycle({{2}}));
  auto half = std::make_shared<ModuleInstance>("half", vl->coset({Scalar(1, 2)}));
  Pairing L(*vl, half, half);
  CHECK(radical(L, *vl, 3).radical_dims() == std::vector<std::size_t>{0, 0, 0, 0});
}
