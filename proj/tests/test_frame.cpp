#include <catch_amalgamated.hpp>

#include "voa/frame.hpp"

using namespace voa;

namespace {

std::shared_ptr<FreeBosonVoa> diag22() { return make_lattice(LatticeData::with_default_cocycle({{2, 0}, {0, 2}})); }

// Column vector of coordinates in a block-diagonal layout.
Matrix column(const std::vector<Scalar>& c, std::size_t total, std::size_t offset) {
  Matrix out(total, 1);
  for (std::size_t i = 0; i < c.size(); ++i) out(offset + i, 0) = c[i];
  return out;
}

}  // namespace

TEST_CASE("rank one is rejected") {
  auto vl = make_lattice(LatticeData::with_default_cocycle({{2}}));
  try {
    FrameVectors s(vl);
    FAIL("expected RankTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RankTooSmall);
  }
}

TEST_CASE("distinguished vectors") {
  auto vl = diag22();
  FrameVectors s(vl);
  CHECK(s.d() == 2);
  CHECK(s.r() == 2);
  CHECK(s.l() == 0);
  CHECK(s.S(1, 2, 1, 1) == vl->oscillator_state({{0, 1}, {1, 1}}) * Scalar(1, 2));
  CHECK(s.E_alpha({1, 0}) == State(vl->lattice_key({1, 0})) + State(vl->lattice_key({-1, 0})));
  const auto parts = split_levels(s.E_u(1, 2));
  CHECK(parts.begin()->first == 3);
  CHECK(parts.rbegin()->first == 6);
  for (const auto& [name, v] : s.catalogue()) {
    INFO(name);
    CHECK(vl->theta(v) == v);
  }
  // E^alpha *_0 E^alpha = 4 eps(alpha, alpha) omega_alpha holds exactly as states.
  for (const auto& alpha : s.roots()) {
    const State lhs = star_n(*vl, s.E_alpha(alpha), s.E_alpha(alpha), 0);
    CHECK(lhs == s.omega_root(alpha) * Scalar(4 * vl->core().epsilon(alpha, alpha)));
  }
}

TEST_CASE("matrix units on V_L^-(0) and the untwisted tops") {
  auto vl = diag22();
  FrameVectors s(vl);
  auto mods = untwisted_plus_modules(*vl);
  std::vector<ActionTarget> targets;
  std::size_t minus_index = mods.size();
  for (std::size_t i = 0; i < mods.size(); ++i) {
    if (mods[i]->sign() == -1 && mods[i]->dimension(0) == 4) {
      minus_index = i;
      targets.push_back({s.minus_module(), 0});
    } else {
      targets.push_back({mods[i], 0});
    }
  }
  REQUIRE(minus_index < mods.size());
  MatrixUnits E(s, targets);
  const int n = s.size();
  const std::size_t total = E.unit(1, 1).rows();
  REQUIRE(total == 13);

  // [E_ij] e^k = delta_{jk} e^i.
  const auto basis = s.minus_basis();
  std::vector<Matrix> cols;
  for (const auto& e : basis) cols.push_back(column(s.minus_module()->coordinates(0, e), total, E.offset(minus_index)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        INFO(i << j << k);
        const Matrix got = E.unit(i, j) * cols[k - 1];
        CHECK(got == (j == k ? cols[i - 1] : Matrix(total, 1)));
      }

  // [E_ij] * [E_ks] = delta_{jk} [E_is].
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int t = 1; t <= n; ++t) {
          const Matrix prod = E.unit(i, j) * E.unit(k, t);
          CHECK(prod == (j == k ? E.unit(i, t) : Matrix(total, total)));
        }
}
