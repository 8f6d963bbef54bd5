#include <catch_amalgamated.hpp>

#include <map>

#include "voa/lattice.hpp"
#include "voa/virasoro.hpp"

using namespace voa;

namespace {

// Oscillator polynomials in one direction: sorted mode lists -> coefficient.
using Poly = std::map<std::vector<int>, Scalar>;

Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::vector<int> k(ka);
      k.insert(k.end(), kb.begin(), kb.end());
      std::sort(k.begin(), k.end(), std::greater<>());
      out[k] += ca * cb;
    }
  return out;
}

// Coefficients of z^0..z^order of exp(sum_{n>=1} x(-n) z^n / n) by summing
// powers of the exponent directly.
std::vector<Poly> exp_series(int order) {
  std::vector<Poly> exponent(order + 1);
  for (int n = 1; n <= order; ++n) exponent[n][{n}] = Scalar(1, n);
  std::vector<Poly> result(order + 1), power(order + 1);
  power[0][{}] = 1;
  result[0][{}] = 1;
  for (int k = 1; k <= order; ++k) {
    std::vector<Poly> next(order + 1);
    for (int i = 0; i <= order; ++i)
      for (int j = 1; i + j <= order; ++j)
        for (const auto& [m, c] : mul(power[i], exponent[j])) next[i + j][m] += c;
    power = next;
    for (int i = 0; i <= order; ++i)
      for (const auto& [m, c] : power[i]) result[i][m] += c / factorial(k);
  }
  return result;
}

}  // namespace

TEST_CASE("weights of homogeneous states") {
  auto m1 = make_heisenberg(1);
  State u = m1->oscillator_state({{0, 1}, {0, 2}});
  CHECK(weight(m1->space(), u) == 3);
  auto vir = make_virasoro(Scalar(1, 2));
  CHECK(weight(vir->space(), vir->omega()) == 2);
  auto vl = make_lattice(LatticeData::with_default_cocycle({{2}}));
  CHECK(weight(vl->space(), State(vl->lattice_key({1}))) == 1);
  CHECK_THROWS_AS(weight(vir->space(), State()), Error);
  CHECK_THROWS_AS(weight(m1->space(), u + m1->vacuum()), Error);
}

TEST_CASE("Heisenberg bracket and L(0)") {
  auto m1 = make_heisenberg(1);
  State h = m1->oscillator_state({{0, 1}});
  CHECK(mode_apply(*m1, h, 1, h) == m1->vacuum());
  State w = m1->oscillator_state({{0, 3}, {0, 1}});
  CHECK(l_mode(*m1, 0, w) == w * Scalar(4));
  CHECK(mode_apply(*m1, m1->omega(), 1, w) == w * Scalar(4));
  CHECK(l_mode(*m1, -1, m1->vacuum()).is_zero());
}

TEST_CASE("Virasoro central term") {
  auto vir = make_virasoro(Scalar(7, 3));
  State l2 = l_mode(*vir, 2, vir->omega());
  CHECK(l2 == vir->vacuum() * Scalar(7, 6));
  CHECK(l_mode(*vir, -1, vir->vacuum()).is_zero());
  CHECK(vir->space().dimension(4) == 2);
  CHECK(vir->space().dimension(1) == 0);
  auto verma = vir->verma(Scalar(1));
  CHECK(verma->dimension(3) == 3);
}

TEST_CASE("lattice vertex operator against an exponential series oracle") {
  LatticeData data{{{2}}, {{1}}};
  auto vl = make_lattice(data);
  REQUIRE(vl->core().epsilon({1}, {1}) == -1);
  State ea(vl->lattice_key({1}));
  State ema(vl->lattice_key({-1}));
  State got = mode_apply(*vl, ea, -1, ema);
  State expected = (vl->oscillator_state({{0, 2}}) + vl->oscillator_state({{0, 1}, {0, 1}})) * Scalar(-1, 2);
  CHECK(got == expected);

  // (e^a)_p e^{-a} = eps(a,-a) * [z^{-p-1+2}] exp(...) for every p.
  const auto series = exp_series(8);
  for (int p = -5; p <= 1; ++p) {
    State oracle;
    const int order = -p - 1 + 2;
    if (order >= 0)
      for (const auto& [m, c] : series[order]) {
        std::vector<std::pair<int, int>> dm;
        for (int n : m) dm.emplace_back(0, n);
        oracle.add_scaled(vl->oscillator_state(dm), -c);
      }
    CHECK(mode_apply(*vl, ea, p, ema) == oracle);
  }
}

TEST_CASE("cocycle composition sign") {
  auto vl = make_lattice(LatticeData::with_default_cocycle({{2, -1}, {-1, 2}}));
  const auto& core = vl->core();
  for (int a0 = -1; a0 <= 1; ++a0)
    for (int a1 = -1; a1 <= 1; ++a1)
      for (int b0 = -1; b0 <= 1; ++b0)
        for (int b1 = -1; b1 <= 1; ++b1) {
          IntVec a{a0, a1}, b{b0, b1};
          const Scalar ab = core.pair(core.numerators(a), core.numerators(b));
          const int expect = (to_int64(ab) % 2 == 0) ? 1 : -1;
          CHECK(core.epsilon(a, b) * core.epsilon(b, a) == expect);
          // The lowest mode of e^a on e^b is eps(a, b) e^{a+b}.
          State prod = mode_apply(*vl, State(vl->lattice_key(a)), -to_int64(ab) - 1, State(vl->lattice_key(b)));
          IntVec s{a0 + b0, a1 + b1};
          CHECK(prod == State(vl->lattice_key(s)) * Scalar(core.epsilon(a, b)));
        }
}
