#include "voa/engine.hpp"

#include <sstream>

namespace voa {

std::map<int, State> split_levels(const State& s) {
  std::map<int, State> out;
  for (const auto& [k, c] : s) out[k.level].add(k, c);
  return out;
}

int level_of(const State& s) {
  if (s.is_zero()) throw Error(ErrorKind::ZeroState, "weight of the zero state is undefined");
  const int level = s.begin()->first.level;
  if (s.leading_key().level != level) {
    std::ostringstream msg;
    msg << "state is not homogeneous; levels present:";
    for (const auto& [l, part] : split_levels(s)) msg << ' ' << l;
    throw Error(ErrorKind::MixedWeight, msg.str());
  }
  return level;
}

Scalar weight(const Space& space, const State& s) { return Scalar(level_of(s)) + space.weight_offset(); }

namespace {

State iterate(const Voa& V, const Peel& pl, std::int64_t p, const Space& M, const Key& w) {
  // (a_j b)_p w = sum_i (-1)^i C(j,i) [a_{j-i} b_{p+i} w - (-1)^j b_{j+p-i} a_i w]
  const Key& a = pl.generator;
  const Key& b = pl.rest;
  const std::int64_t j = pl.j;
  State out;

  const std::int64_t first_max = static_cast<std::int64_t>(w.level) + b.level - p - 1;
  for (std::int64_t i = 0; i <= first_max; ++i) {
    const Scalar coeff = Scalar(binomial(j, i)) * sign_power(i);
    if (coeff == 0) continue;
    State inner = mode_apply(V, b, p + i, M, w);
    for (const auto& [k, c] : inner) out.add_scaled(mode_apply(V, a, j - i, M, k), coeff * c);
  }

  const std::int64_t second_max = static_cast<std::int64_t>(w.level) + a.level - 1;
  const int sj = sign_power(j);
  for (std::int64_t i = 0; i <= second_max; ++i) {
    const Scalar coeff = Scalar(binomial(j, i)) * (-sign_power(i) * sj);
    if (coeff == 0) continue;
    State inner = mode_apply(V, a, i, M, w);
    for (const auto& [k, c] : inner) out.add_scaled(mode_apply(V, b, j + p - i, M, k), coeff * c);
  }
  out *= pl.coeff;
  return out;
}

}  // namespace

State mode_apply(const Voa& V, const Key& u, std::int64_t p, const Space& M, const Key& w) {
  if (static_cast<std::int64_t>(w.level) + u.level - p - 1 < 0) return {};
  if (u == V.vacuum_key()) return p == -1 ? State(w) : State();

  ModeRequestKey req{u, p, w};
  if (auto hit = M.memo().find(req)) return *hit;

  State result;
  if (auto pl = V.peel(u)) {
    result = iterate(V, *pl, p, M, w);
  } else {
    result = M.generator_mode(u, p, w);
  }
  M.memo().store(req, result);
  return result;
}

State mode_apply(const Voa& V, const State& u, std::int64_t p, const Space& M, const State& w) {
  State out;
  for (const auto& [uk, uc] : u)
    for (const auto& [wk, wc] : w) out.add_scaled(mode_apply(V, uk, p, M, wk), uc * wc);
  return out;
}

State mode_apply(const Voa& V, const State& u, std::int64_t p, const State& w) {
  return mode_apply(V, u, p, V.space(), w);
}

State l_mode(const Voa& V, std::int64_t n, const Space& M, const State& w) {
  State out;
  const State omega = V.omega();
  for (const auto& [wk, wc] : w) {
    if (auto fast = M.virasoro_mode(n, wk)) {
      out.add_scaled(*fast, wc);
    } else {
      for (const auto& [ok, oc] : omega) out.add_scaled(mode_apply(V, ok, n + 1, M, wk), oc * wc);
    }
  }
  return out;
}

State l_mode(const Voa& V, std::int64_t n, const State& w) { return l_mode(V, n, V.space(), w); }

std::string render(const Space& M, const State& s) {
  if (s.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : s) {
    if (!first) out << " + ";
    first = false;
    out << '(' << c.get_str() << ")*" << M.render(k);
  }
  return out.str();
}

}  // namespace voa
