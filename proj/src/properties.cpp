#include "voa/properties.hpp"

#include <random>

namespace voa {

void CheckResult::record(bool ok, const std::string& detail) {
  ++checked;
  if (ok) return;
  if (failures++ == 0) counterexample = detail;
}

namespace {

std::vector<Key> pool(const Space& S, int lo, int hi) {
  std::vector<Key> out;
  for (int l = lo; l <= hi; ++l)
    for (auto& k : S.basis(l)) out.push_back(std::move(k));
  if (out.empty()) throw Error(ErrorKind::InvalidConfig, "no basis vectors to sample in " + S.name());
  return out;
}

template <class T>
const T& draw(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[rng() % v.size()];
}

int draw_mode(std::mt19937_64& rng, const SampleOptions& opt) {
  return opt.min_mode + static_cast<int>(rng() % static_cast<std::uint64_t>(opt.max_mode - opt.min_mode + 1));
}

std::string describe(const Space& S, const Key& u, long p, const Space& M, const Key& w) {
  return "u = " + S.render(u) + ", p = " + std::to_string(p) + ", w = " + M.render(w);
}

}  // namespace

CheckResult creation_axiom(const Voa& V, const SampleOptions& opt) {
  CheckResult out{"creation axiom"};
  std::mt19937_64 rng(opt.seed);
  const auto us = pool(V.space(), 0, opt.max_weight);
  const State one = V.vacuum();
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const Key& u = draw(rng, us);
    const int n = static_cast<int>(rng() % 4);
    const bool ok = mode_apply(V, State(u), -1, one) == State(u) && mode_apply(V, State(u), n, one).is_zero();
    out.record(ok, describe(V.space(), u, n, V.space(), V.vacuum_key()));
  }
  return out;
}

CheckResult derivative_property(const Voa& V, const Space& M, const SampleOptions& opt) {
  CheckResult out{"L(-1)-derivative"};
  std::mt19937_64 rng(opt.seed + 1);
  const auto us = pool(V.space(), 0, opt.max_weight);
  const auto ws = pool(M, 0, opt.max_level);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const Key& u = draw(rng, us);
    const Key& w = draw(rng, ws);
    const int n = draw_mode(rng, opt);
    const State du = l_mode(V, -1, State(u));
    const State lhs = du.is_zero() ? State() : mode_apply(V, du, n, M, State(w));
    const State rhs = mode_apply(V, State(u), n - 1, M, State(w)) * Scalar(-n);
    out.record(lhs == rhs, describe(V.space(), u, n, M, w));
  }
  return out;
}

CheckResult commutator_identity(const Voa& V, const Space& M, const SampleOptions& opt) {
  CheckResult out{"commutator identity"};
  std::mt19937_64 rng(opt.seed + 2);
  const auto us = pool(V.space(), 1, opt.max_weight);
  const auto ws = pool(M, 0, opt.max_level);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const State u(draw(rng, us)), v(draw(rng, us));
    const Key& w = draw(rng, ws);
    const int m = draw_mode(rng, opt), n = draw_mode(rng, opt);
    const State W(w);
    const State lhs = mode_apply(V, u, m, M, mode_apply(V, v, n, M, W)) - mode_apply(V, v, n, M, mode_apply(V, u, m, M, W));
    State rhs;
    // u_i v vanishes for i >= wt u + wt v, so the sum is finite.
    const int top = level_of(u) + level_of(v);
    for (int i = 0; i <= top; ++i) {
      const Integer c = binomial(m, i);
      if (c == 0) continue;
      const State uv = mode_apply(V, u, i, v);
      if (uv.is_zero()) continue;
      for (const auto& [lvl, part] : split_levels(uv)) rhs.add_scaled(mode_apply(V, part, m + n - i, M, W), Scalar(c));
    }
    out.record(lhs == rhs, "u = " + render(V.space(), u) + ", v = " + render(V.space(), v) + ", m = " +
                               std::to_string(m) + ", n = " + std::to_string(n) + ", w = " + M.render(w));
  }
  return out;
}

CheckResult theta_equivariance(const FreeBosonVoa& V, const FreeBosonSpace& M, const SampleOptions& opt) {
  CheckResult out{"theta equivariance"};
  std::mt19937_64 rng(opt.seed + 3);
  const auto us = pool(V.space(), 0, opt.max_weight);
  const auto ws = pool(M, 0, opt.max_level);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const Key& u = draw(rng, us);
    const Key& w = draw(rng, ws);
    const int p = draw_mode(rng, opt);
    const State lhs = V.theta(mode_apply(V, State(u), p, M, State(w)));
    const State tw = V.theta(State(w));
    const auto target = V.space_of(tw.leading_key());
    const State rhs = mode_apply(V, V.theta(State(u)), p, *target, tw);
    out.record(lhs == rhs, describe(V.space(), u, p, M, w));
  }
  return out;
}

CheckResult theta_involution(const FreeBosonVoa& V, const SampleOptions& opt) {
  CheckResult out{"theta involution"};
  std::mt19937_64 rng(opt.seed + 4);
  for (const auto& space : V.registered()) {
    const auto ws = pool(*space, 0, opt.max_level);
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const Key& w = draw(rng, ws);
      out.record(V.theta(V.theta(State(w))) == State(w), "w = " + space->render(w));
    }
  }
  return out;
}

CheckResult phi_involution(const Voa& V, const SampleOptions& opt) {
  CheckResult out{"phi involution"};
  std::mt19937_64 rng(opt.seed + 5);
  const auto us = pool(V.space(), 0, opt.max_weight);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const State u(draw(rng, us));
    const State v(draw(rng, us));
    // A two-term combination exercises the split into homogeneous parts.
    const State x = u + v * Scalar(rng() % 5 + 1);
    out.record(phi(V, phi(V, x)) == x, "u = " + render(V.space(), x));
  }
  return out;
}

CheckResult certificate_reverification(const OSpanResult& span, const SampleOptions& opt) {
  CheckResult out{"certificate re-verification"};
  out.record(span.span.verify_certificates(span.generators), "row provenance of the O-span");
  std::mt19937_64 rng(opt.seed + 6);
  const auto rows = span.span.vectors();
  for (std::size_t s = 0; s < opt.samples && !rows.empty(); ++s) {
    // Random combinations of rows are members; their certificates must re-evaluate.
    State x;
    for (int t = 0; t < 3; ++t) x.add_scaled(draw(rng, rows), Scalar(static_cast<long>(rng() % 7) - 3));
    const auto cert = o_membership(x, span);
    out.record(cert.has_value() && cert->verified, "combination with " + std::to_string(x.size()) + " terms");
  }
  return out;
}

CheckResult reduce_idempotence(const Voa& V, const SampleOptions& opt) {
  CheckResult out{"reduce idempotence"};
  std::mt19937_64 rng(opt.seed + 7);
  const auto us = pool(V.space(), 0, opt.max_weight);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    std::vector<State> xs;
    const std::size_t count = 2 + rng() % 6;
    for (std::size_t i = 0; i < count; ++i) {
      State x;
      for (int t = 0; t < 3; ++t) x.add(draw(rng, us), Scalar(static_cast<long>(rng() % 5) - 2));
      xs.push_back(x);
    }
    const auto once = SubspaceBasis<Key>::reduce(xs);
    const auto twice = SubspaceBasis<Key>::reduce(once.vectors());
    out.record(once == twice && once.verify_certificates(xs), std::to_string(count) + " inputs");
  }
  return out;
}

}  // namespace voa
