#include "voa/zhu.hpp"

#include "voa/semisimple.hpp"

namespace voa {

namespace {

// Homogeneous components of u with their integer weights.
std::vector<std::pair<std::int64_t, State>> components(const Voa& V, const State& u) {
  std::vector<std::pair<std::int64_t, State>> out;
  for (auto& [lvl, comp] : split_levels(u)) {
    const Scalar w = weight(V.space(), comp);
    if (!is_integer(w)) throw Error(ErrorKind::NonIntegerWeight, "weight " + to_string(w));
    out.emplace_back(to_int64(w), comp);
  }
  return out;
}

// Res_z (1+z)^{a+shift} z^{-N-1} Y(u,z) v = sum_k C(a+shift,k) u_{k-N-1} v.
State residue(const Voa& V, const State& u, std::int64_t a, std::int64_t shift, std::int64_t N, const State& v) {
  State out;
  for (std::int64_t k = 0; k <= a + shift; ++k) {
    const Integer c = binomial(a + shift, k);
    if (c == 0) continue;
    out.add_scaled(mode_apply(V, u, k - N - 1, v), Scalar(c));
  }
  return out;
}

std::string label(const Space& S, const State& s) { return render(S, s); }

}  // namespace

AlgebraBasis full_basis(const Voa& V) {
  return [&V](int w) {
    std::vector<State> out;
    if (w < 0) return out;
    for (const auto& k : V.space().basis(w)) out.emplace_back(k);
    return out;
  };
}

AlgebraBasis theta_basis(const FreeBosonVoa& V, int sign) {
  return [&V, sign](int w) {
    if (w < 0) return std::vector<State>{};
    return fixed_subspace(V.lattice_space(), sign, w).vectors();
  };
}

State star_n(const Voa& V, const State& u, const State& v, int n) {
  State out;
  for (const auto& [a, comp] : components(V, u))
    for (int m = 0; m <= n; ++m)
      out.add_scaled(residue(V, comp, a, n, n + m, v), Scalar(sign_power(m) * binomial(m + n, n)));
  return out;
}

State circ_n(const Voa& V, const State& u, const State& v, int n) {
  State out;
  for (const auto& [a, comp] : components(V, u)) out += residue(V, comp, a, n, 2 * n + 1, v);
  return out;
}

State star_mpn(const Voa& V, const State& u, const State& v, int m, int p, int n) {
  State out;
  for (const auto& [a, comp] : components(V, u))
    for (int i = 0; i <= p; ++i) {
      const std::int64_t N = m + n - p + i;
      out.add_scaled(residue(V, comp, a, m, N, v), Scalar(sign_power(i) * binomial(N, i)));
    }
  return out;
}

State circ_mn(const Voa& V, const State& u, const State& v, int m, int n) {
  State out;
  for (const auto& [a, comp] : components(V, u)) out += residue(V, comp, a, m, n + m + 1, v);
  return out;
}

State phi(const Voa& V, const State& u) {
  State out;
  for (const auto& [a, comp] : components(V, u)) {
    State term = comp * Scalar(sign_power(a));
    for (unsigned j = 0; !term.is_zero(); ++j) {
      out.add_scaled(term, 1 / factorial(j));
      term = l_mode(V, 1, term);
    }
  }
  return out;
}

State o_apply(const Voa& V, const State& u, int t, const Space& M, const State& w) {
  State out;
  for (const auto& [a, comp] : components(V, u)) out += mode_apply(V, comp, a - 1 - t, M, w);
  return out;
}

Matrix o_matrix(const Voa& V, const State& u, int t, const ModuleInstance& M, int s) {
  const auto& src = M.level_basis(s);
  const std::size_t rows = s + t < 0 ? 0 : M.dimension(s + t);
  Matrix out(rows, src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const State img = o_apply(V, u, t, M.space(), src[j]);
    if (rows == 0) {
      if (!img.is_zero()) throw Error(ErrorKind::InvalidSpec, "o_t lands below level 0 in " + M.name());
      continue;
    }
    const auto c = M.coordinates(s + t, img);
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = c[i];
  }
  return out;
}

CompositionOutcome o_composition_check(const Voa& V, const State& u, const State& v, int m, int p, int n,
                                       const ModuleInstance& M) {
  CompositionOutcome out;
  const State prod = star_mpn(V, u, v, m, p, n);
  for (const auto& w : M.level_basis(m)) {
    ++out.checked;
    const State lhs = o_apply(V, u, n - p, M.space(), o_apply(V, v, p - m, M.space(), w));
    const State rhs = o_apply(V, prod, n - m, M.space(), w);
    if (lhs != rhs) {
      out.passed = false;
      out.counterexample = "w = " + render(M.space(), w) + ": lhs = " + render(M.space(), lhs) +
                           ", rhs = " + render(M.space(), rhs);
      break;
    }
  }
  return out;
}

std::vector<State> OSpanResult::rows_within(int D) const {
  return span.rows_with_pivot([D](const Key& k) { return k.level <= D; });
}

std::map<int, std::size_t> OSpanResult::dims_by_weight() const {
  std::map<int, std::size_t> out;
  for (int w = 0; w <= options.D; ++w) out[w] = 0;
  for (const auto& p : span.pivots())
    for (int w = std::max(p.level, 0); w <= options.D; ++w) ++out[w];
  return out;
}

OSpanResult ospan_generate(const Voa& V, const AlgebraBasis& basis, const OSpanOptions& options) {
  if (options.n < 0 || options.D < 0 || options.G < 0) throw Error(ErrorKind::InvalidConfig, "negative bound");
  OSpanResult out;
  out.options = options;
  const int n = options.n;
  const int m = options.m.value_or(n);
  const Space& S = V.space();

  auto add = [&](State g, std::string lbl) {
    if (out.generators.size() >= options.budget)
      throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(options.budget) + " generators");
    if (g.is_zero()) return;
    out.span.insert(g);
    out.generators.push_back(std::move(g));
    out.generator_labels.push_back(std::move(lbl));
  };

  std::vector<std::vector<State>> by_weight(options.G + 1);
  for (int w = 0; w <= options.G; ++w) by_weight[w] = basis(w);

  // Generators are produced in order of their largest weight.
  for (int top = 0; top <= options.G; ++top) {
    const int w = top - 1;
    if (w >= 0)
      for (const auto& u : by_weight[w]) {
        State g = l_mode(V, -1, u);
        g.add_scaled(u, Scalar(w + m - n));
        add(std::move(g), "L(-1)u+(L(0)+" + std::to_string(m - n) + ")u, u=" + label(S, u));
      }
    // u circ_m^n v has components of weight at most a + b + n + m + 1.
    for (int a = 0; a <= top; ++a) {
      const int b = top - n - m - 1 - a;
      if (b < 0) break;
      for (const auto& u : by_weight[a])
        for (const auto& v : by_weight[b])
          add(circ_mn(V, u, v, m, n), "u o v, u=" + label(S, u) + ", v=" + label(S, v));
    }
  }
  return out;
}

std::optional<Certificate> o_membership(const State& x, const OSpanResult& span) {
  auto cert = span.span.input_certificate(x);
  if (!cert) return std::nullopt;
  // Input indices count only inserted (nonzero) generators, matching `generators`.
  State sum;
  for (const auto& [i, c] : *cert) sum.add_scaled(span.generators.at(i), c);
  Certificate out{*cert, sum == x};
  if (!out.verified) return std::nullopt;
  return out;
}

Matrix action_image(const Voa& V, const State& v, const std::vector<ActionTarget>& targets) {
  std::size_t total = 0;
  for (const auto& t : targets)
    for (int s = 0; s <= t.max_level; ++s) total += t.module->dimension(s);
  Matrix out(total, total);
  std::size_t off = 0;
  for (const auto& t : targets)
    for (int s = 0; s <= t.max_level; ++s) {
      const Matrix block = o_matrix(V, v, 0, *t.module, s);
      for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) out(off + i, off + j) = block(i, j);
      off += block.rows();
    }
  return out;
}

ActionReport action_map(const Voa& V, const std::vector<State>& elements, const std::vector<ActionTarget>& targets,
                        bool close) {
  ActionReport out;
  for (const auto& t : targets)
    for (int s = 0; s <= t.max_level; ++s) {
      const std::size_t d = t.module->dimension(s);
      out.blocks.push_back(t.module->name() + "(" + std::to_string(s) + ")");
      out.block_dims.push_back(d);
      out.full_dimension += d * d;
    }
  out.elements = elements.size();
  SubspaceBasis<std::size_t> span(false);
  for (const auto& v : elements) {
    out.images.push_back(action_image(V, v, targets));
    span.insert(out.images.back().flatten());
  }
  out.rank = span.rank();
  if (close && !out.images.empty()) out.closure_dimension = close_image(out.images).dimension();
  return out;
}

std::vector<State> basis_up_to(const AlgebraBasis& basis, int D) {
  std::vector<State> out;
  for (int w = 0; w <= D; ++w)
    for (auto& s : basis(w)) out.push_back(std::move(s));
  return out;
}

}  // namespace voa
