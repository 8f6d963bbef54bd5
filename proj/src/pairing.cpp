#include "voa/pairing.hpp"

#include <algorithm>

#include "voa/zhu.hpp"

namespace voa {

namespace {

constexpr int kMaxPairingLevel = 64;

std::int64_t int_weight(const Voa& V, const State& u) {
  const Scalar w = weight(V.space(), u);
  if (!is_integer(w)) throw Error(ErrorKind::NonIntegerWeight, "weight " + to_string(w));
  return to_int64(w);
}

State combine(const std::vector<State>& basis, const std::vector<Scalar>& coords) {
  State out;
  for (std::size_t i = 0; i < coords.size(); ++i) out.add_scaled(basis[i], coords[i]);
  return out;
}

// Matrix of w -> u_q w from module level `from` to module level `to`.
Matrix mode_matrix(const Voa& V, const State& u, std::int64_t q, const ModuleInstance& M, int from, int to) {
  const auto& src = M.level_basis(from);
  Matrix out(M.dimension(to), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const State img = mode_apply(V, u, q, M.space(), src[j]);
    if (img.is_zero()) continue;
    const auto c = M.coordinates(to, img);
    for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
  }
  return out;
}

}  // namespace

State adjoint_mode(const Voa& V, const State& u, std::int64_t q, const Space& M, const State& w) {
  const std::int64_t a = int_weight(V, u);
  State out;
  State lu = u;
  for (std::int64_t j = 0; !lu.is_zero(); ++j) {
    out.add_scaled(mode_apply(V, lu, -q + 2 * a - j - 2, M, w), Scalar(sign_power(a)) / factorial(j));
    lu = l_mode(V, 1, lu);
  }
  return out;
}

int module_level(const ModuleInstance& M, const State& w) { return level_of(w) - M.shift(); }

std::vector<State> generator_states(const Voa& V, int max_weight) {
  std::vector<State> out;
  for (const auto& k : V.generators(max_weight)) out.emplace_back(k);
  return out;
}

Pairing::Pairing(const Voa& V, std::shared_ptr<const ModuleInstance> left, std::shared_ptr<const ModuleInstance> right,
                 std::optional<Matrix> bottom, bool reverse_peel)
    : V_(V), left_(std::move(left)), right_(std::move(right)), reverse_(reverse_peel) {
  const std::size_t dl = left_->dimension(0), dr = right_->dimension(0);
  if (bottom) {
    if (bottom->rows() != dl || bottom->cols() != dr) throw Error(ErrorKind::InvalidSpec, "bottom matrix has wrong shape");
    bottom_ = *bottom;
    return;
  }
  std::vector<LinearCombination<std::size_t>> rows;
  for (int w = 0; w <= 2; ++w)
    for (const auto& k : V.space().basis(w)) {
      const State u(k);
      const Matrix ol = o_matrix(V, u, 0, *left_, 0);
      const Matrix orr = o_matrix(V, phi(V, u), 0, *right_, 0);
      for (std::size_t a = 0; a < dl; ++a)
        for (std::size_t b = 0; b < dr; ++b) {
          LinearCombination<std::size_t> r;
          for (std::size_t c = 0; c < dl; ++c) r.add(c * dr + b, ol(c, a));
          for (std::size_t c = 0; c < dr; ++c) r.add(a * dr + c, -orr(c, b));
          if (!r.is_zero()) rows.push_back(r);
        }
    }
  std::vector<std::size_t> columns(dl * dr);
  for (std::size_t i = 0; i < columns.size(); ++i) columns[i] = i;
  const auto sol = kernel(rows, columns).vectors();
  if (sol.size() != 1)
    throw Error(ErrorKind::InvalidSpec, "invariant bottom pairing space has dimension " + std::to_string(sol.size()));
  // Kernel rows are normalized at their largest index; rescale at the smallest.
  const Scalar first = sol[0].begin()->second;
  bottom_ = Matrix(dl, dr);
  for (const auto& [i, c] : sol[0]) bottom_(i / dr, i % dr) = c / first;
}

const Matrix& Pairing::gram(int level) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = grams_.find(level);
    if (it != grams_.end()) return it->second;
  }
  Matrix g = compute_gram(level);
  std::lock_guard<std::mutex> lock(mu_);
  return grams_.emplace(level, std::move(g)).first->second;
}

Matrix Pairing::adjoint_matrix(const State& g, std::int64_t q, int from, int to) const {
  const auto& src = right_->level_basis(from);
  Matrix out(right_->dimension(to), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const State img = adjoint_mode(V_, g, q, right_->space(), src[j]);
    if (img.is_zero()) continue;
    const auto c = right_->coordinates(to, img);
    for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
  }
  return out;
}

Matrix Pairing::compute_gram(int level) const {
  if (level < 0) return Matrix();
  if (level > kMaxPairingLevel) throw Error(ErrorKind::UnboundedRecursion, "pairing level " + std::to_string(level));
  if (level == 0) return bottom_;

  const auto& lbasis = left_->level_basis(level);
  const std::size_t dr = right_->dimension(level);
  Matrix out(lbasis.size(), dr);
  if (lbasis.empty() || dr == 0) return out;

  // Words g_j x with x a left basis vector k levels down, spanning this level.
  struct Word {
    std::size_t gen;
    int k;
    std::size_t x;
  };
  std::vector<State> gens = generator_states(V_, level + 2);
  std::vector<int> ks;
  for (int k = 1; k <= level; ++k) ks.push_back(k);
  if (reverse_) {
    std::reverse(gens.begin(), gens.end());
    std::reverse(ks.begin(), ks.end());
  }
  SubspaceBasis<Key> span(true);
  std::vector<Word> words;
  for (int k : ks) {
    for (std::size_t g = 0; g < gens.size() && span.rank() < lbasis.size(); ++g) {
      const std::int64_t a = int_weight(V_, gens[g]);
      const auto& lower = left_->level_basis(level - k);
      for (std::size_t x = 0; x < lower.size() && span.rank() < lbasis.size(); ++x) {
        const State w = mode_apply(V_, gens[g], a - 1 - k, left_->space(), lower[x]);
        if (w.is_zero()) continue;
        span.insert(w);
        words.push_back({g, k, x});
      }
    }
  }
  if (span.rank() < lbasis.size())
    throw Error(ErrorKind::InvalidSpec, "level " + std::to_string(level) + " of " + left_->name() +
                                            " is not generated from lower levels");

  std::map<std::pair<std::size_t, int>, Matrix> adjoints;
  for (std::size_t i = 0; i < lbasis.size(); ++i) {
    const auto cert = span.input_certificate(lbasis[i]);
    if (!cert) throw Error(ErrorKind::InvalidSpec, "left basis vector outside the word span");
    for (const auto& [wi, c] : *cert) {
      const Word& wd = words[wi];
      auto key = std::make_pair(wd.gen, wd.k);
      auto it = adjoints.find(key);
      if (it == adjoints.end()) {
        const std::int64_t a = int_weight(V_, gens[wd.gen]);
        it = adjoints.emplace(key, adjoint_matrix(gens[wd.gen], a - 1 - wd.k, level, level - wd.k)).first;
      }
      const Matrix& lower = gram(level - wd.k);
      const Matrix& A = it->second;
      for (std::size_t col = 0; col < dr; ++col) {
        Scalar s = 0;
        for (std::size_t r = 0; r < A.rows(); ++r)
          if (lower(wd.x, r) != 0 && A(r, col) != 0) s += lower(wd.x, r) * A(r, col);
        out(i, col) += c * s;
      }
    }
  }
  return out;
}

Scalar Pairing::pair(const State& wl, const State& wr) const {
  if (wl.is_zero() || wr.is_zero()) return 0;
  const int n = module_level(*left_, wl);
  if (n != module_level(*right_, wr)) return 0;
  const auto x = left_->coordinates(n, wl);
  const auto y = right_->coordinates(n, wr);
  const Matrix& G = gram(n);
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) s += x[i] * G(i, j) * y[j];
  }
  return s;
}

bool invariance_holds(const Pairing& P, const Voa& V, const State& u, std::int64_t q, const State& wl, const State& wr) {
  const Scalar lhs = P.pair(mode_apply(V, u, q, P.left().space(), wl), wr);
  const Scalar rhs = P.pair(wl, adjoint_mode(V, u, q, P.right().space(), wr));
  return lhs == rhs;
}

InvarianceOutcome invariance_suite(const Pairing& P, const Voa& V, const std::vector<State>& elements, int max_level) {
  InvarianceOutcome out;
  for (const auto& u : elements) {
    const std::int64_t a = int_weight(V, u);
    for (int n = 0; n <= max_level; ++n)
      for (int m = 0; m <= max_level; ++m) {
        // u_q maps left level n to level m.
        const std::int64_t q = a - 1 - (m - n);
        for (const auto& wl : P.left().level_basis(n)) {
          if (mode_apply(V, u, q, P.left().space(), wl).is_zero()) continue;
          for (const auto& wr : P.right().level_basis(m)) {
            ++out.checked;
            if (!invariance_holds(P, V, u, q, wl, wr)) {
              out.passed = false;
              out.counterexample = "u = " + render(V.space(), u) + ", q = " + std::to_string(q) +
                                   ", w' = " + render(P.left().space(), wl) + ", w = " + render(P.right().space(), wr);
              return out;
            }
          }
        }
      }
  }
  return out;
}

SubspaceBasis<Key> omega_n(const Voa& V, const ModuleInstance& M, int n, int level) {
  const auto& basis = M.level_basis(level);
  std::vector<LinearCombination<std::size_t>> rows;
  for (const auto& g : generator_states(V, 2 * level + 2)) {
    const std::int64_t a = int_weight(V, g);
    for (int k = n + 1; k <= level; ++k) {
      const Matrix A = mode_matrix(V, g, a - 1 + k, M, level, level - k);
      for (std::size_t r = 0; r < A.rows(); ++r) {
        LinearCombination<std::size_t> row;
        for (std::size_t c = 0; c < A.cols(); ++c) row.add(c, A(r, c));
        if (!row.is_zero()) rows.push_back(row);
      }
    }
  }
  std::vector<std::size_t> columns(basis.size());
  for (std::size_t i = 0; i < columns.size(); ++i) columns[i] = i;
  SubspaceBasis<Key> out(false);
  for (const auto& x : kernel(rows, columns).vectors()) {
    State s;
    for (const auto& [i, c] : x) s.add_scaled(basis[i], c);
    out.insert(s);
  }
  return out;
}

bool singular_check(const Voa& V, const ModuleInstance& M, const State& w) {
  if (w.is_zero()) return false;
  const int level = module_level(M, w);
  if (level <= 0) return false;
  for (const auto& g : generator_states(V, 2 * level + 2)) {
    const std::int64_t a = int_weight(V, g);
    for (int k = 1; k <= level; ++k)
      if (!mode_apply(V, g, a - 1 + k, M.space(), w).is_zero()) return false;
  }
  return true;
}

std::map<int, SubspaceBasis<Key>> generated_submodule(const Voa& V, const ModuleInstance& M,
                                                      const std::vector<State>& seeds, int max_level) {
  std::map<int, SubspaceBasis<Key>> out;
  for (int l = 0; l <= max_level; ++l) out.emplace(l, SubspaceBasis<Key>(false));
  std::vector<std::pair<int, State>> queue;
  auto offer = [&](const State& s) {
    if (s.is_zero()) return;
    const int l = module_level(M, s);
    if (l < 0 || l > max_level) return;
    if (out.at(l).insert(s)) queue.emplace_back(l, s);
  };
  for (const auto& s : seeds) offer(s);
  const auto gens = generator_states(V, 2 * max_level + 2);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [l, s] = queue[i];
    for (const auto& g : gens) {
      const std::int64_t a = int_weight(V, g);
      for (int target = 0; target <= max_level; ++target) offer(mode_apply(V, g, a - 1 - (target - l), M.space(), s));
    }
  }
  return out;
}

std::vector<std::size_t> GramReport::radical_dims() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels) out.push_back(l.radical_dimension);
  return out;
}

GramReport radical(const Pairing& P, const Voa& V, int max_level) {
  GramReport out;
  const ModuleInstance& M = P.right();
  std::map<int, SubspaceBasis<Key>> rad;
  std::vector<State> singular;
  for (int l = 0; l <= max_level; ++l) {
    GramLevel gl;
    gl.level = l;
    gl.gram = P.gram(l);
    gl.determinant = gl.gram.rows() == 0 ? Scalar(1) : gl.gram.determinant();
    SubspaceBasis<Key> span(false);
    for (const auto& x : gl.gram.kernel()) {
      const State s = combine(M.level_basis(l), x);
      gl.radical.push_back(s);
      span.insert(s);
    }
    gl.radical_dimension = span.rank();
    if (l > 0)
      for (const auto& s : omega_n(V, M, 0, l).vectors())
        if (span.contains(s)) gl.singular.push_back(s);
    singular.insert(singular.end(), gl.singular.begin(), gl.singular.end());
    rad.emplace(l, std::move(span));
    out.levels.push_back(std::move(gl));
  }

  const auto gens = generator_states(V, 2 * max_level + 2);
  for (int l = 0; l <= max_level && out.submodule_stable; ++l)
    for (const auto& r : rad.at(l).vectors())
      for (const auto& g : gens) {
        const std::int64_t a = int_weight(V, g);
        for (int target = 0; target <= max_level; ++target) {
          const State img = mode_apply(V, g, a - 1 - (target - l), M.space(), r);
          if (!img.is_zero() && !rad.at(target).contains(img)) out.submodule_stable = false;
        }
      }

  const auto sub = generated_submodule(V, M, singular, max_level);
  for (int l = 0; l <= max_level; ++l)
    if (!(sub.at(l) == rad.at(l))) out.matches_singular_submodule = false;
  return out;
}

Matrix shapovalov_gram(const VirasoroSpace& M, int level) {
  const auto keys = M.basis(level);
  const Key bottom = M.basis(0).front();
  Matrix G(keys.size(), keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = 0; j < keys.size(); ++j) {
      State w(keys[j]);
      for (int part : keys[i].modes) {
        State next;
        for (const auto& [k, c] : w) next.add_scaled(M.apply_l(part, k), c);
        w = std::move(next);
      }
      G(i, j) = w.coefficient(bottom);
    }
  return G;
}

}  // namespace voa
