#pragma once

// Products of the A_n(V) and A_{n,m}(V) theory, the anti-involution phi, the
// degree-shifting zero modes o_t, certified O_n(V) spans and action maps.

#include <functional>
#include <optional>

#include "voa/modules.hpp"

namespace voa {

/// Homogeneous basis of a vertex subalgebra at a given weight.
using AlgebraBasis = std::function<std::vector<State>(int weight)>;

AlgebraBasis full_basis(const Voa& V);
/// theta-fixed (sign = +1) or anti-fixed part of a lattice algebra.
AlgebraBasis theta_basis(const FreeBosonVoa& V, int sign);

State star_n(const Voa& V, const State& u, const State& v, int n);
State circ_n(const Voa& V, const State& u, const State& v, int n);
State star_mpn(const Voa& V, const State& u, const State& v, int m, int p, int n);
State circ_mn(const Voa& V, const State& u, const State& v, int m, int n);

/// phi(u) = e^{L(1)} (-1)^{L(0)} u.
State phi(const Voa& V, const State& u);

/// o_t(u) = u_{wt u - 1 - t} on each homogeneous component of u.
State o_apply(const Voa& V, const State& u, int t, const Space& M, const State& w);

/// Matrix of o_t(u) from module level s to level s + t in the module bases.
Matrix o_matrix(const Voa& V, const State& u, int t, const ModuleInstance& M, int s);

struct CompositionOutcome {
  bool passed = true;
  std::size_t checked = 0;
  std::string counterexample;
};

/// o_{n-p}(u) o_{p-m}(v) = o_{n-m}(u *_{m,p}^n v) on every basis vector of M(m).
CompositionOutcome o_composition_check(const Voa& V, const State& u, const State& v, int m, int p, int n,
                                       const ModuleInstance& M);

struct OSpanOptions {
  int n = 0;
  /// Weight bound of the reported intersection.
  int D = 6;
  /// Largest weight a generator may reach.
  int G = 10;
  /// Use O'_{n,m}: u circ_m^n v and L(-1)u + (L(0) + m - n)u.
  std::optional<int> m;
  std::size_t budget = 200000;
};

struct OSpanResult {
  OSpanOptions options;
  std::vector<State> generators;
  std::vector<std::string> generator_labels;
  SubspaceBasis<Key> span{true};
  /// Rows of the span whose pivot weight is <= D.
  std::vector<State> rows_within(int D) const;
  std::size_t dimension_within(int D) const { return rows_within(D).size(); }
  /// Dimension of the certified part of O ∩ V_{<=w} for each w <= D.
  std::map<int, std::size_t> dims_by_weight() const;
};

OSpanResult ospan_generate(const Voa& V, const AlgebraBasis& basis, const OSpanOptions& options);

struct Certificate {
  /// Combination of generators equal to the target.
  LinearCombination<std::size_t> coefficients;
  bool verified = false;
};

/// Certificate that x lies in the generated span, re-verified by evaluation;
/// nullopt means inconclusive.
std::optional<Certificate> o_membership(const State& x, const OSpanResult& span);

/// Module levels an action map acts on.
struct ActionTarget {
  std::shared_ptr<const ModuleInstance> module;
  int max_level = 0;
};

struct ActionReport {
  std::vector<std::string> blocks;
  std::vector<std::size_t> block_dims;
  std::size_t elements = 0;
  /// Rank of the linear map v -> image(v).
  std::size_t rank = 0;
  /// Block-diagonal image of each element.
  std::vector<Matrix> images;
  /// Dimension of the algebra generated by the images under composition.
  std::size_t closure_dimension = 0;
  /// Sum of squared block dimensions.
  std::size_t full_dimension = 0;
};

/// Block-diagonal matrix of o(v) on module levels 0..max_level of each target.
Matrix action_image(const Voa& V, const State& v, const std::vector<ActionTarget>& targets);
ActionReport action_map(const Voa& V, const std::vector<State>& elements, const std::vector<ActionTarget>& targets,
                        bool close = true);
/// All basis elements of weight <= D.
std::vector<State> basis_up_to(const AlgebraBasis& basis, int D);

}  // namespace voa
