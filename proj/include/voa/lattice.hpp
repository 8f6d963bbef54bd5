#pragma once

// Free bosons: the Heisenberg algebra M(1) and lattice algebras V_L with
// their coset modules V_{L+lambda}, the involution theta and eigenspaces.
//
// Oscillators are taken along a rational orthogonal frame a'_1..a'_d of h
// (Gram-Schmidt of the simple roots of L_2 followed by the lattice basis) with
// norms n_k = (a'_k, a'_k). Lattice points are integer numerators over
// N = |det G| in lattice-basis coordinates.

#include <deque>
#include <map>
#include <memory>
#include <mutex>

#include "voa/engine.hpp"

namespace voa {

using IntVec = std::vector<int>;
using IntMat = std::vector<IntVec>;

struct LatticeData {
  IntMat gram;
  /// Cocycle exponents: eps(a, b) = (-1)^{sum s_ij a_i b_j}.
  IntMat cocycle;

  /// s_ij = G_ij for i > j and 0 otherwise.
  static LatticeData with_default_cocycle(IntMat gram);
  int rank() const { return static_cast<int>(gram.size()); }
};

/// Positive roots of L_2 (first nonzero coordinate positive), split into
/// simple roots alpha_1..alpha_r and the rest alpha_{r+1}..alpha_{r+l}.
struct RootData {
  std::vector<IntVec> simple;
  std::vector<IntVec> others;
  /// Coefficients of each alpha_{r+i} in the simple roots (nonnegative).
  std::vector<IntVec> others_in_simple;
};

class LatticeCore {
 public:
  /// Heisenberg of rank d with orthonormal frame and no lattice.
  explicit LatticeCore(int d);
  explicit LatticeCore(LatticeData data);

  int rank() const { return d_; }
  bool has_lattice() const { return has_lattice_; }
  int denominator() const { return n_; }
  const LatticeData& data() const { return data_; }
  const RootData& roots() const { return roots_; }

  /// Frame vector a'_k in lattice-basis coordinates and its norm.
  const std::vector<Scalar>& frame(int k) const { return frame_[k]; }
  const Scalar& frame_norm(int k) const { return norms_[k]; }

  /// (a'_k, gamma) for gamma given by numerators.
  Scalar frame_pair(int k, const IntVec& numerators) const;
  /// (x, y) for points given by numerators.
  Scalar pair(const IntVec& x, const IntVec& y) const;
  Scalar norm(const IntVec& x) const { return pair(x, x); }
  /// eps(a, b) for integer lattice coordinates.
  int epsilon(const IntVec& a, const IntVec& b) const;

  /// Numerators of an integer lattice vector.
  IntVec numerators(const IntVec& coords) const;
  /// Integer coordinates of a numerator vector lying in L.
  IntVec lattice_coords(const IntVec& numerators) const;
  bool in_lattice(const IntVec& numerators) const;
  bool in_dual(const IntVec& numerators) const;
  /// Canonical representative (numerators) of the coset of gamma.
  IntVec coset_rep(const IntVec& numerators) const;

  /// All points gamma in L + rep with |gamma|^2 <= bound.
  std::vector<IntVec> points(const IntVec& rep, const Scalar& bound) const;

  /// G_j for the creation series of e^beta: sum of oscillator monomials.
  /// References stay valid for the lifetime of the core.
  const State& creation_term(const IntVec& beta_numerators, int j) const;

  Key oscillator_generator(int k) const;
  Key vacuum_key() const;

 private:
  void build_frame();
  void build_roots();

  int d_;
  bool has_lattice_;
  LatticeData data_;
  int n_ = 1;
  IntMat adj_;
  std::vector<std::vector<Scalar>> frame_;
  std::vector<Scalar> norms_;
  std::vector<std::vector<Scalar>> gram_frame_;
  RootData roots_;

  mutable std::mutex cache_mu_;
  mutable std::map<IntVec, std::deque<State>> creation_cache_;
};

/// V_{L+lambda} (lambda = 0 gives V_L, or M(1) when there is no lattice).
class FreeBosonSpace : public Space {
 public:
  FreeBosonSpace(std::string name, std::shared_ptr<const LatticeCore> core, IntVec rep);

  Scalar weight_offset() const override { return min_norm_ / 2; }
  std::vector<Key> basis(int level) const override;
  State generator_mode(const Key& generator, std::int64_t p, const Key& w) const override;
  std::string render(const Key& k) const override;

  const LatticeCore& core() const { return *core_; }
  const IntVec& rep() const { return rep_; }
  /// True when 2 lambda lies in L, so theta preserves this space.
  bool self_dual() const { return self_dual_; }
  /// Level of oscillator monomial `modes` tensored with e^gamma.
  int level_of(const IntVec& gamma, const std::vector<int>& modes) const;
  Key make_key(const IntVec& gamma, std::vector<int> modes) const;
  bool contains(const Key& k) const;

  /// theta on basis keys; the image lies in V_{L-lambda}.
  State theta(const Key& k) const;
  State theta(const State& s) const;

  /// Points gamma of the coset at lattice level <= level (the level of e^gamma).
  std::vector<IntVec> coset_points(int max_level) const;

 private:
  State oscillator_mode(int k, std::int64_t p, const Key& w) const;
  State atom_mode(const IntVec& beta, std::int64_t p, const Key& w) const;

  std::shared_ptr<const LatticeCore> core_;
  IntVec rep_;
  Scalar min_norm_;
  bool self_dual_;
};

class FreeBosonVoa : public Voa {
 public:
  explicit FreeBosonVoa(std::shared_ptr<const LatticeCore> core);

  std::string name() const override;
  const Space& space() const override { return *base_; }
  std::optional<Peel> peel(const Key& u) const override;
  Key vacuum_key() const override { return core_->vacuum_key(); }
  State omega() const override { return omega_; }
  Scalar central_charge() const override { return Scalar(core_->rank()); }
  std::vector<Key> generators(int max_weight) const override;

  const LatticeCore& core() const { return *core_; }
  const FreeBosonSpace& lattice_space() const { return *base_; }

  /// Registers (or returns) the module V_{L+lambda}; lambda given as a
  /// rational vector in lattice-basis coordinates.
  std::shared_ptr<const FreeBosonSpace> coset(const std::vector<Scalar>& lambda) const;
  std::shared_ptr<const FreeBosonSpace> coset_by_rep(const IntVec& rep) const;
  /// Registered space holding the given key; UnregisteredCoset otherwise.
  std::shared_ptr<const FreeBosonSpace> space_of(const Key& k) const;
  std::vector<std::shared_ptr<const FreeBosonSpace>> registered() const;

  /// theta on a state of any registered coset.
  State theta(const State& s) const;

  /// e^gamma as a key of V_L for integer coordinates gamma.
  Key lattice_key(const IntVec& coords) const;
  /// a'_k(-n) as an oscillator code.
  State oscillator_state(const std::vector<std::pair<int, int>>& dir_mode, const IntVec& coords = {}) const;

 private:
  std::shared_ptr<const LatticeCore> core_;
  State omega_;
  std::shared_ptr<const FreeBosonSpace> base_;
  mutable std::mutex mu_;
  mutable std::map<IntVec, std::shared_ptr<const FreeBosonSpace>> spaces_;
};

std::shared_ptr<FreeBosonVoa> make_heisenberg(int d);
/// Validates evenness, positive definiteness and the cocycle condition.
std::shared_ptr<FreeBosonVoa> make_lattice(const LatticeData& data);

/// theta-eigenspace of a self-dual coset space at one level.
SubspaceBasis<Key> fixed_subspace(const FreeBosonSpace& space, int sign, int level);

/// Delta(lambda) = {alpha in L : |lambda + alpha|^2 = |lambda|^2}, integer coords.
std::vector<IntVec> delta_set(const LatticeCore& core, const std::vector<Scalar>& lambda);

/// Canonical coset representatives of L°/L as rational vectors.
std::vector<std::vector<Scalar>> dual_coset_reps(const LatticeCore& core);

/// Number of d-colored partitions of each n <= max (generating function).
std::vector<Integer> colored_partition_counts(int colors, int max);

}  // namespace voa
