#include "voa/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace voa {

namespace {

int mod_pos(int a, int n) { return ((a % n) + n) % n; }

std::vector<int> merge_desc(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin(), std::greater<>());
  return out;
}

std::vector<int> insert_desc(std::vector<int> modes, int code) {
  modes.insert(std::upper_bound(modes.begin(), modes.end(), code, std::greater<>()), code);
  return modes;
}

int modes_level(const std::vector<int>& modes) {
  int s = 0;
  for (int c : modes) s += osc_mode(c);
  return s;
}

Key monomial(std::vector<int> modes) {
  const int level = modes_level(modes);
  return Key{level, {}, std::move(modes)};
}

// Non-increasing code lists with total mode `rest` and codes <= max_code.
void oscillator_monomials(int colors, int rest, int max_code, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int code = max_code; code >= osc_code(1, 0); --code) {
    const int dir = osc_dir(code);
    const int mode = osc_mode(code);
    if (dir >= colors || mode > rest || mode == 0) continue;
    cur.push_back(code);
    oscillator_monomials(colors, rest - mode, code, cur, out);
    cur.pop_back();
  }
}

std::string rational_vector(const IntVec& num, int den) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (i) out << ',';
    out << make_scalar(num[i], den).get_str();
  }
  out << ')';
  return out.str();
}

}  // namespace

LatticeData LatticeData::with_default_cocycle(IntMat gram) {
  LatticeData data;
  const std::size_t d = gram.size();
  data.cocycle.assign(d, IntVec(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j) data.cocycle[i][j] = gram[i][j];
  data.gram = std::move(gram);
  return data;
}

LatticeCore::LatticeCore(int d) : d_(d), has_lattice_(false) {
  if (d < 1 || d > 8) throw Error(ErrorKind::InvalidSpec, "Heisenberg rank must be in 1..8");
  frame_.assign(d, std::vector<Scalar>(d, Scalar(0)));
  norms_.assign(d, Scalar(1));
  gram_frame_ = frame_;
  for (int k = 0; k < d; ++k) frame_[k][k] = gram_frame_[k][k] = 1;
}

LatticeCore::LatticeCore(LatticeData data) : d_(data.rank()), has_lattice_(true), data_(std::move(data)) {
  const auto& G = data_.gram;
  if (d_ < 1 || d_ > 4) throw Error(ErrorKind::InvalidLattice, "lattice rank must be in 1..4");
  for (const auto& row : G)
    if (static_cast<int>(row.size()) != d_) throw Error(ErrorKind::InvalidLattice, "Gram matrix is not square");
  Matrix gm(d_, d_);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) {
      if (G[i][j] != G[j][i]) throw Error(ErrorKind::InvalidLattice, "Gram matrix is not symmetric");
      gm(i, j) = G[i][j];
    }
  for (int i = 0; i < d_; ++i)
    if (G[i][i] % 2 != 0) throw Error(ErrorKind::InvalidLattice, "lattice is not even");
  for (int k = 1; k <= d_; ++k) {
    Matrix minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor(i, j) = G[i][j];
    if (minor.determinant() <= 0) throw Error(ErrorKind::InvalidLattice, "Gram matrix is not positive definite");
  }
  if (data_.cocycle.empty()) data_.cocycle = LatticeData::with_default_cocycle(G).cocycle;
  const auto& S = data_.cocycle;
  if (static_cast<int>(S.size()) != d_) throw Error(ErrorKind::InvalidCocycle, "cocycle table has wrong size");
  for (int i = 0; i < d_; ++i) {
    if (static_cast<int>(S[i].size()) != d_) throw Error(ErrorKind::InvalidCocycle, "cocycle table has wrong size");
    for (int j = 0; j < d_; ++j)
      if (mod_pos(S[i][j] + S[j][i] - G[i][j], 2) != 0) {
        throw Error(ErrorKind::InvalidCocycle, "eps(a,b) eps(b,a) != (-1)^(a,b) on basis pair (" +
                                                   std::to_string(i) + "," + std::to_string(j) + ")");
      }
  }
  const Scalar det = gm.determinant();
  n_ = static_cast<int>(to_int64(det));
  const Matrix inv = gm.inverse();
  adj_.assign(d_, IntVec(d_, 0));
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) adj_[i][j] = static_cast<int>(to_int64(inv(i, j) * det));
  build_roots();
  build_frame();
}

Scalar LatticeCore::pair(const IntVec& x, const IntVec& y) const {
  if (!has_lattice_) return 0;
  Integer s = 0;
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) s += Integer(x[i]) * data_.gram[i][j] * y[j];
  Scalar out(s, Integer(n_) * n_);
  out.canonicalize();
  return out;
}

Scalar LatticeCore::frame_pair(int k, const IntVec& numerators) const {
  if (!has_lattice_) return 0;
  Scalar s = 0;
  for (int i = 0; i < d_; ++i)
    if (numerators[i] != 0) s += gram_frame_[k][i] * numerators[i];
  return s / n_;
}

int LatticeCore::epsilon(const IntVec& a, const IntVec& b) const {
  long s = 0;
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) s += static_cast<long>(data_.cocycle[i][j]) * a[i] * b[j];
  return (s % 2 == 0) ? 1 : -1;
}

IntVec LatticeCore::numerators(const IntVec& coords) const {
  IntVec out(coords);
  for (auto& x : out) x *= n_;
  return out;
}

IntVec LatticeCore::lattice_coords(const IntVec& numerators) const {
  IntVec out(numerators);
  for (auto& x : out) {
    if (x % n_ != 0) throw Error(ErrorKind::InvalidSpec, "vector is not in the lattice");
    x /= n_;
  }
  return out;
}

bool LatticeCore::in_lattice(const IntVec& numerators) const {
  return std::all_of(numerators.begin(), numerators.end(), [this](int x) { return x % n_ == 0; });
}

bool LatticeCore::in_dual(const IntVec& numerators) const {
  for (int i = 0; i < d_; ++i) {
    long s = 0;
    for (int j = 0; j < d_; ++j) s += static_cast<long>(data_.gram[i][j]) * numerators[j];
    if (s % n_ != 0) return false;
  }
  return true;
}

IntVec LatticeCore::coset_rep(const IntVec& numerators) const {
  if (!has_lattice_) return {};
  IntVec r1(d_), r2(d_);
  for (int i = 0; i < d_; ++i) {
    r1[i] = mod_pos(numerators[i], n_);
    r2[i] = mod_pos(-numerators[i], n_);
  }
  if (r1 == r2 || r1 < r2) return r1;
  for (auto& x : r2) x = -x;
  return r2;
}

std::vector<IntVec> LatticeCore::points(const IntVec& rep, const Scalar& bound) const {
  std::vector<IntVec> out;
  if (!has_lattice_) {
    out.push_back({});
    return out;
  }
  // |gamma_i| <= sqrt(bound * (G^{-1})_ii); the box is widened by one and
  // every candidate is checked exactly.
  std::vector<int> lo(d_), hi(d_);
  for (int i = 0; i < d_; ++i) {
    const double b = std::sqrt(std::max(0.0, bound.get_d() * adj_[i][i] / n_)) + 1.0;
    const double shift = static_cast<double>(rep[i]) / n_;
    lo[i] = static_cast<int>(std::floor(-b - shift));
    hi[i] = static_cast<int>(std::ceil(b - shift));
  }
  IntVec a(d_);
  std::function<void(int)> rec = [&](int i) {
    if (i == d_) {
      IntVec g(d_);
      for (int t = 0; t < d_; ++t) g[t] = rep[t] + a[t] * n_;
      if (norm(g) <= bound) out.push_back(g);
      return;
    }
    for (a[i] = lo[i]; a[i] <= hi[i]; ++a[i]) rec(i + 1);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

const State& LatticeCore::creation_term(const IntVec& beta, int j) const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  auto& series = creation_cache_[beta];
  if (series.empty()) series.emplace_back(monomial({}));
  std::vector<Scalar> c(d_);
  for (int k = 0; k < d_; ++k) c[k] = frame_pair(k, beta) / norms_[k];
  while (static_cast<int>(series.size()) <= j) {
    // G_m = (1/m) sum_{n=1}^{m} beta(-n) G_{m-n}
    const int m = static_cast<int>(series.size());
    State next;
    for (int n = 1; n <= m; ++n)
      for (const auto& [key, coeff] : series[m - n])
        for (int k = 0; k < d_; ++k)
          if (c[k] != 0) next.add(monomial(insert_desc(key.modes, osc_code(n, k))), coeff * c[k]);
    next *= Scalar(1, m);
    series.push_back(std::move(next));
  }
  return series[j];
}

Key LatticeCore::oscillator_generator(int k) const {
  return Key{1, has_lattice_ ? IntVec(d_, 0) : IntVec{}, {osc_code(1, k)}};
}

Key LatticeCore::vacuum_key() const { return Key{0, has_lattice_ ? IntVec(d_, 0) : IntVec{}, {}}; }

void LatticeCore::build_roots() {
  std::vector<IntVec> positive;
  for (const auto& g : points(IntVec(d_, 0), Scalar(2))) {
    if (norm(g) != 2) continue;
    auto first = std::find_if(g.begin(), g.end(), [](int x) { return x != 0; });
    if (first != g.end() && *first > 0) positive.push_back(lattice_coords(g));
  }
  std::sort(positive.begin(), positive.end());
  auto add = [](const IntVec& x, const IntVec& y) {
    IntVec s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
    return s;
  };
  for (const auto& a : positive) {
    bool decomposable = false;
    for (const auto& b : positive)
      for (const auto& c : positive)
        if (add(b, c) == a) decomposable = true;
    (decomposable ? roots_.others : roots_.simple).push_back(a);
  }
  const std::size_t r = roots_.simple.size();
  if (r == 0) return;
  Matrix gs(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gs(i, j) = pair(numerators(roots_.simple[i]), numerators(roots_.simple[j]));
  const Matrix gsi = gs.inverse();
  for (const auto& o : roots_.others) {
    IntVec coeffs(r);
    for (std::size_t i = 0; i < r; ++i) {
      Scalar s = 0;
      for (std::size_t j = 0; j < r; ++j) s += gsi(i, j) * pair(numerators(roots_.simple[j]), numerators(o));
      coeffs[i] = static_cast<int>(to_int64(s));
    }
    roots_.others_in_simple.push_back(coeffs);
  }
}

void LatticeCore::build_frame() {
  auto inner = [this](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    Scalar s = 0;
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j) s += x[i] * data_.gram[i][j] * y[j];
    return s;
  };
  std::vector<std::vector<Scalar>> candidates;
  for (const auto& a : roots_.simple) candidates.emplace_back(a.begin(), a.end());
  for (int i = 0; i < d_; ++i) {
    std::vector<Scalar> e(d_, Scalar(0));
    e[i] = 1;
    candidates.push_back(e);
  }
  for (const auto& v : candidates) {
    if (static_cast<int>(frame_.size()) == d_) break;
    std::vector<Scalar> w = v;
    for (std::size_t f = 0; f < frame_.size(); ++f) {
      const Scalar proj = inner(v, frame_[f]) / norms_[f];
      for (int i = 0; i < d_; ++i) w[i] -= proj * frame_[f][i];
    }
    const Scalar nw = inner(w, w);
    if (nw == 0) continue;
    frame_.push_back(w);
    norms_.push_back(nw);
  }
  gram_frame_.assign(d_, std::vector<Scalar>(d_, Scalar(0)));
  for (int k = 0; k < d_; ++k)
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j) gram_frame_[k][i] += data_.gram[i][j] * frame_[k][j];
}

FreeBosonSpace::FreeBosonSpace(std::string name, std::shared_ptr<const LatticeCore> core, IntVec rep)
    : Space(std::move(name)), core_(std::move(core)), rep_(std::move(rep)), min_norm_(0), self_dual_(true) {
  if (!core_->has_lattice()) return;
  const auto pts = core_->points(rep_, core_->norm(rep_));
  min_norm_ = core_->norm(rep_);
  for (const auto& g : pts) min_norm_ = std::min(min_norm_, core_->norm(g));
  IntVec twice(rep_);
  for (auto& x : twice) x *= 2;
  self_dual_ = core_->in_lattice(twice);
  if (self_dual_) {
    const IntVec t = core_->lattice_coords(twice);
    if (core_->epsilon(t, t) != 1) {
      throw Error(ErrorKind::InvalidSpec, "eps(2 lambda, 2 lambda) = -1 needs a square root of -1");
    }
  }
}

int FreeBosonSpace::level_of(const IntVec& gamma, const std::vector<int>& modes) const {
  const Scalar lattice_part = core_->has_lattice() ? (core_->norm(gamma) - min_norm_) / 2 : Scalar(0);
  return modes_level(modes) + static_cast<int>(to_int64(lattice_part));
}

Key FreeBosonSpace::make_key(const IntVec& gamma, std::vector<int> modes) const {
  const int level = level_of(gamma, modes);
  return Key{level, gamma, std::move(modes)};
}

bool FreeBosonSpace::contains(const Key& k) const {
  if (!core_->has_lattice()) return k.lattice.empty();
  IntVec diff(k.lattice);
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= rep_[i];
  return static_cast<int>(k.lattice.size()) == core_->rank() && core_->in_lattice(diff);
}

std::vector<IntVec> FreeBosonSpace::coset_points(int max_level) const {
  return core_->points(rep_, min_norm_ + 2 * max_level);
}

std::vector<Key> FreeBosonSpace::basis(int level) const {
  std::vector<Key> out;
  if (level < 0) return out;
  for (const auto& g : coset_points(level)) {
    const int lattice_level = level_of(g, {});
    std::vector<std::vector<int>> monos;
    std::vector<int> cur;
    oscillator_monomials(core_->rank(), level - lattice_level, osc_code(level - lattice_level, core_->rank() - 1),
                         cur, monos);
    for (auto& m : monos) out.push_back(Key{level, g, std::move(m)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

State FreeBosonSpace::generator_mode(const Key& generator, std::int64_t p, const Key& w) const {
  const bool zero_point = std::all_of(generator.lattice.begin(), generator.lattice.end(), [](int x) { return x == 0; });
  if (zero_point && generator.modes.size() == 1 && osc_mode(generator.modes[0]) == 1) {
    return oscillator_mode(osc_dir(generator.modes[0]), p, w);
  }
  if (!zero_point && generator.modes.empty()) return atom_mode(generator.lattice, p, w);
  throw Error(ErrorKind::UnknownGenerator, "not a free-boson generator: " + render(generator));
}

State FreeBosonSpace::oscillator_mode(int k, std::int64_t p, const Key& w) const {
  State out;
  if (p < 0) {
    Key r = w;
    r.level += static_cast<int>(-p);
    r.modes = insert_desc(w.modes, osc_code(static_cast<int>(-p), k));
    out.add(r, 1);
  } else if (p == 0) {
    out.add(w, core_->frame_pair(k, w.lattice));
  } else {
    const int code = osc_code(static_cast<int>(p), k);
    auto it = std::find(w.modes.begin(), w.modes.end(), code);
    if (it == w.modes.end()) return out;
    const auto count = std::count(w.modes.begin(), w.modes.end(), code);
    Key r = w;
    r.level -= static_cast<int>(p);
    r.modes.erase(r.modes.begin() + (it - w.modes.begin()));
    out.add(r, Scalar(count * p) * core_->frame_norm(k));
  }
  return out;
}

State FreeBosonSpace::atom_mode(const IntVec& beta, std::int64_t p, const Key& w) const {
  // Y(e^b, z) = E^-(-b, z) E^+(-b, z) e_b z^{b(0)}; the coefficient of
  // z^{-p-1} pairs the k-th annihilation term with creation term
  // j = k - p - 1 - (b, gamma).
  const LatticeCore& core = *core_;
  const int d = core.rank();
  const IntVec& gamma = w.lattice;
  const std::int64_t bg = to_int64(core.pair(beta, gamma));
  IntVec shifted(gamma);
  IntVec gamma_l(d);
  for (int i = 0; i < d; ++i) {
    shifted[i] += beta[i];
    gamma_l[i] = gamma[i] - rep_[i];
  }
  const int sign = core.epsilon(core.lattice_coords(beta), core.lattice_coords(gamma_l));
  std::vector<Scalar> b(d);
  for (int k = 0; k < d; ++k) b[k] = core.frame_pair(k, beta);

  const int osc_level = modes_level(w.modes);
  // F_k = (1/k) sum_{n=1}^{k} (-b(n)) F_{k-n} applied to the monomial of w.
  std::vector<State> F;
  F.emplace_back(monomial(w.modes));
  State out;
  for (int k = 0; k <= osc_level; ++k) {
    if (k > 0) {
      State next;
      for (int n = 1; n <= k; ++n) {
        for (const auto& [key, coeff] : F[k - n]) {
          const auto& ms = key.modes;
          for (std::size_t pos = 0; pos < ms.size(); ++pos) {
            if (osc_mode(ms[pos]) != n) continue;
            if (pos > 0 && ms[pos - 1] == ms[pos]) continue;
            const int dir = osc_dir(ms[pos]);
            if (b[dir] == 0) continue;
            const auto count = std::count(ms.begin(), ms.end(), ms[pos]);
            std::vector<int> rest(ms);
            rest.erase(rest.begin() + static_cast<long>(pos));
            next.add(monomial(std::move(rest)), -coeff * Scalar(count * n) * b[dir]);
          }
        }
      }
      next *= Scalar(1, k);
      F.push_back(std::move(next));
    }
    const std::int64_t j = k - p - 1 - bg;
    if (j < 0 || F[k].is_zero()) continue;
    const State& G = core.creation_term(beta, static_cast<int>(j));
    for (const auto& [fk, fc] : F[k])
      for (const auto& [gk, gc] : G) out.add(make_key(shifted, merge_desc(gk.modes, fk.modes)), fc * gc * sign);
  }
  return out;
}

State FreeBosonSpace::theta(const Key& k) const {
  State out;
  const int sign = (k.modes.size() % 2 == 0) ? 1 : -1;
  if (!core_->has_lattice()) {
    out.add(k, sign);
    return out;
  }
  IntVec neg(k.lattice);
  for (auto& x : neg) x = -x;
  int factor = sign;
  if (self_dual_) {
    IntVec alpha(k.lattice), twice(rep_);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      alpha[i] -= rep_[i];
      twice[i] *= 2;
    }
    factor *= core_->epsilon(core_->lattice_coords(alpha), core_->lattice_coords(twice));
  }
  out.add(Key{k.level, neg, k.modes}, factor);
  return out;
}

State FreeBosonSpace::theta(const State& s) const {
  State out;
  for (const auto& [k, c] : s) out.add_scaled(theta(k), c);
  return out;
}

std::string FreeBosonSpace::render(const Key& k) const {
  std::ostringstream out;
  const char* letter = core_->has_lattice() ? "a" : "h";
  for (int code : k.modes) out << letter << osc_dir(code) + 1 << "(-" << osc_mode(code) << ")";
  if (core_->has_lattice()) {
    out << "e^" << rational_vector(k.lattice, core_->denominator());
  } else {
    out << "1";
  }
  return out.str();
}

FreeBosonVoa::FreeBosonVoa(std::shared_ptr<const LatticeCore> core) : core_(std::move(core)) {
  for (int k = 0; k < core_->rank(); ++k) {
    Key key = core_->vacuum_key();
    key.level = 2;
    key.modes = {osc_code(1, k), osc_code(1, k)};
    omega_.add(key, 1 / (2 * core_->frame_norm(k)));
  }
  const IntVec zero = core_->has_lattice() ? IntVec(core_->rank(), 0) : IntVec{};
  base_ = std::make_shared<FreeBosonSpace>(core_->has_lattice() ? "V_L" : "M(1)", core_, zero);
  spaces_.emplace(zero, base_);
}

std::string FreeBosonVoa::name() const {
  if (!core_->has_lattice()) return "M(1) rank " + std::to_string(core_->rank());
  std::ostringstream out;
  out << "V_L gram [";
  for (std::size_t i = 0; i < core_->data().gram.size(); ++i) {
    if (i) out << ';';
    for (std::size_t j = 0; j < core_->data().gram[i].size(); ++j) out << (j ? "," : "") << core_->data().gram[i][j];
  }
  out << ']';
  return out.str();
}

std::optional<Peel> FreeBosonVoa::peel(const Key& u) const {
  if (u.modes.empty()) return std::nullopt;
  const bool zero_point = std::all_of(u.lattice.begin(), u.lattice.end(), [](int x) { return x == 0; });
  if (zero_point && u.modes.size() == 1 && osc_mode(u.modes[0]) == 1) return std::nullopt;
  const int code = u.modes.front();
  Key rest{u.level - osc_mode(code), u.lattice, std::vector<int>(u.modes.begin() + 1, u.modes.end())};
  return Peel{core_->oscillator_generator(osc_dir(code)), -osc_mode(code), std::move(rest), Scalar(1)};
}

std::vector<Key> FreeBosonVoa::generators(int max_weight) const {
  std::vector<Key> out;
  if (max_weight < 1) return out;
  for (int k = 0; k < core_->rank(); ++k) out.push_back(core_->oscillator_generator(k));
  if (!core_->has_lattice()) return out;
  for (const auto& g : core_->points(IntVec(core_->rank(), 0), Scalar(2 * max_weight))) {
    if (std::all_of(g.begin(), g.end(), [](int x) { return x == 0; })) continue;
    out.push_back(base_->make_key(g, {}));
  }
  return out;
}

std::shared_ptr<const FreeBosonSpace> FreeBosonVoa::coset(const std::vector<Scalar>& lambda) const {
  if (!core_->has_lattice()) {
    if (!lambda.empty()) throw Error(ErrorKind::InvalidSpec, "Heisenberg algebra has no lattice cosets");
    return base_;
  }
  if (static_cast<int>(lambda.size()) != core_->rank()) throw Error(ErrorKind::InvalidSpec, "lambda has wrong rank");
  IntVec num(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const Scalar x = lambda[i] * core_->denominator();
    if (!is_integer(x)) throw Error(ErrorKind::InvalidSpec, "lambda is not in the dual lattice");
    num[i] = static_cast<int>(to_int64(x));
  }
  if (!core_->in_dual(num)) throw Error(ErrorKind::InvalidSpec, "lambda is not in the dual lattice");
  return coset_by_rep(core_->coset_rep(num));
}

std::shared_ptr<const FreeBosonSpace> FreeBosonVoa::coset_by_rep(const IntVec& rep) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = spaces_.find(rep);
  if (it != spaces_.end()) return it->second;
  auto space = std::make_shared<const FreeBosonSpace>("V_{L+" + rational_vector(rep, core_->denominator()) + "}",
                                                      core_, rep);
  spaces_.emplace(rep, space);
  return space;
}

std::shared_ptr<const FreeBosonSpace> FreeBosonVoa::space_of(const Key& k) const {
  const IntVec rep = core_->coset_rep(k.lattice);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = spaces_.find(rep);
  if (it == spaces_.end()) throw Error(ErrorKind::UnregisteredCoset, "no registered coset holds this key");
  return it->second;
}

std::vector<std::shared_ptr<const FreeBosonSpace>> FreeBosonVoa::registered() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<std::shared_ptr<const FreeBosonSpace>> out;
  for (const auto& [rep, s] : spaces_) out.push_back(s);
  return out;
}

State FreeBosonVoa::theta(const State& s) const {
  State out;
  for (const auto& [k, c] : s) out.add_scaled(space_of(k)->theta(k), c);
  return out;
}

Key FreeBosonVoa::lattice_key(const IntVec& coords) const { return base_->make_key(core_->numerators(coords), {}); }

State FreeBosonVoa::oscillator_state(const std::vector<std::pair<int, int>>& dir_mode, const IntVec& coords) const {
  std::vector<int> modes;
  for (const auto& [dir, mode] : dir_mode) modes.push_back(osc_code(mode, dir));
  std::sort(modes.begin(), modes.end(), std::greater<>());
  IntVec gamma = coords.empty() ? core_->vacuum_key().lattice : core_->numerators(coords);
  return State(base_->make_key(gamma, std::move(modes)));
}

std::shared_ptr<FreeBosonVoa> make_heisenberg(int d) {
  return std::make_shared<FreeBosonVoa>(std::make_shared<const LatticeCore>(d));
}

std::shared_ptr<FreeBosonVoa> make_lattice(const LatticeData& data) {
  return std::make_shared<FreeBosonVoa>(std::make_shared<const LatticeCore>(data));
}

SubspaceBasis<Key> fixed_subspace(const FreeBosonSpace& space, int sign, int level) {
  if (!space.self_dual()) throw Error(ErrorKind::InvalidSpec, "theta does not preserve " + space.name());
  SubspaceBasis<Key> out(false);
  for (const auto& k : space.basis(level)) {
    State v(k);
    v.add_scaled(space.theta(k), Scalar(sign));
    out.insert(v);
  }
  return out;
}

std::vector<IntVec> delta_set(const LatticeCore& core, const std::vector<Scalar>& lambda) {
  IntVec num(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) num[i] = static_cast<int>(to_int64(lambda[i] * core.denominator()));
  const Scalar target = core.norm(num);
  std::vector<IntVec> out;
  for (const auto& g : core.points(num, target)) {
    if (core.norm(g) != target) continue;
    IntVec a(g);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= num[i];
    out.push_back(core.lattice_coords(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Scalar>> dual_coset_reps(const LatticeCore& core) {
  std::vector<IntVec> reps;
  const int d = core.rank();
  const int n = core.denominator();
  IntVec x(d, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == d) {
      if (core.in_dual(x)) reps.push_back(core.coset_rep(x));
      return;
    }
    for (x[i] = 0; x[i] < n; ++x[i]) rec(i + 1);
  };
  rec(0);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<std::vector<Scalar>> out;
  for (const auto& r : reps) {
    std::vector<Scalar> v;
    for (int c : r) v.push_back(make_scalar(c, n));
    out.push_back(v);
  }
  return out;
}

std::vector<Integer> colored_partition_counts(int colors, int max) {
  std::vector<Integer> c(max + 1, Integer(0));
  c[0] = 1;
  for (int color = 0; color < colors; ++color)
    for (int part = 1; part <= max; ++part)
      for (int n = part; n <= max; ++n) c[n] += c[n - part];
  return c;
}

}  // namespace voa
