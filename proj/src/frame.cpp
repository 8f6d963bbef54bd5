#include "voa/frame.hpp"

namespace voa {

FrameVectors::FrameVectors(std::shared_ptr<const FreeBosonVoa> vl) : vl_(std::move(vl)), d_(vl_->core().rank()) {
  if (!vl_->core().has_lattice()) throw Error(ErrorKind::InvalidSpec, "a lattice is required");
  if (d_ < 2) throw Error(ErrorKind::RankTooSmall, "rank 1 has no off-diagonal index pairs");
  minus_ = std::make_shared<ModuleInstance>("V_L^-", vl_->coset(std::vector<Scalar>(d_, Scalar(0))), -1);
}

std::vector<IntVec> FrameVectors::roots() const {
  const auto& rd = vl_->core().roots();
  std::vector<IntVec> out(rd.simple);
  out.insert(out.end(), rd.others.begin(), rd.others.end());
  return out;
}

Scalar FrameVectors::b(int i, int k) const {
  const auto& core = vl_->core();
  return core.frame_pair(k - 1, core.numerators(roots().at(i - 1))) / core.frame_norm(k - 1);
}

int FrameVectors::k_index(int i) const {
  for (int k = r(); k >= 1; --k)
    if (b(r() + i, k) != 0) return k;
  throw Error(ErrorKind::InvalidSpec, "root alpha_{r+" + std::to_string(i) + "} has no simple component");
}

State FrameVectors::S(int a, int b, int m, int n) const {
  return vl_->oscillator_state({{a - 1, m}, {b - 1, n}}) * (1 / vl_->core().frame_norm(b - 1));
}

namespace {

State series(const FrameVectors& s, int a, int b, std::initializer_list<std::pair<int, int>> terms, long scale = 1) {
  State out;
  for (const auto& [n, c] : terms) out.add_scaled(s.S(a, b, 1, n), Scalar(c * scale));
  return out;
}

void require_distinct(int a, int b) {
  if (a == b) throw Error(ErrorKind::InvalidSpec, "indices must differ");
}

}  // namespace

State FrameVectors::E_u(int a, int b) const {
  require_distinct(a, b);
  return series(*this, a, b, {{2, 5}, {3, 25}, {4, 36}, {5, 16}});
}

State FrameVectors::Ebar_u(int b, int a) const {
  require_distinct(a, b);
  return series(*this, a, b, {{1, 1}, {2, 14}, {3, 41}, {4, 44}, {5, 16}});
}

State FrameVectors::E_t(int a, int b) const {
  require_distinct(a, b);
  return series(*this, a, b, {{2, 3}, {3, 14}, {4, 19}, {5, 8}}, -16);
}

State FrameVectors::Ebar_t(int b, int a) const {
  require_distinct(a, b);
  return series(*this, a, b, {{2, 5}, {3, 18}, {4, 21}, {5, 8}}, -16);
}

State FrameVectors::Lambda(int a, int b) const {
  require_distinct(a, b);
  return series(*this, a, b, {{2, 45}, {3, 190}, {4, 240}, {5, 96}});
}

State FrameVectors::omega(int a) const {
  return vl_->oscillator_state({{a - 1, 1}, {a - 1, 1}}) * (1 / (2 * vl_->core().frame_norm(a - 1)));
}

State FrameVectors::root_oscillator(const IntVec& alpha) const {
  const auto& core = vl_->core();
  State out;
  for (int k = 0; k < d_; ++k)
    out.add_scaled(vl_->oscillator_state({{k, 1}}), core.frame_pair(k, core.numerators(alpha)) / core.frame_norm(k));
  return out;
}

State FrameVectors::omega_root(const IntVec& alpha) const {
  const State x = root_oscillator(alpha);
  const Scalar norm = vl_->core().norm(vl_->core().numerators(alpha));
  return mode_apply(*vl_, x, -1, x) * (1 / (2 * norm));
}

State FrameVectors::E_alpha(const IntVec& alpha) const {
  IntVec neg(alpha);
  for (auto& x : neg) x = -x;
  return State(vl_->lattice_key(alpha)) + State(vl_->lattice_key(neg));
}

State FrameVectors::E_u_diag(int a, int b) const { return star_n(*vl_, E_u(a, b), E_u(b, a), 0); }

std::vector<std::pair<std::string, State>> FrameVectors::catalogue() const {
  std::vector<std::pair<std::string, State>> out;
  auto idx = [](int a, int b) { return std::to_string(a) + std::to_string(b); };
  for (int a = 1; a <= d_; ++a) {
    out.emplace_back("omega_" + std::to_string(a), omega(a));
    for (int b = 1; b <= d_; ++b) {
      out.emplace_back("S_" + idx(a, b) + "(1,1)", S(a, b, 1, 1));
      if (a == b) continue;
      out.emplace_back("E^u_" + idx(a, b), E_u(a, b));
      out.emplace_back("Ebar^u_" + idx(b, a), Ebar_u(b, a));
      out.emplace_back("E^t_" + idx(a, b), E_t(a, b));
      out.emplace_back("Ebar^t_" + idx(b, a), Ebar_t(b, a));
      out.emplace_back("Lambda_" + idx(a, b), Lambda(a, b));
    }
  }
  const auto rs = roots();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    out.emplace_back("E^alpha_" + std::to_string(i + 1), E_alpha(rs[i]));
    out.emplace_back("omega_alpha_" + std::to_string(i + 1), omega_root(rs[i]));
  }
  return out;
}

std::vector<State> FrameVectors::minus_basis() const {
  std::vector<State> out;
  for (int k = 0; k < d_; ++k) out.push_back(vl_->oscillator_state({{k, 1}}));
  for (const auto& alpha : roots())
    out.push_back(o_apply(*vl_, E_alpha(alpha), 0, minus_->space(), root_oscillator(alpha)));
  return out;
}

MatrixUnits::MatrixUnits(const FrameVectors& fv, std::vector<ActionTarget> targets) : frame_(fv), targets_(std::move(targets)) {
  std::size_t off = 0;
  for (const auto& t : targets_) {
    offsets_.push_back(off);
    for (int s = 0; s <= t.max_level; ++s) off += t.module->dimension(s);
  }
  const int d = fv.d(), r = fv.r(), l = fv.l(), n = fv.size();
  const auto rs = fv.roots();
  const auto& core = fv.voa().core();
  units_.assign(n, std::vector<Matrix>(n));
  auto U = [this](int i, int j) -> Matrix& { return units_[i - 1][j - 1]; };

  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      if (a != b) U(a, b) = image(fv.E_u(a, b));
  for (int a = 1; a <= d; ++a) {
    const int b = a == 1 ? 2 : 1;
    U(a, a) = U(a, b) * U(b, a);
  }

  std::vector<Matrix> ealpha;
  for (const auto& alpha : rs) ealpha.push_back(image(fv.E_alpha(alpha)));
  auto eps = [&](const IntVec& alpha) { return Scalar(core.epsilon(alpha, alpha)); };

  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= d; ++j) U(j, d + i) = U(j, i) * ealpha[i - 1] * (1 / (4 * eps(rs[i - 1]) * fv.b(i, i)));
  for (int i = 1; i <= l; ++i) {
    const int k = fv.k_index(i);
    for (int j = 1; j <= d; ++j)
      U(j, d + r + i) = U(j, k) * ealpha[r + i - 1] * (1 / (4 * eps(rs[r + i - 1]) * fv.b(r + i, k)));
  }
  for (int i = 1; i <= r + l; ++i)
    for (int j = 1; j <= d; ++j) {
      Matrix sum = Matrix(U(1, 1).rows(), U(1, 1).cols());
      for (int k = 1; k <= r; ++k) {
        const Scalar c = fv.b(i, k);
        if (c != 0) sum = sum + ealpha[i - 1] * U(k, j) * c;
      }
      U(d + i, j) = sum;
    }
  for (int i = 1; i <= r + l; ++i)
    for (int j = 1; j <= r + l; ++j) U(d + i, d + j) = U(d + i, 1) * U(1, d + j);
}

}  // namespace voa
