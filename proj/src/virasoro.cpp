#include "voa/virasoro.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace voa {

std::vector<std::vector<int>> partitions(int n, int min_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, max_part); part >= min_part; --part) {
      cur.push_back(part);
      rec(rest - part, part);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

Key virasoro_key(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  const int level = std::accumulate(parts.begin(), parts.end(), 0);
  return Key{level, {}, std::move(parts)};
}

VirasoroSpace::VirasoroSpace(std::string name, Scalar c, Scalar h, bool vacuum)
    : Space(std::move(name)), c_(std::move(c)), h_(std::move(h)), vacuum_(vacuum) {}

std::vector<Key> VirasoroSpace::basis(int level) const {
  std::vector<Key> out;
  for (auto& p : partitions(level, vacuum_ ? 2 : 1)) out.push_back(Key{level, {}, std::move(p)});
  std::sort(out.begin(), out.end());
  return out;
}

State VirasoroSpace::generator_mode(const Key& generator, std::int64_t p, const Key& w) const {
  if (generator != VirasoroVoa::omega_key()) {
    throw Error(ErrorKind::UnknownGenerator, "Virasoro spaces only know the conformal vector");
  }
  return apply_l(p - 1, w);
}

State VirasoroSpace::apply_l(std::int64_t m, const Key& w) const {
  if (w.level - m < 0) return {};
  const ModeRequestKey req{VirasoroVoa::omega_key(), m + 1, w};
  if (auto hit = memo().find(req)) return *hit;

  State out;
  const auto& parts = w.modes;
  if (parts.empty()) {
    if (m == 0) {
      out.add(w, h_);
    } else if (m < 0 && !(vacuum_ && m == -1)) {
      out.add(Key{static_cast<int>(-m), {}, {static_cast<int>(-m)}}, 1);
    }
  } else if (m < 0 && -m >= parts.front()) {
    Key k = w;
    k.level += static_cast<int>(-m);
    k.modes.insert(k.modes.begin(), static_cast<int>(-m));
    out.add(k, 1);
  } else {
    // L(m) L(-n1) R = L(-n1) L(m) R + (m + n1) L(m - n1) R + delta_{m,n1} c (m^3 - m)/12 R
    const int n1 = parts.front();
    Key rest{w.level - n1, {}, std::vector<int>(parts.begin() + 1, parts.end())};
    for (const auto& [k, c] : apply_l(m, rest)) out.add_scaled(apply_l(-n1, k), c);
    if (m + n1 != 0) out.add_scaled(apply_l(m - n1, rest), Scalar(m + n1));
    if (m == n1) out.add(rest, c_ * Scalar(m * m * m - m) / 12);
  }
  memo().store(req, out);
  return out;
}

std::string VirasoroSpace::render(const Key& k) const {
  std::ostringstream out;
  for (int part : k.modes) out << "L(-" << part << ")";
  out << (vacuum_ ? "1" : "v");
  return out.str();
}

VirasoroVoa::VirasoroVoa(Scalar c)
    : c_(c), space_(std::make_unique<VirasoroSpace>("V(" + c.get_str() + ")", c, Scalar(0), true)) {}

std::string VirasoroVoa::name() const { return "V(" + c_.get_str() + ")"; }

std::optional<Peel> VirasoroVoa::peel(const Key& u) const {
  if (u.modes.empty() || u == omega_key()) return std::nullopt;
  const int n1 = u.modes.front();
  Key rest{u.level - n1, {}, std::vector<int>(u.modes.begin() + 1, u.modes.end())};
  return Peel{omega_key(), 1 - n1, std::move(rest), Scalar(1)};
}

std::vector<Key> VirasoroVoa::generators(int max_weight) const {
  if (max_weight < 2) return {};
  return {omega_key()};
}

std::shared_ptr<VirasoroSpace> VirasoroVoa::verma(const Scalar& h) const {
  return std::make_shared<VirasoroSpace>("M(" + c_.get_str() + "," + h.get_str() + ")", c_, h, false);
}

std::shared_ptr<VirasoroVoa> make_virasoro(const Scalar& c) { return std::make_shared<VirasoroVoa>(c); }

}  // namespace voa
