#include "voa/modules.hpp"

namespace voa {

ModuleInstance::ModuleInstance(std::string name, std::shared_ptr<const Space> space)
    : name_(std::move(name)), space_(std::move(space)) {}

ModuleInstance::ModuleInstance(std::string name, std::shared_ptr<const FreeBosonSpace> space, int sign)
    : name_(std::move(name)), space_(space), boson_(std::move(space)), sign_(sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidSpec, "projection sign must be +1 or -1");
  if (!boson_->self_dual()) throw Error(ErrorKind::InvalidSpec, "theta does not preserve " + boson_->name());
  while (fixed_subspace(*boson_, sign_, shift_).rank() == 0) {
    if (++shift_ > 8) throw Error(ErrorKind::InvalidSpec, "empty theta-eigenspace in " + boson_->name());
  }
}

const ModuleInstance::Level& ModuleInstance::level(int lvl) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = levels_.find(lvl);
  if (it != levels_.end()) return *it->second;
  auto entry = std::make_unique<Level>();
  if (lvl >= 0) {
    if (sign_ == 0) {
      for (const auto& k : space_->basis(lvl)) entry->basis.emplace_back(k);
    } else {
      entry->basis = fixed_subspace(*boson_, sign_, lvl + shift_).vectors();
    }
  }
  for (const auto& b : entry->basis) entry->span.insert(b);
  return *levels_.emplace(lvl, std::move(entry)).first->second;
}

const std::vector<State>& ModuleInstance::level_basis(int lvl) const { return level(lvl).basis; }

void ModuleInstance::set_level_basis(int lvl, std::vector<State> basis) {
  const Level& old = level(lvl);
  auto entry = std::make_unique<Level>();
  for (const auto& b : basis) {
    if (!old.span.contains(b)) throw Error(ErrorKind::InvalidSpec, "basis vector outside the level");
    if (!entry->span.insert(b)) throw Error(ErrorKind::InvalidSpec, "basis vectors are dependent");
  }
  if (entry->span.rank() != old.span.rank()) throw Error(ErrorKind::InvalidSpec, "basis does not span the level");
  entry->basis = std::move(basis);
  std::lock_guard<std::mutex> lock(mu_);
  levels_[lvl] = std::move(entry);
}

std::vector<Scalar> ModuleInstance::coordinates(int lvl, const State& v) const {
  const Level& l = level(lvl);
  std::vector<Scalar> out(l.basis.size());
  if (v.is_zero()) return out;
  auto cert = l.span.input_certificate(v);
  if (!cert) throw Error(ErrorKind::InvalidSpec, "vector is not in level " + std::to_string(lvl) + " of " + name_);
  for (const auto& [i, c] : *cert) out[i] = c;
  return out;
}

std::vector<std::shared_ptr<ModuleInstance>> untwisted_plus_modules(const FreeBosonVoa& vl) {
  std::vector<std::shared_ptr<ModuleInstance>> out;
  const auto& core = vl.core();
  for (const auto& lambda : dual_coset_reps(core)) {
    auto space = vl.coset(lambda);
    if (space->self_dual()) {
      out.push_back(std::make_shared<ModuleInstance>(space->name() + "^+", space, 1));
      out.push_back(std::make_shared<ModuleInstance>(space->name() + "^-", space, -1));
    } else {
      // Keep one of each pair {lambda, -lambda}: the one with a nonnegative rep.
      bool nonneg = true;
      for (int x : space->rep()) nonneg = nonneg && x >= 0;
      if (nonneg) out.push_back(std::make_shared<ModuleInstance>(space->name(), space));
    }
  }
  return out;
}

std::vector<std::shared_ptr<ModuleInstance>> lattice_modules(const FreeBosonVoa& vl) {
  std::vector<std::shared_ptr<ModuleInstance>> out;
  for (const auto& lambda : dual_coset_reps(vl.core())) {
    auto space = vl.coset(lambda);
    out.push_back(std::make_shared<ModuleInstance>(space->name(), space));
  }
  return out;
}

}  // namespace voa
