#include "alde/var.hpp"

#include <mutex>
#include <unordered_map>
#include <vector>

#include "alde/error.hpp"

namespace alde {

namespace {

class Registry {
 public:
  Registry() {
    for (const char* name : {"t", "u", "n", "lam"}) add(name);
    for (int i = 1; i <= 5; ++i) add("x" + std::to_string(i));
    for (int i = 1; i <= 5; ++i) add("z" + std::to_string(i));
    for (const char* name : {"alpha", "beta", "s"}) add(name);
    for (int i = 0; i <= 4; ++i) add("a" + std::to_string(i));
    for (int i = 1; i <= 6; ++i) add("g" + std::to_string(i));
    add("eps");
  }

  std::uint8_t intern(std::string_view name) {
    std::lock_guard lock(mu_);
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    return add(std::string(name));
  }

  bool exists(std::string_view name) {
    std::lock_guard lock(mu_);
    return ids_.count(std::string(name)) != 0;
  }

  bool valid(std::size_t id) {
    std::lock_guard lock(mu_);
    return id < names_.size();
  }

  const std::string& name(std::uint8_t id) {
    std::lock_guard lock(mu_);
    return names_[id];
  }

 private:
  std::uint8_t add(std::string name) {
    if (names_.size() >= kMaxVars) throw DomainError("too many distinct variables (limit " + std::to_string(kMaxVars) + ")");
    if (name.empty()) throw ParseError("empty variable name");
    const auto id = static_cast<std::uint8_t>(names_.size());
    names_.push_back(name);
    ids_.emplace(std::move(name), id);
    return id;
  }

  std::mutex mu_;
  // names_ is append-only, so references handed out stay valid (deque-like use
  // is avoided by reserving up front).
  std::vector<std::string> names_ = [] {
    std::vector<std::string> v;
    v.reserve(kMaxVars);
    return v;
  }();
  std::unordered_map<std::string, std::uint8_t> ids_;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

Var Var::named(std::string_view name) { return Var(registry().intern(name)); }

bool Var::exists(std::string_view name) { return registry().exists(name); }

Var Var::from_id(std::size_t id) {
  if (!registry().valid(id)) throw DomainError("unknown variable id " + std::to_string(id));
  return Var(static_cast<std::uint8_t>(id));
}

const std::string& Var::name() const { return registry().name(id_); }

Var indexed_var(std::string_view stem, int index) {
  return Var::named(std::string(stem) + std::to_string(index));
}

}  // namespace alde
