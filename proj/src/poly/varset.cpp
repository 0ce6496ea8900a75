#include "edloci/varset.hpp"

#include <algorithm>
#include <unordered_set>

#include "edloci/errors.hpp"

namespace edloci {

VarSet::VarSet() : data_(std::make_shared<const Data>()) {}

VarSet::VarSet(std::vector<std::string> names) {
  if (names.size() > kMaxVars) {
    throw UsageError("too many variables (" + std::to_string(names.size()) + " > " +
                     std::to_string(kMaxVars) + ")");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw UsageError("empty variable name");
    if (!seen.insert(n).second) throw UsageError("duplicate variable name '" + n + "'");
  }
  data_ = std::make_shared<const Data>(Data{std::move(names)});
}

std::optional<std::size_t> VarSet::index_of(const std::string& name) const {
  const auto& v = data_->names;
  auto it = std::find(v.begin(), v.end(), name);
  if (it == v.end()) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

VarSet VarSet::concat(const VarSet& other) const {
  std::vector<std::string> all = names();
  all.insert(all.end(), other.names().begin(), other.names().end());
  return VarSet(std::move(all));
}

std::string VarSet::fresh_name(const std::string& stem) const {
  if (!contains(stem)) return stem;
  for (int k = 1;; ++k) {
    std::string candidate = stem + "_" + std::to_string(k);
    if (!contains(candidate)) return candidate;
  }
}

}  // namespace edloci
