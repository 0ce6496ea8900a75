#ifndef EDLOCI_VARSET_HPP
#define EDLOCI_VARSET_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace edloci {

/// Upper bound on the number of variables of any ring. The largest rings
/// built by the pipeline are 2n+1 variables for n <= 6 ambient coordinates.
inline constexpr std::size_t kMaxVars = 32;

/// Ordered list of distinct variable names. Cheap to copy (shared,
/// immutable storage); two VarSets compare equal when their names match.
class VarSet {
 public:
  VarSet();
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return data_->names.size(); }
  const std::string& name(std::size_t i) const { return data_->names[i]; }
  const std::vector<std::string>& names() const { return data_->names; }

  std::optional<std::size_t> index_of(const std::string& name) const;
  bool contains(const std::string& name) const { return index_of(name).has_value(); }

  /// Concatenation; throws UsageError on duplicate names.
  VarSet concat(const VarSet& other) const;

  /// A name not yet in this set, derived from `stem`.
  std::string fresh_name(const std::string& stem) const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.data_ == b.data_ || a.data_->names == b.data_->names;
  }

 private:
  struct Data {
    std::vector<std::string> names;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace edloci

#endif  // EDLOCI_VARSET_HPP
