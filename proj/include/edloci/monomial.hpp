#ifndef EDLOCI_MONOMIAL_HPP
#define EDLOCI_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "edloci/varset.hpp"

namespace edloci {

/// Exponent vector over a fixed number of variables. Entries past size()
/// are always zero, which lets comparisons run over the whole array.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, std::span<const int> exponents);

  std::size_t size() const { return nvars_; }
  Exponent operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, int e);

  std::uint32_t degree() const { return degree_; }
  /// Bit i set iff variable i (mod 32) occurs; fast divisibility rejection.
  std::uint32_t support_mask() const { return mask_; }
  bool is_one() const { return degree_ == 0; }

  /// True iff this divides `other`.
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; caller guarantees b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b) { return (a.mask_ & b.mask_) == 0 && disjoint(a, b); }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const;

  /// "x1^2*x3" with the given names; "1" for the unit monomial.
  std::string to_string(const VarSet& vars) const;

 private:
  static bool disjoint(const Monomial& a, const Monomial& b);
  void refresh();

  std::array<Exponent, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
  std::uint32_t mask_ = 0;
  std::uint8_t nvars_ = 0;
};

enum class Ordering { kLess = -1, kEqual = 0, kGreater = 1 };

/// lex, grevlex, or a two-block elimination order whose first `split`
/// variables form the elimination block. The elimination block is compared
/// first, so any monomial containing an eliminated variable dominates every
/// monomial free of them.
class MonomialOrder {
 public:
  enum class Kind { kLex, kGrevlex, kBlock };

  static MonomialOrder lex() { return MonomialOrder(Kind::kLex, 0, Kind::kLex, Kind::kLex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::kGrevlex, 0, Kind::kGrevlex, Kind::kGrevlex); }
  /// Both sub-orders must be kLex or kGrevlex.
  static MonomialOrder block(std::size_t split, Kind eliminated = Kind::kGrevlex,
                             Kind retained = Kind::kGrevlex);

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }
  Kind eliminated_kind() const { return first_; }
  Kind retained_kind() const { return second_; }

  /// Throws UsageError when a and b have different lengths.
  Ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Ordering::kGreater; }

  /// True when every monomial order comparison is degree-compatible
  /// (needed for homogeneous fast paths).
  bool is_graded() const { return kind_ == Kind::kGrevlex; }

  std::string name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.split_ == b.split_ && a.first_ == b.first_ && a.second_ == b.second_;
  }

 private:
  MonomialOrder(Kind kind, std::size_t split, Kind first, Kind second)
      : kind_(kind), split_(split), first_(first), second_(second) {}

  Kind kind_;
  std::size_t split_;
  Kind first_;
  Kind second_;
};

/// Free-function form of MonomialOrder::compare.
inline Ordering monomial_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  return ord.compare(a, b);
}

}  // namespace edloci

#endif  // EDLOCI_MONOMIAL_HPP
