#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace equiknot {

/// Laurent polynomial in one variable with exact 64-bit integer
/// coefficients. Zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return monomial(0, 1); }
  static Laurent monomial(int exponent, std::int64_t coeff);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t coeff(int exponent) const;
  void set_coeff(int exponent, std::int64_t value);
  void add_coeff(int exponent, std::int64_t value);

  int min_exponent() const;  // throws on zero polynomial
  int max_exponent() const;
  int span() const { return is_zero() ? 0 : max_exponent() - min_exponent(); }

  /// Substitutes x -> x^-1.
  Laurent mirrored() const;
  /// Lexicographically smaller of *this and mirrored(); a chirality-free key.
  Laurent mirror_canonical() const;

  /// Exact evaluation at x = -1.
  std::int64_t eval_at_minus_one() const;

  /// Requires all exponents divisible by k; divides them. Used to pass
  /// from bracket variable A to Jones variable t = A^-4.
  Laurent with_exponents_divided(int k) const;
  bool exponents_divisible_by(int k) const;

  Laurent operator+(const Laurent& rhs) const;
  Laurent operator-(const Laurent& rhs) const;
  Laurent operator*(const Laurent& rhs) const;
  Laurent& operator+=(const Laurent& rhs);
  bool operator==(const Laurent& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const Laurent& rhs) const { return !(*this == rhs); }
  bool operator<(const Laurent& rhs) const { return coeffs_ < rhs.coeffs_; }

  /// Human-readable form, e.g. "-t^-4 + t^-3 + t^-1".
  std::string to_string(const std::string& var = "t") const;

  const std::map<int, std::int64_t>& terms() const { return coeffs_; }

 private:
  std::map<int, std::int64_t> coeffs_;
};

bool equal_up_to_mirror(const Laurent& a, const Laurent& b);

}  // namespace equiknot
