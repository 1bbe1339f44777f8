#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "leroy/numerics/big_real.hpp"

namespace leroy::numerics {

/// Exact rational value entered as a decimal (or p/q) string. Parameters are
/// kept exact so that integrality and regime predicates never depend on
/// rounding.
class Decimal {
 public:
  Decimal() = default;
  explicit Decimal(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  Decimal(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)

  /// Accepts "12", "-0.75", "2.5e-3", "1/3".
  static Decimal parse(std::string_view text);
  /// Uses the shortest decimal representation that round-trips `v`.
  static Decimal from_double(double v);

  const mpq_class& rational() const { return q_; }
  bool is_integer() const { return q_.get_den() == 1; }
  /// The value as a long when it is an integer that fits.
  std::optional<long> as_integer() const;
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }
  BigReal to_big(Precision p) const { return BigReal(q_, p); }
  std::string to_string() const;

  friend Decimal operator+(const Decimal& a, const Decimal& b) { return Decimal(mpq_class(a.q_ + b.q_)); }
  friend Decimal operator-(const Decimal& a, const Decimal& b) { return Decimal(mpq_class(a.q_ - b.q_)); }
  friend Decimal operator*(const Decimal& a, const Decimal& b) { return Decimal(mpq_class(a.q_ * b.q_)); }
  friend Decimal operator/(const Decimal& a, const Decimal& b) { return Decimal(mpq_class(a.q_ / b.q_)); }
  friend Decimal operator-(const Decimal& a) { return Decimal(mpq_class(-a.q_)); }
  friend bool operator==(const Decimal& a, const Decimal& b) { return a.q_ == b.q_; }
  friend bool operator<(const Decimal& a, const Decimal& b) { return a.q_ < b.q_; }
  friend bool operator>(const Decimal& a, const Decimal& b) { return a.q_ > b.q_; }
  friend bool operator<=(const Decimal& a, const Decimal& b) { return a.q_ <= b.q_; }
  friend bool operator>=(const Decimal& a, const Decimal& b) { return a.q_ >= b.q_; }

 private:
  mpq_class q_{0};
};

/// floor of an exact rational.
long floor_of(const Decimal& d);

}  // namespace leroy::numerics
