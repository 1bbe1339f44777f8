#pragma once

#include <mpfr.h>

#include <cmath>

namespace leroy::numerics {

/// Binary working precision carried by every extended-precision value.
struct Precision {
  mpfr_prec_t bits = 64;

  static Precision from_digits(int digits) {
    // log2(10) = 3.3219...; a few extra bits so `digits` survive the last rounding
    auto b = static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 4;
    return Precision{b < MPFR_PREC_MIN ? MPFR_PREC_MIN : b};
  }
  int digits() const { return static_cast<int>(std::floor((bits - 4) * 0.30102999566398120)); }
  Precision plus_bits(mpfr_prec_t extra) const { return Precision{bits + extra}; }

  friend bool operator==(Precision a, Precision b) { return a.bits == b.bits; }
  friend auto operator<=>(Precision a, Precision b) { return a.bits <=> b.bits; }
};

/// Per-call accuracy request.
///   target_digits       decimal digits of requested output accuracy
///   guard_digits        extra digits carried on top of the target
///   max_working_digits  hard cap for precision escalation
struct PrecisionConfig {
  int target_digits = 30;
  int guard_digits = 10;
  int max_working_digits = 20000;

  /// Throws leroy::Error(invalid_argument) when the invariants do not hold.
  void validate() const;

  /// Precision for `target + guard + extra` digits.
  Precision working(int extra_digits = 0) const {
    return Precision::from_digits(target_digits + guard_digits + extra_digits);
  }
};

}  // namespace leroy::numerics
