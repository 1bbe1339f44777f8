#pragma once

#include <optional>
#include <vector>

#include "leroy/params.hpp"

namespace leroy {

enum class RegimeLabel { algebraic, boundary, oscillatory };

std::string to_string(RegimeLabel r);

/// Behaviour of F(-t) for integer gamma = m, decided by the exact value of alpha*m.
struct Regime {
  RegimeLabel label = RegimeLabel::algebraic;
  /// floor((alpha m / 2 + 1) / 2): number of oscillatory terms; 0 when alpha m < 2.
  long P = 0;
  Decimal alpha_m;
};

/// Throws Error(domain) "asymptotics undefined for non-integer γ".
Regime regime_of(const Params& p);

/// P by direct search: 2P+1 is the smallest odd integer greater than alpha m / 2.
long p_by_search(const Decimal& alpha_m);

/// Coefficient records of the expansion for fixed parameters.
struct AsymptoticExpansion {
  struct GTerm {
    long r;
    BigReal growth;     // m cos((2r-1) pi / (alpha m))
    BigReal frequency;  // m sin((2r-1) pi / (alpha m))
    BigReal phase;      // (2r-1) pi (m+1-2m beta) / (2 alpha m)
  };
  Regime regime;
  int K = 10;
  BigReal a0;           // (2 pi)^((1-m)/2) / (alpha sqrt m)
  Decimal theta_prime;  // m beta - (m-1)/2
  Decimal exponent;     // (m+1-2m beta) / (2 alpha m), power of t in E and G_r
  /// h[k-1] = 1 / Gamma(beta - alpha k)^m, exactly 0 at poles.
  std::vector<BigReal> h;
  std::vector<GTerm> g;
};

constexpr int kDefaultAsymptoticOrder = 10;

AsymptoticExpansion build_expansion(const Params& p, int K, Precision prec);

/// H_K(t) = -sum_{k=1}^K (-1)^k t^-k / Gamma(beta - alpha k)^m.
BigReal eval_H(const Params& p, const BigReal& t, int K, Precision prec);

/// G_r(t) for 1 <= r <= P: the conjugate pair E(e^{+-i(2r-1)pi} t), i.e.
/// 2 a0 t^e exp(m t^{1/(alpha m)} cos th) cos((2r-1) pi e + m t^{1/(alpha m)} sin th),
/// th = (2r-1) pi / (alpha m).
BigReal eval_G_r(const Params& p, const BigReal& t, long r, Precision prec);

/// Same pair without the 1..P restriction (exponentially small when
/// cos th < 0, as for every pair when alpha m < 2).
BigReal eval_conjugate_pair(const Params& p, const BigReal& t, long r, Precision prec);

/// a0 z^e exp(m z^{1/(alpha m)}) on the principal branch.
BigComplex eval_E_leading(const Params& p, const BigComplex& z, Precision prec);

struct GerholdLeading {
  BigComplex value;
  /// |arg z| inside the sector where the leading form applies.
  bool in_sector = false;
  /// Half-opening of that sector (radians, epsilon already subtracted).
  double sector = 0.0;
};

/// (1/(alpha sqrt gamma)) (2 pi)^((1-gamma)/2) z^((gamma-2 beta gamma+1)/(2 alpha gamma)) e^{gamma z^{1/(alpha gamma)}}
/// for any gamma > 0.
GerholdLeading eval_E_gerhold(const Params& p, const BigComplex& z, Precision prec, double epsilon = 1e-6);

struct NegativeAxisOptions {
  int K = kDefaultAsymptoticOrder;
  /// Keep only G_1 of the oscillatory sum.
  bool g1_only = false;
  /// Add the exponentially small pair G_1 in the algebraic regime.
  bool include_exponentially_small = false;
};

struct NegativeAxisExpansion {
  BigReal value;
  Regime regime;
  BigReal H;               // zero when not part of the regime's form
  std::vector<BigReal> G;  // G_r terms used, r = 1, 2, ...
};

/// Asymptotic approximation of F(-t) for integer gamma:
/// H_K (alpha m < 2), G_1 + H_K (alpha m = 2), sum_{r<=P} G_r (alpha m > 2).
NegativeAxisExpansion expand_negative_axis(const Params& p, const BigReal& t, Precision prec,
                                           const NegativeAxisOptions& options = {});

struct OrderTypeEstimate {
  double rho_exact = 0.0;   // 1 / (alpha gamma)
  double rho_est = 0.0;     // from the fit ln(1/|c_n|) ~ A n ln n + B n + C ln n + D
  double rho_limsup = 0.0;  // max_{n in [N/2, N]} n ln n / ln(1/|c_n|)
  double type_est = 0.0;    // L^rho / (e rho) at n = N, L = n^{1/rho} |c_n|^{1/n}
  struct Row {
    long n;
    double rho_n;   // n ln n / ln(1/|c_n|)
    double type_n;
  };
  std::vector<Row> table;
};

OrderTypeEstimate estimate_order_type(const Params& p, long N);

/// Olver's estimate for sum z^k/(k!)^rho at z = -t^rho, rho > 2, as printed:
/// a~0 t^((1-rho)/2) e^{rho t cos(pi/rho)} sin(pi/rho + t rho sin(pi/rho)).
BigReal olver_estimate(const Decimal& rho, const BigReal& t, Precision prec);

}  // namespace leroy
