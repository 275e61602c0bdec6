#include <array>
#include <cmath>

#include "fracineq/numerics.hpp"

namespace fracineq {

namespace {

// Lanczos N=13, g=6.024680040776729583740234375 (the double-precision set
// published with Boost.Math), in the rational form
//   Γ(z) = S(z) · (z + g - 1/2)^(z - 1/2) / exp(z + g - 1/2),
// with S(z) = num(z) / (z (z+1) ... (z+11)).
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr std::array<double, 13> kNum = {
    23531376880.41075968857200767445163675473,
    42919803642.64909876895789904700198885093,
    35711959237.35566804944018545154716670596,
    17921034426.03720969991975575445893111267,
    6039542586.35202800506429164430729792107,
    1439720407.311721673663223072794912393972,
    248874557.8620541565114603864132294232163,
    31426415.58540019438061423162831820536287,
    2876370.628935372441225409051620849613599,
    186056.2653952234950402949897160456992822,
    8071.672002365816210638002902272250613822,
    210.8242777515793458725097339207133627117,
    2.506628274631000270164908177133837338626,
};

constexpr std::array<double, 13> kDenom = {
    0.0,        39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0, 13339535.0, 2637558.0,   357423.0,    32670.0,
    1925.0,     66.0,       1.0,
};

double lanczos_sum(double z) {
  // For z > 1 evaluate in 1/z to keep the powers bounded.
  double num = 0.0;
  double den = 0.0;
  if (z <= 1.0) {
    for (std::size_t i = kNum.size(); i-- > 0;) {
      num = num * z + kNum[i];
      den = den * z + kDenom[i];
    }
  } else {
    const double r = 1.0 / z;
    for (std::size_t i = 0; i < kNum.size(); ++i) {
      num = num * r + kNum[i];
      den = den * r + kDenom[i];
    }
  }
  return num / den;
}

constexpr int kMaxFactorial = 50;

constexpr std::array<double, kMaxFactorial> make_factorials() {
  std::array<double, kMaxFactorial> f{};
  f[0] = 1.0;
  for (int i = 1; i < kMaxFactorial; ++i) f[i] = f[i - 1] * i;
  return f;
}

constexpr auto kFactorials = make_factorials();

}  // namespace

double gamma_function(double z) {
  if (!std::isfinite(z) || z <= 0.0) {
    throw DomainError("gamma: argument must be finite and > 0");
  }
  if (z == std::floor(z) && z <= kMaxFactorial) {
    return kFactorials[static_cast<std::size_t>(z) - 1];
  }
  const double zgh = z + kLanczosG - 0.5;
  const double s = lanczos_sum(z);
  if (z > 100.0) {
    // Split the power so the intermediate does not overflow before exp.
    const double hp = std::pow(zgh, (z - 0.5) / 2.0);
    return s * (hp / std::exp(zgh)) * hp;
  }
  return s * std::pow(zgh, z - 0.5) / std::exp(zgh);
}

}  // namespace fracineq
