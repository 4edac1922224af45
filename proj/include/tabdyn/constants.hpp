#pragma once

// Monte Carlo parameters and tolerances, one table, versioned.

#include <cstdint>
#include <string_view>

namespace tabdyn::constants {

inline constexpr int kVersion = 1;

/// Seed used when none is given.
inline constexpr std::uint64_t kDefaultSeed = 1;

/// Where a tolerance comes from.
enum class Basis {
  Exact,           ///< identity, checked bit for bit
  AsymptoticRate,  ///< the limit theorem gives a rate without a constant
  Calibration,     ///< chosen for desk-scale (n, trials)
};

struct Tolerance {
  std::string_view name;
  double value;
  Basis basis;
};

inline constexpr Tolerance kThetaKs{"theta_ks", 0.05, Basis::Calibration};
inline constexpr Tolerance kSecondClassKs{"second_class_ks", 0.05, Basis::Calibration};
inline constexpr Tolerance kQnDnKs{"qn_dn_two_sample_ks", 0.03, Basis::Calibration};
inline constexpr Tolerance kLimitShapeP95{"limit_shape_p95", 0.15, Basis::AsymptoticRate};
inline constexpr Tolerance kPieriM1{"pieri_m1", 0.05, Basis::AsymptoticRate};
inline constexpr Tolerance kPieriM2{"pieri_m2", 0.1, Basis::AsymptoticRate};
inline constexpr Tolerance kPieriM4{"pieri_m4", 0.3, Basis::AsymptoticRate};
inline constexpr Tolerance kDetRsk{"det_rsk_mean_abs", 0.1, Basis::AsymptoticRate};
inline constexpr Tolerance kDetJdt{"det_jdt_mean_abs", 0.1, Basis::AsymptoticRate};
inline constexpr Tolerance kInverseMae1{"inverse_rsk_mae_1", 0.05, Basis::Calibration};
inline constexpr Tolerance kInverseMae2{"inverse_rsk_mae_2", 0.08, Basis::Calibration};
inline constexpr Tolerance kInverseRank{"inverse_rsk_rank", 0.95, Basis::Calibration};
inline constexpr Tolerance kRostHausdorff{"rost_hausdorff", 0.05, Basis::Calibration};
inline constexpr Tolerance kRostFraction{"rost_fraction", 0.95, Basis::Calibration};
inline constexpr Tolerance kPhiKs{"phi_ks", 0.05, Basis::Calibration};
inline constexpr Tolerance kTasepKs{"tasep_ks", 0.05, Basis::Calibration};
inline constexpr Tolerance kChiSquareP{"sampler_chi_square_p", 0.001, Basis::Calibration};
inline constexpr Tolerance kDensityIntegral{"theta_density_integral", 1e-6, Basis::Exact};

/// Experiment tags: trial t of experiment s uses stream trial_stream(s, t).
enum Salt : std::uint32_t {
  kSaltTheta = 1,
  kSaltSecondClass,
  kSaltQn,
  kSaltDn,
  kSaltDetRsk,
  kSaltDetJdt,
  kSaltInverse,
  kSaltLimitShape,
  kSaltPieri,
  kSaltRost,
  kSaltPhi,
  kSaltTasep,
  kSaltEnhanced,
  kSaltInterface,
  kSaltSamplerRsk,
  kSaltSamplerMarkov,
  kSaltFactor,
};

}  // namespace tabdyn::constants
