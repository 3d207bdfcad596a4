#pragma once

// Hypothesis audits for the three-species existence and nonexistence results.

#include "lvwaves/model.hpp"
#include "lvwaves/numerics.hpp"
#include "lvwaves/report.hpp"

namespace lvwaves {

struct ExistenceInputs {
    TwoSpeciesParams block;
    double d3{1.0};
    double sigma3{1.0};
    double c31{1.0};
    double c32{1.0};
    double c33{1.0};
    /// Speed of the background (u~, v~) wave.
    double theta{0.0};
    double K_sub{0.0};
    double K_super{0.0};

    /// Third row and block taken from `p`; c13 and c23 are ignored.
    static ExistenceInputs from_params(const ThreeSpeciesParams& p, double theta, double K_sub, double K_super);
};

/// Items H1..H4 with signed margins (negative = violated):
///   H1  min(c31 - sigma3, c31 u* + c32 v* - sigma3)          pass if > 0
///   H2  c33 K_super + q_lower - sigma3                        pass if >= 0
///   H3  4 (c33 K_sub + 6 d3)(-c33 K_sub - 2 d3 - q_upper + sigma3) - 4 theta^2
///                                                             pass if >= 0
///   H4  min(K_super - K_sub, K_sub)                           pass if >= 0 and K_sub > 0
/// where q_lower, q_upper are the N-barrier bounds with weights (c31, c32).
/// Throws RegimeError unless the block is strongly or weakly competitive.
CheckReport existence_report(const ExistenceInputs& in);

/// Fisher context for the third equation over a given (u~, v~) background.
FisherContext fisher_context(const ExistenceInputs& in, WaveProfile background);

struct SigmaPair {
    double Sigma1{0.0};  ///< sigma1 c33 - sigma3 c13
    double Sigma2{0.0};  ///< sigma2 c33 - sigma3 c23
};

SigmaPair sigma_pair(const ThreeSpeciesParams& p);

/// Items A1, A2, A3_literal (d1, d2 inside the min) and A3_variant (no d
/// factors), each with a signed margin. The verdict names which A3 form
/// passed.
CheckReport nonexistence_report(const ThreeSpeciesParams& p);

/// A1 and A2 pass and at least one A3 form passes.
bool nonexistence_predicted(const CheckReport& report);

enum class SWClass { S, W, Neither };

const char* to_string(SWClass c);

SWClass check_SW(const TwoSpeciesParams& p);

}  // namespace lvwaves
