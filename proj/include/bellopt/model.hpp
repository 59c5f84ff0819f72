#pragma once

#include "bellopt/types.hpp"

namespace bellopt {

/// Closed-form probability that neither detector clicks when the two-mode
/// mixed state with weight p is probed with displacements a (Alice) and
/// b (Bob):
///
///   (p/2) e^{-|a|^2-|b|^2} |a-b|^2
///   + ((1-p)/4) e^{-|a|^2-|b|^2} (1+|a|^2)(1+|b|^2)
///
/// Symmetric in a and b, invariant under a common phase rotation of both
/// amplitudes, and affine in p for fixed settings. Throws std::domain_error
/// on p outside [0,1] or non-finite amplitudes. Arbitrarily large amplitudes
/// are fine: the value underflows smoothly to 0.
double joint_probability(WernerParameter p, const LoSetting& a,
                         const LoSetting& b);

/// Closed-form probability that one party's detector stays silent:
/// (1/2) e^{-|a|^2} (1+|a|^2). Independent of the mixing weight; value in
/// (0, 1/2]. Throws std::domain_error on a non-finite amplitude.
double single_probability(const LoSetting& a);

/// Probability of at least one photocount: 1 - single_probability(a).
double click_probability(const LoSetting& a);

}  // namespace bellopt
