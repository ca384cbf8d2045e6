#pragma once

#include <vector>

#include "entrex/histogram.hpp"

namespace entrex {

/// Kaniadakis entropy sampled on an ascending kappa grid starting at 0,
/// where the value is the Shannon entropy.
struct EntropyCurve {
    std::vector<double> kappas;
    std::vector<double> values;

    bool operator==(const EntropyCurve&) const = default;
};

// All entropies are in nats. Zero bins contribute nothing (0 ln 0 = 0).

double shannon(const ProbDist& p);

/// Tsallis entropy with index q > 0; q within 1e-9 of 1 routes to Shannon.
double tsallis(const ProbDist& p, double q);

/// Kaniadakis entropy with index kappa >= 0; kappa < 1e-9 routes to Shannon.
double kaniadakis(const ProbDist& p, double kappa);

/// Auxiliary functional sum_i (p_i^(1+kappa) + p_i^(1-kappa)) / 2; equals 1 at kappa = 0.
double z_functional(const ProbDist& p, double kappa);

// Joint entropies treat the pair as a single system: the 256x256 matrix is
// flattened into one 65536-bin distribution.
double joint_shannon(const JointDist& j);
double joint_tsallis(const JointDist& j, double q);
double joint_kaniadakis(const JointDist& j, double kappa);

/// Conditional Tsallis entropy of the first image given the second:
/// [T(A,B) - T(B)] / [1 + (1-q) T(B)]. Throws std::domain_error when the
/// denominator vanishes.
double tsallis_conditional(const JointDist& j, double q);

/// Conditional Kaniadakis entropy in the small-index regime (kappa in [0, 0.1]):
/// [K(A,B) - K(B) Z(A)] / Z(B). At kappa = 0 this is the Shannon conditional.
double kaniadakis_conditional(const JointDist& j, double kappa);

/// Mutual Kaniadakis entropy K(A) - K(A|B); zero for independent pairs.
double kaniadakis_mutual(const JointDist& j, double kappa);

/// Sample the Kaniadakis entropy on a uniform kappa grid over [0, kappa_max].
EntropyCurve entropy_curve(const ProbDist& p, double kappa_max, int steps);

}  // namespace entrex
