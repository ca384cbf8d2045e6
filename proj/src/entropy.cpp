#include "entrex/entropy.hpp"

#include <cmath>
#include <span>
#include <stdexcept>

#include "entrex/detail/accumulate.hpp"

namespace entrex {

namespace {

constexpr double kShannonLimit = 1e-9;  // |q-1| or kappa below this routes to Shannon

// 0.0 + 0.0 turns a negative zero (e.g. from (1-1)/(q-1) with q < 1) into +0.
double flush_zero(double x) { return x + 0.0; }

double shannon_impl(std::span<const double> p) {
    detail::NeumaierSum acc;
    for (double x : p) {
        if (x > 0.0) acc.add(x * std::log(x));
    }
    return flush_zero(-acc.value());
}

double tsallis_impl(std::span<const double> p, double q) {
    if (!(q > 0.0)) {
        throw std::invalid_argument("tsallis: entropic index q must be > 0");
    }
    if (std::abs(q - 1.0) < kShannonLimit) return shannon_impl(p);
    detail::NeumaierSum acc;
    for (double x : p) {
        if (x > 0.0) acc.add(std::pow(x, q));
    }
    return flush_zero((1.0 - acc.value()) / (q - 1.0));
}

double kaniadakis_impl(std::span<const double> p, double kappa) {
    if (!(kappa >= 0.0)) {
        throw std::invalid_argument("kaniadakis: entropic index kappa must be >= 0");
    }
    if (kappa < kShannonLimit) return shannon_impl(p);
    detail::NeumaierSum acc;
    for (double x : p) {
        if (x > 0.0) acc.add(std::pow(x, 1.0 - kappa) - std::pow(x, 1.0 + kappa));
    }
    return flush_zero(acc.value() / (2.0 * kappa));
}

double z_impl(std::span<const double> p, double kappa) {
    if (!(kappa >= 0.0)) {
        throw std::invalid_argument("z_functional: entropic index kappa must be >= 0");
    }
    detail::NeumaierSum acc;
    for (double x : p) {
        if (x > 0.0) acc.add((std::pow(x, 1.0 + kappa) + std::pow(x, 1.0 - kappa)) / 2.0);
    }
    return acc.value();
}

void require_small_kappa(double kappa, const char* what) {
    if (!(kappa >= 0.0) || kappa > 0.1) {
        throw std::invalid_argument(std::string(what) +
                                    ": kappa must lie in [0, 0.1] (small-index regime)");
    }
}

}  // namespace

double shannon(const ProbDist& p) { return shannon_impl(p.p); }
double tsallis(const ProbDist& p, double q) { return tsallis_impl(p.p, q); }
double kaniadakis(const ProbDist& p, double kappa) { return kaniadakis_impl(p.p, kappa); }
double z_functional(const ProbDist& p, double kappa) { return z_impl(p.p, kappa); }

double joint_shannon(const JointDist& j) { return shannon_impl(j.p); }
double joint_tsallis(const JointDist& j, double q) { return tsallis_impl(j.p, q); }
double joint_kaniadakis(const JointDist& j, double kappa) { return kaniadakis_impl(j.p, kappa); }

double tsallis_conditional(const JointDist& j, double q) {
    const double t_ab = tsallis_impl(j.p, q);
    const double t_b = tsallis_impl(j.marginal_b.p, q);
    const double den = 1.0 + (1.0 - q) * t_b;
    if (std::abs(den) < 1e-12) {
        throw std::domain_error("tsallis_conditional: denominator 1+(1-q)T(B) vanishes");
    }
    return (t_ab - t_b) / den;
}

double kaniadakis_conditional(const JointDist& j, double kappa) {
    require_small_kappa(kappa, "kaniadakis_conditional");
    const double k_ab = kaniadakis_impl(j.p, kappa);
    const double k_b = kaniadakis_impl(j.marginal_b.p, kappa);
    const double z_a = z_impl(j.marginal_a.p, kappa);
    const double z_b = z_impl(j.marginal_b.p, kappa);
    if (!(z_b > 0.0)) {
        // Unreachable for a valid distribution: every nonzero bin contributes
        // a positive term.
        throw std::domain_error("kaniadakis_conditional: Z(B) vanished");
    }
    return (k_ab - k_b * z_a) / z_b;
}

double kaniadakis_mutual(const JointDist& j, double kappa) {
    require_small_kappa(kappa, "kaniadakis_mutual");
    return kaniadakis_impl(j.marginal_a.p, kappa) - kaniadakis_conditional(j, kappa);
}

EntropyCurve entropy_curve(const ProbDist& p, double kappa_max, int steps) {
    if (!(kappa_max > 0.0)) {
        throw std::invalid_argument("entropy_curve: kappa_max must be > 0");
    }
    if (steps < 2) {
        throw std::invalid_argument("entropy_curve: need at least 2 kappa steps");
    }
    EntropyCurve c;
    c.kappas.resize(steps);
    c.values.resize(steps);
    for (int i = 0; i < steps; ++i) {
        c.kappas[i] = kappa_max * static_cast<double>(i) / static_cast<double>(steps - 1);
        c.values[i] = kaniadakis(p, c.kappas[i]);
    }
    return c;
}

}  // namespace entrex
