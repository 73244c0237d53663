// SPDX-License-Identifier: Apache-2.0
//
// Nonparametric machinery behind risk-area inference: empirical CDFs,
// DKW confidence bands and their inversion to value-domain bounds, sample
// recentering, and the Shapiro-Wilk normality gate (Royston's AS R94
// approximation).

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcra/trajectory.hpp"

namespace pcra {

/// Identifies one (feature, class, zone, horizon) distribution cell.
struct DistKey {
    Feature feature{Feature::Speed};
    ObjectClass object_class{ObjectClass::Vehicle};
    int zone{1};       // 1-based
    int horizon_s{1};  // seconds

    auto operator<=>(const DistKey&) const = default;

    [[nodiscard]] std::string to_string() const;
};

/// Sample set for one distribution cell, kept sorted ascending.
struct EmpiricalDist {
    DistKey key;
    std::vector<double> samples;

    EmpiricalDist() = default;
    EmpiricalDist(DistKey k, std::vector<double> xs);

    [[nodiscard]] std::size_t n() const { return samples.size(); }
    [[nodiscard]] bool usable(std::size_t n_min) const { return samples.size() >= n_min; }
    [[nodiscard]] double min() const { return samples.front(); }
    [[nodiscard]] double max() const { return samples.back(); }
    [[nodiscard]] double mean() const;
};

/// F_hat(x) = (# samples <= x) / n; right-continuous step function.
double ecdf_eval(const EmpiricalDist& dist, double x);

/// DKW half-width: sqrt(ln(2/alpha) / (2n)).
double dkw_epsilon(std::size_t n, double alpha);

/// Two-sided DKW confidence band around the ECDF:
///   L(x) = max(F_hat(x) - eps, 0),  U(x) = min(F_hat(x) + eps, 1).
class ConfidenceBand {
public:
    ConfidenceBand(const EmpiricalDist& dist, double alpha);

    [[nodiscard]] double alpha() const { return alpha_; }
    [[nodiscard]] double epsilon() const { return epsilon_; }
    [[nodiscard]] double lower(double x) const;
    [[nodiscard]] double upper(double x) const;

private:
    double alpha_;
    double epsilon_;
    std::vector<double> samples_;
};

struct ValueBounds {
    double lo{0.0};
    double hi{0.0};
};

/// Invert the DKW band into conservative value-domain bounds:
/// hi = smallest sample with L(x) >= 1 - alpha/2 (sample max when the band
/// never reaches that level), lo symmetric via U(x) <= alpha/2 (sample min).
ValueBounds band_bounds(const EmpiricalDist& dist, double alpha);

/// Rigid translation so the sample mean equals predicted_mean; spread and
/// count are preserved.
EmpiricalDist recenter(const EmpiricalDist& dist, double predicted_mean);

/// Shapiro-Wilk normality test.
struct ShapiroWilkResult {
    bool applicable{false};
    double w{0.0};
    double p_value{0.0};
    std::string reason;  // set when not applicable
};

/// Royston's AS R94 approximation; supported for 3 <= n <= 5000. Returns a
/// not-applicable result outside that range or for zero-spread samples.
ShapiroWilkResult shapiro_wilk(std::span<const double> samples);

/// Inverse standard normal CDF (Wichura's AS 241, double precision).
double inverse_normal_cdf(double p);

/// Standard normal upper tail P(Z > z).
double normal_upper_tail(double z);

}  // namespace pcra
