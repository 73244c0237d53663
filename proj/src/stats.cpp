// SPDX-License-Identifier: Apache-2.0

#include "pcra/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace pcra {

std::string DistKey::to_string() const {
    std::string s = pcra::to_string(feature);
    s += '/';
    s += pcra::to_string(object_class);
    s += "/z";
    s += std::to_string(zone);
    s += "/t";
    s += std::to_string(horizon_s);
    return s;
}

EmpiricalDist::EmpiricalDist(DistKey k, std::vector<double> xs) : key(k), samples(std::move(xs)) {
    std::sort(samples.begin(), samples.end());
}

double EmpiricalDist::mean() const {
    if (samples.empty()) throw std::invalid_argument("mean of empty distribution");
    return std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
}

double ecdf_eval(const EmpiricalDist& dist, double x) {
    if (dist.samples.empty()) throw std::invalid_argument("ecdf_eval: empty distribution");
    auto it = std::upper_bound(dist.samples.begin(), dist.samples.end(), x);
    return static_cast<double>(it - dist.samples.begin()) / static_cast<double>(dist.samples.size());
}

double dkw_epsilon(std::size_t n, double alpha) {
    if (n < 1) throw std::invalid_argument("dkw_epsilon: n must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("dkw_epsilon: alpha must be in (0,1)");
    return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n)));
}

ConfidenceBand::ConfidenceBand(const EmpiricalDist& dist, double alpha)
    : alpha_(alpha), epsilon_(dkw_epsilon(dist.n(), alpha)), samples_(dist.samples) {}

double ConfidenceBand::lower(double x) const {
    auto it = std::upper_bound(samples_.begin(), samples_.end(), x);
    double f = static_cast<double>(it - samples_.begin()) / static_cast<double>(samples_.size());
    return std::max(f - epsilon_, 0.0);
}

double ConfidenceBand::upper(double x) const {
    auto it = std::upper_bound(samples_.begin(), samples_.end(), x);
    double f = static_cast<double>(it - samples_.begin()) / static_cast<double>(samples_.size());
    return std::min(f + epsilon_, 1.0);
}

ValueBounds band_bounds(const EmpiricalDist& dist, double alpha) {
    if (dist.samples.empty()) throw std::invalid_argument("band_bounds: empty distribution");
    const double n = static_cast<double>(dist.n());
    const double eps = dkw_epsilon(dist.n(), alpha);

    ValueBounds out{dist.min(), dist.max()};

    // hi: smallest sample x with L(x) = F_hat(x) - eps >= 1 - alpha/2.
    // F_hat at the i-th sorted sample (0-based) is (i+1)/n.
    const double hi_level = 1.0 - alpha / 2.0 + eps;
    const std::size_t k_hi = static_cast<std::size_t>(std::ceil(hi_level * n - 1e-12));
    if (k_hi >= 1 && k_hi <= dist.n()) {
        out.hi = dist.samples[k_hi - 1];
    }  // hi_level > 1: band never reaches it, keep sample max

    // lo: largest sample x with U(x) = F_hat(x) + eps <= alpha/2.
    const double lo_level = alpha / 2.0 - eps;
    if (lo_level > 0.0) {
        const std::size_t cnt = static_cast<std::size_t>(std::floor(lo_level * n + 1e-12));
        if (cnt >= 1) {
            std::size_t j = cnt - 1;
            if (cnt < dist.n() && dist.samples[cnt - 1] == dist.samples[cnt]) {
                // duplicate run spans the threshold; step below the run
                auto it = std::lower_bound(dist.samples.begin(), dist.samples.end(),
                                           dist.samples[cnt - 1]);
                if (it == dist.samples.begin()) return out;  // nothing qualifies, keep min
                j = static_cast<std::size_t>(it - dist.samples.begin()) - 1;
            }
            out.lo = dist.samples[j];
        }
    }  // band never gets that low inside the support, keep sample min

    return out;
}

EmpiricalDist recenter(const EmpiricalDist& dist, double predicted_mean) {
    if (dist.samples.empty()) throw std::invalid_argument("recenter: empty distribution");
    const double shift = predicted_mean - dist.mean();
    EmpiricalDist out;
    out.key = dist.key;
    out.samples.reserve(dist.samples.size());
    for (double x : dist.samples) out.samples.push_back(x + shift);
    return out;
}

// ---------------------------------------------------------------------------
// Inverse normal CDF, Wichura's algorithm AS 241 (PPND16).

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("inverse_normal_cdf: p must be in (0,1)");

    static const double a[8] = {
        3.3871328727963666080e0,  1.3314166789178437745e2, 1.9715909503065514427e3,
        1.3731693765509461125e4,  4.5921953931549871457e4, 6.7265770927008700853e4,
        3.3430575583588128105e4,  2.5090809287301226727e3};
    static const double b[8] = {
        1.0,                      4.2313330701600911252e1, 6.8718700749205790830e2,
        5.3941960214247511077e3,  2.1213794301586595867e4, 3.9307895800092710610e4,
        2.8729085735721942674e4,  5.2264952788528545610e3};
    static const double c[8] = {
        1.42343711074968357734e0, 4.63033784615654529590e0, 5.76949722146069140550e0,
        3.64784832476320460504e0, 1.27045825245236838258e0, 2.41780725177450611770e-1,
        2.27238449892691845833e-2, 7.74545014278341407640e-4};
    static const double d[8] = {
        1.0,                      2.05319162663775882187e0, 1.67638483018380384940e0,
        6.89767334985100004550e-1, 1.48103976427480074590e-1, 1.51986665636164571966e-2,
        5.47593808499534494600e-4, 1.05075007164441684324e-9};
    static const double e[8] = {
        6.65790464350110377720e0, 5.46378491116411436990e0, 1.78482653991729133580e0,
        2.96560571828504891230e-1, 2.65321895265761230930e-2, 1.24266094738807843860e-3,
        2.71155556874348757815e-5, 2.01033439929228813265e-7};
    static const double f[8] = {
        1.0,                      5.99832206555887937690e-1, 1.36929880922735805310e-1,
        1.48753612908506148525e-2, 7.86869131145613259100e-4, 1.84631831751005468180e-5,
        1.42151175831644588870e-7, 2.04426310338993978564e-15};

    auto ratio = [](const double* num, const double* den, double r) {
        double n_acc = num[7];
        double d_acc = den[7];
        for (int i = 6; i >= 0; --i) {
            n_acc = n_acc * r + num[i];
            d_acc = d_acc * r + den[i];
        }
        return n_acc / d_acc;
    };

    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q * ratio(a, b, r);
    }
    double r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double val;
    if (r <= 5.0) {
        val = ratio(c, d, r - 1.6);
    } else {
        val = ratio(e, f, r - 5.0);
    }
    return q < 0.0 ? -val : val;
}

double normal_upper_tail(double z) {
    return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

// ---------------------------------------------------------------------------
// Shapiro-Wilk, Royston 1995 (AS R94): polynomial-corrected Blom weights for
// the two extreme order statistics, normalizing transform for the p-value.

namespace {

double poly(std::span<const double> coef, double x) {
    double acc = coef.back();
    for (std::size_t i = coef.size() - 1; i-- > 0;) acc = acc * x + coef[i];
    return acc;
}

}  // namespace

ShapiroWilkResult shapiro_wilk(std::span<const double> samples) {
    ShapiroWilkResult res;
    const std::size_t n = samples.size();
    if (n < 3 || n > 5000) {
        res.reason = "sample size outside [3, 5000]";
        return res;
    }

    std::vector<double> x(samples.begin(), samples.end());
    std::sort(x.begin(), x.end());
    if (x.back() - x.front() <= 0.0) {
        res.reason = "zero sample range";
        return res;
    }

    const double an = static_cast<double>(n);

    // Expected normal order statistics (Blom) and the weight vector.
    std::vector<double> m(n);
    double ssq_m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = inverse_normal_cdf((static_cast<double>(i + 1) - 0.375) / (an + 0.25));
        ssq_m += m[i] * m[i];
    }

    std::vector<double> w(n);
    if (n == 3) {
        w[0] = -std::numbers::sqrt2 / 2.0;
        w[1] = 0.0;
        w[2] = -w[0];
    } else {
        static const double c1[6] = {0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
        static const double c2[6] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
        const double rsn = 1.0 / std::sqrt(an);
        const double norm_m = std::sqrt(ssq_m);
        const double wn = poly(c1, rsn) + m[n - 1] / norm_m;
        if (n > 5) {
            const double wn1 = poly(c2, rsn) + m[n - 2] / norm_m;
            const double phi = (ssq_m - 2.0 * m[n - 1] * m[n - 1] - 2.0 * m[n - 2] * m[n - 2]) /
                               (1.0 - 2.0 * wn * wn - 2.0 * wn1 * wn1);
            const double sphi = std::sqrt(phi);
            for (std::size_t i = 2; i < n - 2; ++i) w[i] = m[i] / sphi;
            w[n - 1] = wn;
            w[n - 2] = wn1;
            w[0] = -wn;
            w[1] = -wn1;
        } else {
            const double phi = (ssq_m - 2.0 * m[n - 1] * m[n - 1]) / (1.0 - 2.0 * wn * wn);
            const double sphi = std::sqrt(phi);
            for (std::size_t i = 1; i < n - 1; ++i) w[i] = m[i] / sphi;
            w[n - 1] = wn;
            w[0] = -wn;
        }
    }

    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / an;
    double numer = 0.0;
    double denom = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        numer += w[i] * x[i];
        denom += (x[i] - mean) * (x[i] - mean);
    }
    double W = numer * numer / denom;
    W = std::min(W, 1.0);
    res.w = W;
    res.applicable = true;

    // p-value approximations.
    if (n == 3) {
        const double pi6 = 6.0 / std::numbers::pi;
        const double stqr = std::asin(std::sqrt(0.75));
        double p = pi6 * (std::asin(std::sqrt(W)) - stqr);
        res.p_value = std::clamp(p, 0.0, 1.0);
        return res;
    }

    const double y = std::log(1.0 - W);
    double mu;
    double sigma;
    if (n <= 11) {
        static const double c3[4] = {0.5440, -0.39978, 0.025054, -6.714e-4};
        static const double c4[4] = {1.3822, -0.77857, 0.062767, -0.0020322};
        static const double g[2] = {-2.273, 0.459};
        const double gamma = poly(g, an);
        if (y >= gamma) {
            res.p_value = 1e-99;
            return res;
        }
        const double yt = -std::log(gamma - y);
        mu = poly(c3, an);
        sigma = std::exp(poly(c4, an));
        res.p_value = normal_upper_tail((yt - mu) / sigma);
    } else {
        static const double c5[4] = {-1.5861, -0.31082, -0.083751, 0.0038915};
        static const double c6[3] = {-0.4803, -0.082676, 0.0030302};
        const double ln_n = std::log(an);
        mu = poly(c5, ln_n);
        sigma = std::exp(poly(c6, ln_n));
        res.p_value = normal_upper_tail((y - mu) / sigma);
    }
    return res;
}

}  // namespace pcra
