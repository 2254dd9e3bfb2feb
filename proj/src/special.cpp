#include "ctbnc/special.hpp"

#include "ctbnc/errors.hpp"
#include "ctbnc/util.hpp"

#include <cmath>
#include <limits>

namespace ctbnc {

double log_gamma(double x) {
    return std::lgamma(x);
}

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
    constexpr int kMaxIterations = 400;
    constexpr double kEps = 1e-16;
    constexpr double kTiny = 1e-300;

    double qab = a + b;
    double qap = a + 1.0;
    double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw ArgumentError("incomplete beta requires a, b > 0");
    if (!(x >= 0.0) || !(x <= 1.0)) throw ArgumentError("incomplete beta requires x in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    double ln_front = log_gamma(a + b) - log_gamma(a) - log_gamma(b)
        + a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double dof) {
    if (!(dof > 0.0)) throw ArgumentError("student t requires dof > 0");
    if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
    double x = dof / (dof + t * t);
    double tail = 0.5 * regularized_incomplete_beta(0.5 * dof, 0.5, x);
    return t >= 0.0 ? 1.0 - tail : tail;
}

double student_t_two_tailed_critical(double confidence, double dof) {
    if (!(confidence > 0.0) || !(confidence < 1.0)) {
        throw ArgumentError("confidence must be in (0, 1)");
    }
    double target = 0.5 * (1.0 + confidence); // one-sided quantile
    double lo = 0.0;
    double hi = 1.0;
    while (student_t_cdf(hi, dof) < target) {
        hi *= 2.0;
        if (hi > 1e12) return std::numeric_limits<double>::infinity();
    }
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (student_t_cdf(mid, dof) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-12 * (1.0 + hi)) break;
    }
    return 0.5 * (lo + hi);
}

double wilson_z_for_confidence(double confidence_percent) {
    struct Level { double percent; double z; };
    static constexpr Level kLevels[] = {
        {99.9, 3.29}, {99.8, 3.09}, {99.0, 2.58}, {98.0, 2.33},
        {95.0, 1.96}, {90.0, 1.64}, {80.0, 1.28},
    };
    for (const auto& level : kLevels) {
        if (std::fabs(level.percent - confidence_percent) < 1e-9) return level.z;
    }
    throw ArgumentError("confidence level " + format_double(confidence_percent) +
                        " not allowed; use one of 99.9, 99.8, 99, 98, 95, 90, 80");
}

} // namespace ctbnc
