#include "bollobas/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bollobas {

double binary_entropy(double q) {
    if (!(q > 0.0 && q < 1.0))
        throw std::domain_error("binary_entropy: q must lie in (0,1)");
    return -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
}

EntropyValue binary_entropy_checked(double q) {
    if (q < 0.0 || q > 1.0) throw std::domain_error("binary_entropy: q must lie in [0,1]");
    if (q == 0.0 || q == 1.0) return {0.0, true};
    return {binary_entropy(q), false};
}

int threshold_min_m(long long n, int k) {
    if (n < 1 || k < 2) throw std::invalid_argument("threshold_min_m: need n >= 1, k >= 2");
    const BigUint target(static_cast<uint64_t>(n));
    for (int m = 1;; ++m) {
        unsigned top = static_cast<unsigned>(m);
        unsigned pick = static_cast<unsigned>((m + k - 1) / k);  // ceil(m/k)
        if (binomial(top, pick) >= target) return m;
        if (m > 4096) throw std::runtime_error("threshold_min_m: runaway search");
    }
}

int orlin_min_m(long long n) {
    if (n < 2) throw std::invalid_argument("orlin_min_m: need n >= 2");
    const BigUint target(static_cast<uint64_t>(n));
    for (int m = 2;; ++m) {
        BigUint v = binomial(static_cast<unsigned>(m - 1), static_cast<unsigned>(m / 2));
        v += v;
        if (v >= target) return m;
        if (m > 4096) throw std::runtime_error("orlin_min_m: runaway search");
    }
}

const NamedBound* BoundReport::find(const std::string& name) const {
    for (const NamedBound& b : bounds)
        if (b.name == name) return &b;
    return nullptr;
}

namespace {

double choose_d(int n, int r) {
    if (r < 0 || r > n) return 0.0;
    double v = 1.0;
    for (int i = 1; i <= r; ++i) v = v * static_cast<double>(n - r + i) / static_cast<double>(i);
    return v;
}

double log2_binomial(long long n, long long r) {
    // exact enough for reporting; the exact decimal is attached separately
    // when n is small
    return (std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(r) + 1.0) -
            std::lgamma(static_cast<double>(n - r) + 1.0)) /
           std::numbers::ln2;
}

}  // namespace

BoundReport beta_bounds(int k, int t, long long n) {
    if (t < 2 || k < t || n < 1) throw std::invalid_argument("beta_bounds: need 2 <= t <= k, n >= 1");
    BoundReport report{k, t, n, {}};
    const double nd = static_cast<double>(n);

    if (t == 2) {
        if (k >= 3) {
            double h = binary_entropy(1.0 / k);
            report.bounds.push_back(
                {"beta_log2_lower", BoundDirection::lower, nd / k, "large n", ""});
            report.bounds.push_back(
                {"beta_log2_upper_entropy", BoundDirection::upper, nd * h, "large n", ""});
        }
        long long r = n / k;
        NamedBound binom{"beta_log2_upper_binomial", BoundDirection::upper,
                         r >= 1 ? log2_binomial(n, r) : 0.0, "", ""};
        if (n <= 256)
            binom.exact = binomial(static_cast<unsigned>(n), static_cast<unsigned>(r)).to_string();
        report.bounds.push_back(std::move(binom));
    } else {
        if (k < 3 || t < 3)
            throw std::invalid_argument("beta_bounds: general-t rates need k >= t >= 3");
        double ck = choose_d(k, t - 1);
        double lower_rate = std::numbers::log2e /
                            (ck * (t + 1) * std::pow(static_cast<double>(t), t - 1));
        double upper_rate = 2.0 / (ck * std::pow(static_cast<double>(t - 1), t - 3));
        report.bounds.push_back(
            {"beta_log2_lower", BoundDirection::lower, nd * lower_rate, "large n", ""});
        report.bounds.push_back(
            {"beta_log2_upper", BoundDirection::upper, nd * upper_rate, "large n", ""});
    }
    return report;
}

BoundReport f_bounds(int k, int t, long long n) {
    if (t < 2 || k < t || n < 1) throw std::invalid_argument("f_bounds: need 2 <= t <= k, n >= 1");
    BoundReport report{k, t, n, {}};
    const double log2n = std::log2(static_cast<double>(n));

    // the randomized covering upper bound applies for every t
    {
        double ck1 = choose_d(k, t - 1);
        double upper = (t + 1) * std::pow(static_cast<double>(t), t - 1) / std::numbers::log2e *
                       ck1 * log2n;
        report.bounds.push_back(
            {"f_upper_randomized", BoundDirection::upper, upper, "large n", ""});
    }

    if (t == 2) {
        int threshold = threshold_min_m(n, k);
        report.bounds.push_back({"f_lower_threshold", BoundDirection::lower,
                                 static_cast<double>(threshold), "", std::to_string(threshold)});
        if (k >= 3) {
            double h = binary_entropy(1.0 / k);
            report.bounds.push_back(
                {"f_lower_entropy", BoundDirection::lower, log2n / h, "large n", ""});
            report.bounds.push_back({"f_lower_weak", BoundDirection::lower,
                                     k * log2n / std::log2(k * std::numbers::e), "large n", ""});
            report.bounds.push_back(
                {"f_upper", BoundDirection::upper, k * log2n, "large n", ""});
        }
    } else {
        double ck1 = choose_d(k, t - 1);
        double lower = ck1 * std::pow(static_cast<double>(t - 1), t - 3) / 2.0 * log2n;
        report.bounds.push_back({"f_lower_general", BoundDirection::lower, lower, "large n", ""});
        if (t == k) {
            double shadow = std::pow(static_cast<double>(k), k - 2) / 2.0 * log2n;
            report.bounds.push_back(
                {"f_lower_shadow", BoundDirection::lower, shadow, "large n", ""});
        }
    }
    return report;
}

CliqueCoverFormulas clique_cover_formulas(long long n, int k) {
    if (n < 2) throw std::invalid_argument("clique_cover_formulas: need n >= 2");
    if (k < 2) throw std::invalid_argument("clique_cover_formulas: need k >= 2");
    CliqueCoverFormulas out;
    out.orlin = orlin_min_m(n);
    if (k >= 3) {
        out.hypergraph_lb = std::log2(static_cast<double>(n) / k) / binary_entropy(1.0 / k);
        out.has_hypergraph_lb = true;
    }
    return out;
}

}  // namespace bollobas
