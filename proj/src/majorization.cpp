#include "mimo/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mimo/rng.hpp"

namespace mimo {

namespace {

constexpr double kSumTol = 1e-9;

RealVector sorted_descending(RealVector v) {
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

void require_same_length(const RealVector& a, const RealVector& b) {
    if (a.size() != b.size() || a.empty())
        throw DimensionError("majorization: vectors must have equal nonzero length");
}

RealVector log_vector(const RealVector& v, const char* who) {
    RealVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > 0.0)) throw DomainError(std::string(who) + ": entries must be strictly positive");
        out[i] = std::log(v[i]);
    }
    return out;
}

}  // namespace

Objective Objective::weighted_geo_mean(RealVector w) {
    for (double x : w)
        if (!(x > 0.0)) throw DomainError("weighted_geo_mean: weights must be strictly positive");
    if (w.empty()) throw DomainError("weighted_geo_mean: weights must be nonempty");
    return {ObjectiveKind::WeightedGeoMean, SchurClass::ConcaveInLogMse, std::move(w), 0};
}

Objective Objective::sum_ber(std::size_t m) {
    const auto root = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(m))));
    if (m < 4 || root * root != m) throw DomainError("sum_ber: constellation size must be square, >= 4");
    return {ObjectiveKind::SumBer, SchurClass::ConvexInLogMse, {}, m};
}

bool additive_majorizes(const RealVector& a, const RealVector& b) {
    require_same_length(a, b);
    const RealVector as = sorted_descending(a);
    const RealVector bs = sorted_descending(b);
    double prefix_a = 0.0, prefix_b = 0.0;
    for (std::size_t j = 0; j + 1 < as.size(); ++j) {
        prefix_a += as[j];
        prefix_b += bs[j];
        if (prefix_a > prefix_b + kSumTol) return false;
    }
    prefix_a += as.back();
    prefix_b += bs.back();
    return std::abs(prefix_a - prefix_b) <= kSumTol;
}

bool multiplicative_majorizes(const RealVector& a, const RealVector& b) {
    return additive_majorizes(log_vector(a, "multiplicative_majorizes"),
                              log_vector(b, "multiplicative_majorizes"));
}

double q_function(double x) { return 0.5 * std::erfc(x * 0.7071067811865475244); }

double qam_ber_estimate(double sinr, std::size_t m) {
    const double md = static_cast<double>(m);
    const double bits = std::log2(md);
    return (4.0 / bits) * (1.0 - 1.0 / std::sqrt(md)) * q_function(std::sqrt(3.0 * sinr / (md - 1.0)));
}

double eval_objective(const Objective& obj, const RealVector& mses) {
    if (mses.empty()) throw DimensionError("eval_objective: empty MSE vector");
    for (double m : mses)
        if (!(m > 0.0)) throw DomainError("eval_objective: MSEs must be strictly positive");

    switch (obj.kind) {
        case ObjectiveKind::MaxMse:
            return *std::max_element(mses.begin(), mses.end());
        case ObjectiveKind::SumMse: {
            double s = 0.0;
            for (double m : mses) s += m;
            return s;
        }
        case ObjectiveKind::ProdMse: {
            double log_p = 0.0;
            for (double m : mses) log_p += std::log(m);
            return std::exp(log_p);
        }
        case ObjectiveKind::WeightedGeoMean: {
            if (obj.weights.size() != mses.size())
                throw DimensionError("eval_objective: weight count must match stream count");
            // Symmetrized pairing: the largest weight multiplies the smallest
            // MSE. This is the ordering the Schur-concave design achieves and
            // it makes the objective a symmetric function of the streams.
            RealVector l = sorted_descending(log_vector(mses, "eval_objective"));
            RealVector w = sorted_descending(obj.weights);
            std::reverse(w.begin(), w.end());
            double wsum = 0.0, acc = 0.0;
            for (std::size_t i = 0; i < l.size(); ++i) {
                acc += w[i] * l[i];
                wsum += w[i];
            }
            return std::exp(acc / wsum);
        }
        case ObjectiveKind::MinSinrMax: {
            double worst = *std::max_element(mses.begin(), mses.end());
            if (!(worst < 1.0)) throw DomainError("eval_objective: MinSinrMax needs MSEs in (0,1)");
            return -(1.0 / worst - 1.0);
        }
        case ObjectiveKind::SumBer: {
            double s = 0.0;
            for (double m : mses) {
                if (!(m < 1.0)) throw DomainError("eval_objective: SumBer needs MSEs in (0,1)");
                s += qam_ber_estimate(1.0 / m - 1.0, obj.constellation_size);
            }
            return s;
        }
    }
    throw DomainError("eval_objective: unknown objective kind");
}

SchurVerifyReport schur_verify(const Objective& obj, std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("schur_verify: trials must be >= 1");
    Rng rng(seed);
    SchurVerifyReport report;
    report.trials = trials;

    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t k = 2 + rng.index(5);
        RealVector b(k);
        for (double& x : b) x = rng.uniform(std::log(1e-3), std::log(0.999));

        // Averaging a random sub-block replaces its entries by their mean, a
        // doubly stochastic map, so a ≺ b by construction.
        RealVector a = b;
        const std::size_t rounds = 1 + rng.index(3);
        for (std::size_t r = 0; r < rounds; ++r) {
            const std::size_t lo = rng.index(k);
            const std::size_t hi = lo + 1 + rng.index(k - lo);
            double mean = 0.0;
            for (std::size_t i = lo; i < hi; ++i) mean += a[i];
            mean /= static_cast<double>(hi - lo);
            for (std::size_t i = lo; i < hi; ++i) a[i] = mean;
        }

        RealVector mses_a(k), mses_b(k);
        for (std::size_t i = 0; i < k; ++i) {
            mses_a[i] = std::exp(a[i]);
            mses_b[i] = std::exp(b[i]);
        }
        Objective trial_obj = obj;
        if (obj.kind == ObjectiveKind::WeightedGeoMean && obj.weights.size() != k) {
            trial_obj.weights.resize(k);
            for (double& w : trial_obj.weights) w = rng.uniform(0.1, 2.0);
        }

        const double ga = eval_objective(trial_obj, mses_a);
        const double gb = eval_objective(trial_obj, mses_b);
        const double tol = 1e-9 * (1.0 + std::abs(ga) + std::abs(gb));
        const double breach =
            trial_obj.schur_class == SchurClass::ConvexInLogMse ? ga - gb : gb - ga;
        if (breach > tol) {
            ++report.violations;
            report.worst_violation = std::max(report.worst_violation, breach);
        }
    }
    return report;
}

}  // namespace mimo
