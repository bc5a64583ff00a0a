#pragma once

#include <cstdint>

#include "mimo/complex_matrix.hpp"

namespace mimo {

enum class ObjectiveKind {
    MaxMse,           // max_i mse_i
    SumMse,           // sum_i mse_i
    ProdMse,          // prod_i mse_i (det of the diagonal MSE matrix)
    WeightedGeoMean,  // normalized weighted geometric mean of the mses
    MinSinrMax,       // -min_i SINR_i, SINR_i = 1/mse_i - 1
    SumBer,           // sum of per-stream Gray square-QAM BER estimates
};

enum class SchurClass { ConvexInLogMse, ConcaveInLogMse };

// A design criterion over per-stream MSEs together with its behaviour under
// majorization of the log-MSE vector. Build through the factory functions so
// the kind/class pairing stays consistent.
struct Objective {
    ObjectiveKind kind = ObjectiveKind::SumMse;
    SchurClass schur_class = SchurClass::ConvexInLogMse;
    RealVector weights;                   // WeightedGeoMean only, strictly positive
    std::size_t constellation_size = 0;   // SumBer only, square QAM order

    static Objective max_mse() { return {ObjectiveKind::MaxMse, SchurClass::ConvexInLogMse, {}, 0}; }
    static Objective sum_mse() { return {ObjectiveKind::SumMse, SchurClass::ConvexInLogMse, {}, 0}; }
    // ProdMse is invariant under sum-preserving averaging of the log-MSEs, so
    // it is both Schur-convex and Schur-concave; it is catalogued as concave,
    // which routes it to the linear (C = I) design. The equal-MSE design
    // attains the same objective value.
    static Objective prod_mse() { return {ObjectiveKind::ProdMse, SchurClass::ConcaveInLogMse, {}, 0}; }
    static Objective weighted_geo_mean(RealVector w);
    static Objective min_sinr_max() { return {ObjectiveKind::MinSinrMax, SchurClass::ConvexInLogMse, {}, 0}; }
    static Objective sum_ber(std::size_t m);
};

// True iff b additively majorizes a (a ≺ b): after sorting both descending,
// every prefix sum of a is <= the matching prefix sum of b and the totals are
// equal (absolute tolerance 1e-9).
bool additive_majorizes(const RealVector& a, const RealVector& b);

// True iff b multiplicatively majorizes a (a ≺× b). Entries must be strictly
// positive. Equivalent to additive_majorizes(ln a, ln b).
bool multiplicative_majorizes(const RealVector& a, const RealVector& b);

// Gaussian tail Q(x) and the Gray square-QAM BER approximation
// ber ≈ (4/log2 M)(1 - 1/sqrt(M)) Q(sqrt(3 sinr/(M-1))).
double q_function(double x);
double qam_ber_estimate(double sinr, std::size_t m);

double eval_objective(const Objective& obj, const RealVector& mses);

struct SchurVerifyReport {
    std::size_t trials = 0;
    std::size_t violations = 0;
    double worst_violation = 0.0;  // largest tolerance breach seen
};

// Samples pairs a ≺ b of log-MSE vectors (a built by averaging sub-blocks of
// b) and checks the declared Schur class of the objective against g(e^a) vs
// g(e^b). A correct catalog entry yields zero violations.
SchurVerifyReport schur_verify(const Objective& obj, std::size_t trials, std::uint64_t seed);

}  // namespace mimo
