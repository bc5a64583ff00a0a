#pragma once

#include "mimo/complex_matrix.hpp"
#include "mimo/majorization.hpp"

namespace mimo {

enum class Scheme { Dfe, Thp };

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedObjectiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The physical problem input: channel H (Nr x Nt), noise covariance Rn
// (Hermitian PD), the scheme scale sigma^2 (1 for DFE, M/(M-1) for THP), and
// the number of data streams K <= min(Nt, Nr).
struct ChannelInstance {
    ComplexMatrix h;
    ComplexMatrix rn;
    double sigma2 = 1.0;
    std::size_t streams = 0;

    std::size_t rx() const { return h.rows(); }
    std::size_t tx() const { return h.cols(); }
    void validate() const;
};

// Solver output: precoder P (Nt x K), feedforward G (Nr x K), feedback
// C = I + B (K x K unit-diagonal lower triangular), per-stream MSEs.
struct TransceiverDesign {
    Scheme scheme = Scheme::Dfe;
    ComplexMatrix precoder;
    ComplexMatrix feedforward;
    ComplexMatrix feedback;
    RealVector stream_mses;
    double objective_value = 0.0;

    std::size_t streams() const { return feedback.rows(); }
};

struct WaterFillingResult {
    std::size_t active_count = 0;
    std::vector<std::size_t> active_modes;  // indices into the input spectrum
    RealVector amplitudes_squared;          // phi_i^2 per active mode, same order
    double water_level = 0.0;
};

// E = sigma^2 C C^H - sigma^2 C P^H H^H G - sigma^2 G^H H P C^H + G^H R_y G
// with R_y = sigma^2 H P P^H H^H + Rn.
ComplexMatrix mse_matrix(const ChannelInstance& ch, const ComplexMatrix& p,
                         const ComplexMatrix& g, const ComplexMatrix& c);

// G = sigma^2 R_y^{-1} H P C^H; each column minimizes its stream's MSE.
ComplexMatrix optimal_feedforward(const ChannelInstance& ch, const ComplexMatrix& p,
                                  const ComplexMatrix& c);

// M = sigma^2 (I + sigma^2 P^H H^H Rn^{-1} H P)^{-1}; the MSE matrix at the
// optimal feedforward is C M C^H.
ComplexMatrix reduced_mse(const ChannelInstance& ch, const ComplexMatrix& p);

struct FeedbackResult {
    ComplexMatrix c;  // unit-diagonal lower triangular
    RealVector mses;  // L_ii^2, the resulting diagonal MSE matrix
};

// With M = L L^H, the trace-minimizing unit-diagonal lower triangular matrix
// is C = Diag(L_11..L_KK) L^{-1}, yielding E = Diag(L_ii^2).
FeedbackResult optimal_feedback(const ComplexMatrix& m);

// Maximizes sum_i w_i ln(1 + lambda_i p_i) subject to sum p_i <= budget and
// p_i >= 0, via p_i = (w_i mu - 1/lambda_i)^+. Empty weights mean uniform.
WaterFillingResult waterfill(const RealVector& eigenvalues, double budget,
                             const RealVector& weights = {});

// Joint design of P, G, C for the given power budget and objective.
TransceiverDesign design_transceiver(const ChannelInstance& ch, double total_power,
                                     const Objective& obj);

// ln det(I + sigma^2 P^H H^H Rn^{-1} H P), in nats.
double mutual_information(const ChannelInstance& ch, const ComplexMatrix& p);

// SINR_i = 1/mse_i - 1. Valid for the DFE model only.
RealVector sinr_per_stream(const TransceiverDesign& design);

}  // namespace mimo
