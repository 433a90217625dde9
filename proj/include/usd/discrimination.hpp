#pragma once

#include <vector>

#include "usd/states.hpp"

namespace usd {

/// Conditional success probabilities P_j with equal priors 1/N.
struct ConditionalProbabilities {
    std::vector<double> p;

    static ConditionalProbabilities uniform(std::size_t n, double value);
    double mean() const;
};

struct KrausSet {
    std::vector<CMatrix> detection; // A_j, maps |psi_j> to sqrt(P_j) e_j
    CMatrix failure;                // A_F
};

struct Povm {
    std::vector<CMatrix> detection_elements; // E_Dj
    CMatrix failure_element;                 // E_F
    CMatrix total_detection;                 // E_D = sum_j E_Dj
};

struct OptimizerConfig {
    double coarse_step = 0.02;
    double refine_step = 1e-5;
    double psd_tol = 1e-9;
};

KrausSet build_kraus(const SymmetricSet& set, const ReciprocalSet& recip,
                     const ConditionalProbabilities& probs, double psd_tol = 1e-9);

Povm povm_from_kraus(const KrausSet& kraus);

/// E_D assembled coefficient-wise in the canonical basis; independent of the
/// Kraus route but must agree with it.
CMatrix detection_operator(const SymmetricSet& set, const ConditionalProbabilities& probs);

/// (1/N) sum_l U^l E_D U^{-l}; diagonal with entries mean(P)/(N |c_r|^2).
CMatrix averaged_operator(const SymmetricSet& set, const ConditionalProbabilities& probs);

/// Least upper bound on P_D: N * min_r |c_r|^2, clamped to [0,1].
double optimal_bound(const std::vector<double>& moduli);

/// Index of the smallest modulus (lowest index on ties).
std::size_t argmin_modulus(const std::vector<double>& moduli);

/// Ivanovic-Dieks-Peres two-state limit 1 - |overlap|.
double idp_limit(Complex overlap);

struct OptimalResult {
    Povm povm;
    double bound = 0.0;
};

OptimalResult optimal_povm(const SymmetricSet& set, double psd_tol = 1e-9);

/// Grid + coordinate-refinement oracle maximizing mean(P) subject to
/// E_F = I - E_D(P) remaining PSD. N <= 4.
double brute_force_max(const SymmetricSet& set, const OptimizerConfig& config = {});

} // namespace usd
