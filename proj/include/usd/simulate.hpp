#pragma once

#include <cstdint>
#include <vector>

#include "usd/discrimination.hpp"

namespace usd {

inline constexpr std::size_t kOutcomeFail = static_cast<std::size_t>(-1);

struct StateTally {
    std::uint64_t correct = 0;
    std::uint64_t wrong = 0;
    std::uint64_t inconclusive = 0;
};

struct SimulationReport {
    std::uint64_t trials = 0;
    std::vector<StateTally> per_state;
    double empirical_success = 0.0;
    double expected_success = 0.0;
    std::uint64_t seed = 0;

    std::uint64_t total_wrong() const;
    /// |empirical - expected| in units of the binomial standard error.
    double success_sigma() const;
};

/// One Born-rule draw for a system prepared in |psi_{state_index}>.
/// Returns the firing detector index, or kOutcomeFail.
std::size_t sample_outcome(const Povm& povm, std::size_t state_index,
                           const SymmetricSet& set, RandomStream& stream);

SimulationReport run_trials(const SymmetricSet& set, const Povm& povm,
                            std::uint64_t trials, std::uint64_t seed);

/// Randomized check of max-eigenvalue convexity: returns the smallest
/// observed value of sum_l a_l lambda_+(E_l) - lambda_+(sum_l a_l E_l).
double convexity_probe(const std::vector<std::size_t>& dims, std::size_t max_operators,
                       std::size_t cases, std::uint64_t seed);

/// Random Hermitian matrix with entries uniform in [-1, 1] (off-diagonal
/// real and imaginary parts independently).
CMatrix random_hermitian(std::size_t dim, RandomStream& stream);

} // namespace usd
