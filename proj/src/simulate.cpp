#include "usd/simulate.hpp"

#include <cmath>
#include <limits>

namespace usd {

std::uint64_t SimulationReport::total_wrong() const {
    std::uint64_t w = 0;
    for (const auto& t : per_state) w += t.wrong;
    return w;
}

double SimulationReport::success_sigma() const {
    if (trials == 0) return 0.0;
    const double p = expected_success;
    const double se = std::sqrt(std::max(p * (1.0 - p), 1e-300) / static_cast<double>(trials));
    return std::abs(empirical_success - expected_success) / se;
}

namespace {

std::vector<double> outcome_distribution(const Povm& povm, std::size_t state_index,
                                         const SymmetricSet& set) {
    const std::size_t n = set.n;
    const CMatrix psi = set.vectors.column(state_index);
    std::vector<double> probs(n + 1, 0.0); // detectors 0..N-1, FAIL last
    double total = 0.0;
    for (std::size_t jp = 0; jp < n; ++jp) {
        const Complex amp = inner_product(psi, povm.detection_elements[jp] * psi);
        double p = amp.real();
        if (p < -1e-12) throw BadDistribution("Born probability below clamping threshold");
        p = std::max(p, 0.0);
        probs[jp] = p;
        total += p;
    }
    if (total > 1.0 + 1e-9) throw BadDistribution("detection probabilities exceed 1");
    probs[n] = std::max(1.0 - total, 0.0);
    const double sum = total + probs[n];
    if (std::abs(sum - 1.0) > 1e-9) throw BadDistribution("outcome probabilities do not sum to 1");
    for (auto& p : probs) p /= sum;
    return probs;
}

std::size_t draw_from(const std::vector<double>& probs, std::size_t n, RandomStream& stream) {
    const double u = stream.next_uniform();
    double cdf = 0.0;
    for (std::size_t jp = 0; jp <= n; ++jp) {
        cdf += probs[jp];
        if (u < cdf) return jp == n ? kOutcomeFail : jp;
    }
    return kOutcomeFail;
}

} // namespace

std::size_t sample_outcome(const Povm& povm, std::size_t state_index,
                           const SymmetricSet& set, RandomStream& stream) {
    if (state_index >= set.n) throw OutOfRange("state index out of range");
    return draw_from(outcome_distribution(povm, state_index, set), set.n, stream);
}

SimulationReport run_trials(const SymmetricSet& set, const Povm& povm,
                            std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw OutOfRange("need at least one trial");
    const std::size_t n = set.n;

    std::vector<std::vector<double>> dist;
    dist.reserve(n);
    double expected = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        dist.push_back(outcome_distribution(povm, j, set));
        expected += dist.back()[j];
    }
    expected /= static_cast<double>(n);

    SimulationReport report;
    report.trials = trials;
    report.seed = seed;
    report.per_state.resize(n);
    report.expected_success = expected;

    RandomStream stream(seed);
    std::uint64_t conclusive_correct = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::size_t j = std::min(static_cast<std::size_t>(stream.next_uniform() *
                                                                static_cast<double>(n)),
                                       n - 1);
        const std::size_t outcome = draw_from(dist[j], n, stream);
        if (outcome == kOutcomeFail) {
            ++report.per_state[j].inconclusive;
        } else if (outcome == j) {
            ++report.per_state[j].correct;
            ++conclusive_correct;
        } else {
            ++report.per_state[j].wrong;
        }
    }
    report.empirical_success =
        static_cast<double>(conclusive_correct) / static_cast<double>(trials);
    return report;
}

CMatrix random_hermitian(std::size_t dim, RandomStream& stream) {
    CMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = Complex(2.0 * stream.next_uniform() - 1.0, 0.0);
        for (std::size_t j = i + 1; j < dim; ++j) {
            const Complex v(2.0 * stream.next_uniform() - 1.0,
                            2.0 * stream.next_uniform() - 1.0);
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return m;
}

double convexity_probe(const std::vector<std::size_t>& dims, std::size_t max_operators,
                       std::size_t cases, std::uint64_t seed) {
    for (std::size_t d : dims)
        if (d < 2) throw OutOfRange("dims must each be >= 2");
    if (dims.empty() || cases == 0 || max_operators < 1)
        throw OutOfRange("need at least one dim, case and operator");

    RandomStream stream(seed);
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t dim = dims[c % dims.size()];
        const std::size_t n_ops =
            2 > max_operators ? max_operators
                              : 2 + static_cast<std::size_t>(stream.next_uniform() *
                                                             static_cast<double>(max_operators - 1));
        CMatrix weighted_sum(dim, dim);
        double rhs = 0.0;
        for (std::size_t l = 0; l < n_ops; ++l) {
            const double weight = stream.next_uniform() + 1e-3;
            const CMatrix e = random_hermitian(dim, stream);
            weighted_sum = weighted_sum + e.scaled(weight);
            rhs += weight * max_eigenvalue(e);
        }
        worst = std::min(worst, rhs - max_eigenvalue(weighted_sum));
    }
    return worst;
}

} // namespace usd
