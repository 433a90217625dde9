#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "usd/simulate.hpp"

using namespace usd;

TEST_CASE("von Neumann measurement on an orthonormal set is deterministic") {
    const auto set = from_coefficients({0.5, 0.5, 0.5, 0.5});
    const auto [povm, bound] = optimal_povm(set);
    CHECK(bound == doctest::Approx(1.0));
    RandomStream stream(1);
    for (int t = 0; t < 200; ++t) {
        const std::size_t j = t % 4;
        CHECK(sample_outcome(povm, j, set, stream) == j);
    }
}

TEST_CASE("never-succeed measurement always fails") {
    const auto set = two_state_from_angle(0.5);
    const auto kraus = build_kraus(set, reciprocal_set(set),
                                   ConditionalProbabilities::uniform(2, 0.0));
    const Povm povm = povm_from_kraus(kraus);
    RandomStream stream(2);
    for (int t = 0; t < 100; ++t)
        CHECK(sample_outcome(povm, t % 2, set, stream) == kOutcomeFail);
}

TEST_CASE("two-state optimal measurement statistics") {
    const auto set = two_state_from_angle(std::numbers::pi / 8.0);
    const auto [povm, bound] = optimal_povm(set);
    const SimulationReport report = run_trials(set, povm, 100000, 7);
    CHECK(report.total_wrong() == 0);
    CHECK(std::abs(report.empirical_success - 0.29289321881345254) <= 0.005);
    CHECK(report.expected_success == doctest::Approx(bound).epsilon(1e-9));

    // chi-square of per-state (correct, inconclusive) splits, 2 dof
    double chi2 = 0.0;
    for (std::size_t j = 0; j < 2; ++j) {
        const auto& t = report.per_state[j];
        const double nj = static_cast<double>(t.correct + t.wrong + t.inconclusive);
        const double e_succ = nj * bound;
        const double e_fail = nj * (1.0 - bound);
        chi2 += (static_cast<double>(t.correct) - e_succ) * (static_cast<double>(t.correct) - e_succ) / e_succ;
        chi2 += (static_cast<double>(t.inconclusive) - e_fail) * (static_cast<double>(t.inconclusive) - e_fail) / e_fail;
    }
    CHECK(chi2 < 13.816); // p = 0.001 critical value, 2 dof
}

TEST_CASE("single trial tallies exactly one outcome") {
    const auto set = two_state_from_angle(0.6);
    const auto [povm, bound] = optimal_povm(set);
    const SimulationReport report = run_trials(set, povm, 1, 3);
    std::uint64_t total = 0;
    for (const auto& t : report.per_state) total += t.correct + t.wrong + t.inconclusive;
    CHECK(total == 1);
    CHECK_THROWS_AS(run_trials(set, povm, 0, 3), OutOfRange);
}

TEST_CASE("reports are deterministic in the seed") {
    const auto set = two_state_from_angle(0.4);
    const auto [povm, bound] = optimal_povm(set);
    const SimulationReport a = run_trials(set, povm, 20000, 99);
    const SimulationReport b = run_trials(set, povm, 20000, 99);
    CHECK(a.empirical_success == b.empirical_success);
    for (std::size_t j = 0; j < 2; ++j) {
        CHECK(a.per_state[j].correct == b.per_state[j].correct);
        CHECK(a.per_state[j].wrong == b.per_state[j].wrong);
        CHECK(a.per_state[j].inconclusive == b.per_state[j].inconclusive);
    }
    const SimulationReport c = run_trials(set, povm, 20000, 100);
    CHECK(a.per_state[0].correct != c.per_state[0].correct);
}

TEST_CASE("malformed POVM is rejected") {
    const auto set = two_state_from_angle(0.5);
    Povm povm;
    povm.detection_elements = {CMatrix::identity(2), CMatrix::identity(2)};
    povm.total_detection = CMatrix::identity(2).scaled(2.0);
    povm.failure_element = CMatrix::identity(2) - povm.total_detection;
    RandomStream stream(5);
    CHECK_THROWS_AS(sample_outcome(povm, 0, set, stream), BadDistribution);
}

TEST_CASE("convexity probe") {
    std::vector<std::size_t> dims;
    for (std::size_t d = 2; d <= 8; ++d) dims.push_back(d);
    CHECK(convexity_probe(dims, 5, 1000, 1) >= -1e-10);

    // a single operator gives equality
    CHECK(std::abs(convexity_probe({4}, 1, 10, 2)) <= 1e-10);
}

TEST_CASE("convexity equality for commuting operators with aligned maxima") {
    CMatrix a(2, 2), b(2, 2);
    a(0, 0) = 3.0;
    a(1, 1) = 1.0;
    b(0, 0) = 2.0;
    b(1, 1) = -1.0;
    const double lhs = max_eigenvalue(a.scaled(0.5) + b.scaled(1.5));
    const double rhs = 0.5 * max_eigenvalue(a) + 1.5 * max_eigenvalue(b);
    CHECK(std::abs(lhs - rhs) <= 1e-12);
}
