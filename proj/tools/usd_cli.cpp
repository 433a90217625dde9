// Command line front end: discrimination bounds, POVM construction checks,
// coherent-family sweeps, Monte Carlo runs and the convexity probe.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "usd/coherent.hpp"
#include "usd/discrimination.hpp"
#include "usd/simulate.hpp"
#include "usd/states.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitIo = 3;
constexpr int kExitPhysics = 4;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct StateSelection {
    std::vector<double> coeffs;
    std::optional<double> theta;
    bool coherent = false;
    std::size_t n = 0;
    double alpha_sq = -1.0;
    double alpha_re = 0.0, alpha_im = 0.0;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--coeffs", coeffs, "comma-separated real coefficients c_0,...,c_{N-1}")
            ->delimiter(',');
        cmd->add_option("--theta", theta, "two-state angle in [0, pi/4]");
        cmd->add_flag("--coherent", coherent, "use the symmetric coherent family");
        cmd->add_option("--n", n, "number of states for the coherent family");
        cmd->add_option("--alpha-sq", alpha_sq, "|alpha|^2 of the coherent family");
        cmd->add_option("--alpha-re", alpha_re, "Re(alpha); only |alpha|^2 matters");
        cmd->add_option("--alpha-im", alpha_im, "Im(alpha); only |alpha|^2 matters");
    }

    double resolved_alpha_sq() const {
        if (alpha_sq >= 0.0) return alpha_sq;
        return alpha_re * alpha_re + alpha_im * alpha_im;
    }

    usd::SymmetricSet build() const {
        if (theta) return usd::two_state_from_angle(*theta);
        if (coherent) {
            if (n < 2) throw usd::BadLength("--coherent needs --n >= 2");
            const usd::CoherentFamily family{
                usd::Complex(std::sqrt(resolved_alpha_sq()), 0.0), n};
            std::vector<double> moduli = usd::coefficient_moduli(family);
            std::vector<usd::Complex> c(moduli.size());
            // the coherent c_r are determined only up to phase by the
            // overlaps; real nonnegative is the canonical choice
            for (std::size_t r = 0; r < moduli.size(); ++r)
                c[r] = usd::Complex(std::sqrt(std::max(moduli[r], 0.0)), 0.0);
            return usd::from_coefficients(std::move(c));
        }
        if (!coeffs.empty()) {
            std::vector<usd::Complex> c(coeffs.begin(), coeffs.end());
            return usd::from_coefficients(std::move(c));
        }
        throw usd::BadLength("specify --coeffs, --theta or --coherent");
    }
};

std::vector<double> moduli_of(const usd::SymmetricSet& set) {
    std::vector<double> moduli(set.n);
    for (std::size_t k = 0; k < set.n; ++k) moduli[k] = std::norm(set.coefficients[k]);
    return moduli;
}

int cmd_bound(const StateSelection& sel) {
    const usd::SymmetricSet set = sel.build();
    const std::vector<double> moduli = moduli_of(set);
    std::cout << "N " << set.n << "\n";
    for (std::size_t r = 0; r < moduli.size(); ++r)
        std::cout << "c2_" << r << " " << fmt17(moduli[r]) << "\n";
    std::cout << "argmin " << usd::argmin_modulus(moduli) << "\n";
    std::cout << "bound " << fmt17(usd::optimal_bound(moduli)) << "\n";
    return kExitOk;
}

int cmd_povm(const StateSelection& sel, double psd_tol) {
    const usd::SymmetricSet set = sel.build();
    const auto [povm, bound] = usd::optimal_povm(set, psd_tol);
    const std::size_t n = set.n;

    double completeness = (povm.failure_element + povm.total_detection -
                           usd::CMatrix::identity(n))
                              .max_abs();
    double zero_error = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const usd::CMatrix psi = set.vectors.column(j);
        for (std::size_t jp = 0; jp < n; ++jp) {
            const double p =
                usd::inner_product(psi, povm.detection_elements[jp] * psi).real();
            const double target = (j == jp) ? bound : 0.0;
            zero_error = std::max(zero_error, std::abs(p - target));
        }
    }
    const auto eig = usd::hermitian_eig(povm.failure_element);
    const double lambda_plus = usd::max_eigenvalue(povm.total_detection);

    std::cout << "N " << n << "\n"
              << "bound " << fmt17(bound) << "\n"
              << "lambda_plus_E_D " << fmt17(lambda_plus) << "\n"
              << "completeness_residual " << fmt17(completeness) << "\n"
              << "zero_error_residual " << fmt17(zero_error) << "\n"
              << "min_eigenvalue_E_F " << fmt17(eig.eigenvalues.front()) << "\n";

    if (completeness > 1e-9 || zero_error > 1e-9 ||
        eig.eigenvalues.front() < -psd_tol || std::abs(lambda_plus - 1.0) > 1e-9) {
        std::cerr << "error: POVM invariant violated\n";
        return kExitPhysics;
    }
    return kExitOk;
}

int cmd_coherent_sweep(std::size_t n, double lo, double hi, std::size_t points,
                       const std::string& out_path) {
    std::vector<double> grid;
    grid.reserve(points);
    if (points == 1) {
        grid.push_back(lo);
    } else {
        for (std::size_t i = 0; i < points; ++i)
            grid.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                    static_cast<double>(points - 1));
    }
    const usd::SweepTable table = usd::bound_vs_alpha(n, grid);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return kExitIo;
    }
    out << "alpha_sq";
    for (std::size_t r = 0; r < n; ++r) out << ",c2_" << r;
    out << ",bound,argmin\n";
    for (std::size_t i = 0; i < table.grid.size(); ++i) {
        out << fmt17(table.grid[i]);
        for (double m : table.moduli[i]) out << "," << fmt17(m);
        out << "," << fmt17(table.bound[i]) << "," << table.argmin[i] << "\n";
    }
    if (!out) {
        std::cerr << "error: write failure on " << out_path << "\n";
        return kExitIo;
    }
    std::cout << "wrote " << table.grid.size() << " rows to " << out_path << "\n";
    if (!table.bound_nondecreasing)
        std::cout << "note: bound is not nondecreasing on this grid\n";
    return kExitOk;
}

int cmd_crossings(std::size_t n, double max_alpha_sq) {
    const auto crossings = usd::find_crossings(n, max_alpha_sq);
    if (crossings.empty()) {
        std::cout << "no crossings\n";
        return kExitOk;
    }
    for (const auto& c : crossings)
        std::cout << "crossing alpha_sq " << fmt17(c.alpha_sq) << " argmin "
                  << c.outgoing_argmin << "\n";
    return kExitOk;
}

int cmd_simulate(const StateSelection& sel, std::uint64_t trials, std::uint64_t seed,
                 const std::string& out_path, double psd_tol) {
    const usd::SymmetricSet set = sel.build();
    const auto [povm, bound] = usd::optimal_povm(set, psd_tol);
    const usd::SimulationReport report = usd::run_trials(set, povm, trials, seed);

    std::cout << "trials " << report.trials << "\n"
              << "seed " << report.seed << "\n"
              << "expected_success " << fmt17(report.expected_success) << "\n"
              << "empirical_success " << fmt17(report.empirical_success) << "\n"
              << "wrong_conclusive " << report.total_wrong() << "\n"
              << "success_sigma " << fmt17(report.success_sigma()) << "\n";

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << out_path << " for writing\n";
            return kExitIo;
        }
        out << "state,correct,wrong,inconclusive\n";
        for (std::size_t j = 0; j < report.per_state.size(); ++j)
            out << j << "," << report.per_state[j].correct << ","
                << report.per_state[j].wrong << ","
                << report.per_state[j].inconclusive << "\n";
    }

    if (report.total_wrong() > 0) {
        std::cerr << "error: zero-error condition violated empirically\n";
        return kExitPhysics;
    }
    return kExitOk;
}

int cmd_convexity(std::size_t cases, std::uint64_t seed) {
    std::vector<std::size_t> dims;
    for (std::size_t d = 2; d <= 8; ++d) dims.push_back(d);
    const double slack = usd::convexity_probe(dims, 5, cases, seed);
    std::cout << "cases " << cases << "\n"
              << "worst_slack " << fmt17(slack) << "\n";
    if (slack < -1e-10) {
        std::cerr << "error: convexity violated\n";
        return kExitPhysics;
    }
    return kExitOk;
}

int cmd_idp(double overlap) {
    std::cout << "idp " << fmt17(usd::idp_limit(usd::Complex(overlap, 0.0))) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unambiguous discrimination of symmetric quantum states"};
    app.require_subcommand(1);

    double psd_tol = 1e-9;
    app.add_option("--tol-psd", psd_tol, "positivity tolerance")->capture_default_str();

    StateSelection bound_sel, povm_sel, sim_sel;

    auto* bound = app.add_subcommand("bound", "maximum discrimination probability");
    bound_sel.add_flags(bound);

    auto* povm = app.add_subcommand("povm", "construct and validate the optimal POVM");
    povm_sel.add_flags(povm);

    std::size_t sweep_n = 10, sweep_points = 1000;
    double sweep_lo = 0.0, sweep_hi = 10.0;
    std::string sweep_out = "sweep.csv";
    auto* sweep = app.add_subcommand("coherent-sweep", "CSV sweep of |c_r|^2 and the bound");
    sweep->add_option("--n", sweep_n)->capture_default_str();
    sweep->add_option("--min", sweep_lo)->capture_default_str();
    sweep->add_option("--max", sweep_hi)->capture_default_str();
    sweep->add_option("--points", sweep_points)->capture_default_str();
    sweep->add_option("--out", sweep_out)->capture_default_str();

    std::size_t cross_n = 10;
    double cross_max = 10.0;
    auto* cross = app.add_subcommand("crossings", "minimum-coefficient crossing points");
    cross->add_option("--n", cross_n)->capture_default_str();
    cross->add_option("--max", cross_max)->capture_default_str();

    std::uint64_t sim_trials = 100000, sim_seed = 1;
    std::string sim_out;
    auto* sim = app.add_subcommand("simulate", "Monte Carlo run of the optimal POVM");
    sim_sel.add_flags(sim);
    sim->add_option("--trials", sim_trials)->capture_default_str();
    sim->add_option("--seed", sim_seed)->capture_default_str();
    sim->add_option("--out", sim_out, "optional CSV of per-state tallies");

    std::size_t conv_cases = 1000;
    std::uint64_t conv_seed = 1;
    auto* conv = app.add_subcommand("convexity", "randomized max-eigenvalue convexity probe");
    conv->add_option("--cases", conv_cases)->capture_default_str();
    conv->add_option("--seed", conv_seed)->capture_default_str();

    double idp_overlap = 0.0;
    auto* idp = app.add_subcommand("idp", "two-state Ivanovic-Dieks-Peres limit");
    idp->add_option("--overlap", idp_overlap, "|<psi_+|psi_->|")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (bound->parsed()) return cmd_bound(bound_sel);
        if (povm->parsed()) return cmd_povm(povm_sel, psd_tol);
        if (sweep->parsed())
            return cmd_coherent_sweep(sweep_n, sweep_lo, sweep_hi, sweep_points, sweep_out);
        if (cross->parsed()) return cmd_crossings(cross_n, cross_max);
        if (sim->parsed()) return cmd_simulate(sim_sel, sim_trials, sim_seed, sim_out, psd_tol);
        if (conv->parsed()) return cmd_convexity(conv_cases, conv_seed);
        if (idp->parsed()) return cmd_idp(idp_overlap);
    } catch (const usd::DegenerateCoefficient& e) {
        std::cerr << "error: " << e.what()
                  << " (every Fourier coefficient c_r must be non-zero for all r)\n";
        return kExitBadInput;
    } catch (const usd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
