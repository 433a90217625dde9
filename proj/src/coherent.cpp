#include "usd/coherent.hpp"

#include <algorithm>
#include <cmath>

namespace usd {

namespace {

std::vector<double> moduli_at(std::size_t n, double alpha_sq) {
    std::vector<double> out(n);
    for (std::size_t r = 0; r < n; ++r) {
        Complex acc{};
        for (std::size_t j = 0; j < n; ++j) {
            const Complex kernel =
                std::exp(alpha_sq * (root_of_unity(n, static_cast<long long>(j)) - 1.0));
            acc += root_of_unity(n, -static_cast<long long>(j * r)) * kernel;
        }
        acc /= static_cast<double>(n);
        if (std::abs(acc.imag()) > 1e-10)
            throw NegativeCoefficient("imaginary residue in coherent |c_r|^2");
        if (acc.real() < -1e-10)
            throw NegativeCoefficient("negative coherent |c_r|^2");
        out[r] = std::max(acc.real(), 0.0);
    }
    return out;
}

std::size_t argmin_of(const std::vector<double>& v) {
    return static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
}

} // namespace

Complex coherent_overlap(const CoherentFamily& family, std::size_t j, std::size_t jp) {
    if (j >= family.n || jp >= family.n) throw OutOfRange("state index out of range");
    const long long d = static_cast<long long>(j) - static_cast<long long>(jp);
    return std::exp(family.alpha_sq() * (root_of_unity(family.n, d) - 1.0));
}

std::vector<double> coefficient_moduli(const CoherentFamily& family) {
    if (family.n < 2) throw BadLength("need at least two states");
    return moduli_at(family.n, family.alpha_sq());
}

SweepTable bound_vs_alpha(std::size_t n, const std::vector<double>& alpha_sq_grid) {
    if (n < 2) throw BadLength("need at least two states");
    if (alpha_sq_grid.empty()) throw BadGrid("empty grid");
    for (std::size_t i = 0; i < alpha_sq_grid.size(); ++i) {
        if (alpha_sq_grid[i] < 0.0) throw BadGrid("grid values must be nonnegative");
        if (i > 0 && alpha_sq_grid[i] <= alpha_sq_grid[i - 1])
            throw BadGrid("grid must be strictly increasing");
    }

    SweepTable table;
    table.grid = alpha_sq_grid;
    table.moduli.reserve(alpha_sq_grid.size());
    for (double x : alpha_sq_grid) {
        std::vector<double> row = moduli_at(n, x);
        const double min_m = *std::min_element(row.begin(), row.end());
        table.bound.push_back(std::clamp(static_cast<double>(n) * min_m, 0.0, 1.0));
        table.argmin.push_back(argmin_of(row));
        table.moduli.push_back(std::move(row));
        const std::size_t i = table.bound.size() - 1;
        if (i > 0 && table.bound[i] < table.bound[i - 1] - 1e-12)
            table.bound_nondecreasing = false;
    }
    return table;
}

double derivative_residual(const CoherentFamily& family, std::size_t r, double step) {
    if (step < 1e-7 || step > 1e-3) throw OutOfRange("step outside [1e-7, 1e-3]");
    if (r >= family.n) throw OutOfRange("coefficient index out of range");
    const std::size_t n = family.n;
    const double x = family.alpha_sq();
    const std::vector<double> lo = moduli_at(n, std::max(x - step, 0.0));
    const std::vector<double> hi = moduli_at(n, x + step);
    const double width = (x + step) - std::max(x - step, 0.0);
    const double diff = (hi[r] - lo[r]) / width;
    const std::vector<double> here = moduli_at(n, x);
    const std::size_t prev = (r + n - 1) % n;
    return std::abs(diff - (here[prev] - here[r]));
}

std::vector<Crossing> find_crossings(std::size_t n, double alpha_sq_max) {
    if (n < 2) throw BadLength("need at least two states");
    if (alpha_sq_max <= 0.0) throw BadGrid("alpha_sq_max must be positive");

    // 100 grid points per unit of |alpha|^2. Below the resolution floor the
    // smallest moduli sit under double-precision cancellation noise (and the
    // bound is operationally zero), so the scan starts once the minimum
    // modulus is resolvable.
    constexpr double kResolutionFloor = 1e-12;
    const std::size_t points = std::max<std::size_t>(
        static_cast<std::size_t>(std::ceil(alpha_sq_max * 100.0)), 10);
    const double dx = alpha_sq_max / static_cast<double>(points);

    std::vector<Crossing> crossings;
    double prev_x = 0.0;
    std::size_t prev_arg = n; // unset
    for (std::size_t i = 1; i <= points; ++i) {
        const double x = dx * static_cast<double>(i);
        const std::vector<double> m = moduli_at(n, x);
        if (*std::min_element(m.begin(), m.end()) < kResolutionFloor) continue;
        const std::size_t arg = argmin_of(m);
        if (prev_arg == n) {
            prev_arg = arg;
            prev_x = x;
            continue;
        }
        if (arg != prev_arg) {
            // the minimum passes from |c_{r-1}|^2 to |c_r|^2 where the
            // derivative of the latter vanishes
            if (arg != (prev_arg + 1) % n)
                throw BadGrid("argmin jumped by more than one position; grid too coarse");
            // bisect on |c_arg|^2 - |c_prev_arg|^2, which changes sign at the crossing
            double lo = prev_x, hi = x;
            while (hi - lo > 1e-8) {
                const double mid = 0.5 * (lo + hi);
                const std::vector<double> m = moduli_at(n, mid);
                if (m[arg] < m[prev_arg]) hi = mid; else lo = mid;
            }
            crossings.push_back(Crossing{0.5 * (lo + hi), arg});
            prev_arg = arg;
        }
        prev_x = x;
    }
    return crossings;
}

FockVectors fock_vectors(const CoherentFamily& family, double tail_epsilon) {
    if (tail_epsilon <= 0.0 || tail_epsilon > 1e-6)
        throw OutOfRange("tail_epsilon must lie in (0, 1e-6]");
    const double x = family.alpha_sq();

    // smallest n_max with Poisson tail mass below tail_epsilon
    std::size_t cutoff = 0;
    double term = std::exp(-x); // P(n = 0)
    double cdf = term;
    while (1.0 - cdf >= tail_epsilon) {
        ++cutoff;
        if (cutoff > 4096) throw CutoffTooLarge("Fock cutoff exceeds 4096");
        term *= x / static_cast<double>(cutoff);
        cdf += term;
    }

    FockVectors out;
    out.cutoff = cutoff;
    out.vectors = CMatrix(cutoff + 1, family.n);
    const double norm_factor = std::exp(-x / 2.0);
    for (std::size_t j = 0; j < family.n; ++j) {
        const Complex aj = family.amplitude(j);
        Complex amp(norm_factor, 0.0); // alpha_j^m / sqrt(m!) * e^{-x/2}
        for (std::size_t m = 0; m <= cutoff; ++m) {
            out.vectors(m, j) = amp;
            amp *= aj / std::sqrt(static_cast<double>(m + 1));
        }
    }
    return out;
}

CMatrix truncated_phase_unitary(std::size_t n, std::size_t cutoff) {
    CMatrix u(cutoff + 1, cutoff + 1);
    for (std::size_t m = 0; m <= cutoff; ++m)
        u(m, m) = root_of_unity(n, static_cast<long long>(m));
    return u;
}

} // namespace usd
