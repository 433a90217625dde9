#pragma once

#include <vector>

#include "usd/numerics.hpp"

namespace usd {

/// N coherent states alpha * e^{2 pi i j / N}; only |alpha|^2 enters any
/// derived quantity.
struct CoherentFamily {
    Complex alpha;
    std::size_t n = 0;

    double alpha_sq() const { return std::norm(alpha); }
    Complex amplitude(std::size_t j) const { return alpha * root_of_unity(n, static_cast<long long>(j)); }
};

struct SweepTable {
    std::vector<double> grid;                // |alpha|^2 values
    std::vector<std::vector<double>> moduli; // per grid point, |c_r|^2
    std::vector<double> bound;               // N * min(row)
    std::vector<std::size_t> argmin;         // index of the smallest modulus
    bool bound_nondecreasing = true;         // checked, not assumed
};

/// Exact overlap <alpha_j' | alpha_j> = exp(|alpha|^2 (e^{2 pi i (j-j')/N} - 1)).
Complex coherent_overlap(const CoherentFamily& family, std::size_t j, std::size_t jp);

/// |c_r|^2 = (1/N) sum_j e^{-2 pi i j r / N} exp(|alpha|^2 (e^{2 pi i j / N} - 1)).
std::vector<double> coefficient_moduli(const CoherentFamily& family);

SweepTable bound_vs_alpha(std::size_t n, const std::vector<double>& alpha_sq_grid);

/// |central difference of |c_r|^2 w.r.t. |alpha|^2  -  (|c_{r-1}|^2 - |c_r|^2)|.
double derivative_residual(const CoherentFamily& family, std::size_t r, double step);

struct Crossing {
    double alpha_sq;
    std::size_t outgoing_argmin;
};

/// Points in (0, alpha_sq_max] where the smallest |c_r|^2 changes identity,
/// located by bisection to width 1e-8.
std::vector<Crossing> find_crossings(std::size_t n, double alpha_sq_max);

struct FockVectors {
    CMatrix vectors; // (cutoff+1) x N, column j = truncated |alpha_j>
    std::size_t cutoff = 0;
};

FockVectors fock_vectors(const CoherentFamily& family, double tail_epsilon = 1e-12);

/// diag(e^{2 pi i m / N}) on the truncated Fock space.
CMatrix truncated_phase_unitary(std::size_t n, std::size_t cutoff);

} // namespace usd
