#pragma once

#include <vector>

#include "usd/numerics.hpp"

namespace usd {

/// min |c_k|^2 below which a set is treated as linearly dependent.
inline constexpr double kIndependenceTol = 1e-12;

/// N symmetric states |psi_j> = sum_k c_k e^{2 pi i j k / N} |k> in the
/// canonical basis, cyclically generated by U = diag(e^{2 pi i k / N}).
struct SymmetricSet {
    std::size_t n = 0;
    std::vector<Complex> coefficients; // c_0 made real nonnegative
    CMatrix vectors;                   // N x N, column j = |psi_j>
    CMatrix cycling_unitary;
};

struct ReciprocalSet {
    CMatrix vectors; // column j = |psi_perp_j>
    double normalization_z = 0.0;
};

struct GramMatrix {
    CMatrix entries; // entries(j', j) = <psi_j' | psi_j>
};

SymmetricSet from_coefficients(std::vector<Complex> c);

/// Two-state family |psi_+-> = cos(theta)|+> +- sin(theta)|->, theta in [0, pi/4].
SymmetricSet two_state_from_angle(double theta);

GramMatrix gram(const SymmetricSet& set);

/// |c_r|^2 recovered from a circulant Gram matrix (moduli only; phases are
/// not determined by the overlaps).
std::vector<double> coefficient_moduli_from_gram(const GramMatrix& g,
                                                 double circulant_tol = 1e-8);

ReciprocalSet reciprocal_set(const SymmetricSet& set);

/// True iff U is unitary, cycles the columns of `vectors`, and U^N = I.
bool verify_symmetry(const CMatrix& vectors, const CMatrix& u, double tol = 1e-8);

} // namespace usd
