#include "usd/states.hpp"

#include <cmath>
#include <numbers>

namespace usd {

SymmetricSet from_coefficients(std::vector<Complex> c) {
    const std::size_t n = c.size();
    if (n < 2) throw BadLength("need at least two coefficients");

    double sum_sq = 0.0;
    for (const auto& ck : c) sum_sq += std::norm(ck);
    if (std::abs(sum_sq - 1.0) > 1e-9) throw NotNormalized("coefficient moduli must sum to 1");
    const double scale = 1.0 / std::sqrt(sum_sq);
    for (auto& ck : c) ck *= scale;

    for (const auto& ck : c)
        if (std::norm(ck) < kIndependenceTol)
            throw DegenerateCoefficient("every Fourier coefficient must be nonzero");

    // Global phase: rotate so c_0 is real nonnegative.
    if (std::abs(c[0]) > 0.0) {
        const Complex phase = std::conj(c[0]) / std::abs(c[0]);
        for (auto& ck : c) ck *= phase;
        c[0] = Complex(std::abs(c[0]), 0.0);
    }

    SymmetricSet set;
    set.n = n;
    set.coefficients = c;
    set.vectors = CMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            set.vectors(k, j) = c[k] * root_of_unity(n, static_cast<long long>(j * k));
    set.cycling_unitary = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k)
        set.cycling_unitary(k, k) = root_of_unity(n, static_cast<long long>(k));
    return set;
}

SymmetricSet two_state_from_angle(double theta) {
    if (theta < 0.0 || theta > std::numbers::pi / 4.0 + 1e-15)
        throw OutOfRange("theta must lie in [0, pi/4]");
    return from_coefficients({Complex(std::cos(theta), 0.0), Complex(std::sin(theta), 0.0)});
}

GramMatrix gram(const SymmetricSet& set) {
    const std::size_t n = set.n;
    GramMatrix g;
    g.entries = CMatrix(n, n);
    for (std::size_t jp = 0; jp < n; ++jp)
        for (std::size_t j = 0; j < n; ++j)
            g.entries(jp, j) = inner_product(set.vectors.column(jp), set.vectors.column(j));
    return g;
}

std::vector<double> coefficient_moduli_from_gram(const GramMatrix& g, double circulant_tol) {
    const CMatrix& m = g.entries;
    const std::size_t n = m.rows();
    if (n != m.cols() || n < 2) throw BadLength("Gram matrix must be square, N >= 2");

    // entries must depend only on (j - j') mod N
    for (std::size_t d = 0; d < n; ++d) {
        const Complex ref = m(0, d);
        for (std::size_t jp = 1; jp < n; ++jp) {
            const std::size_t j = (jp + d) % n;
            if (std::abs(m(jp, j) - ref) > circulant_tol)
                throw NotCirculant("Gram matrix is not circulant");
        }
    }

    std::vector<double> moduli(n);
    for (std::size_t r = 0; r < n; ++r) {
        Complex acc{};
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t jp = 0; jp < n; ++jp)
                acc += root_of_unity(n, -static_cast<long long>(r) *
                                            (static_cast<long long>(j) - static_cast<long long>(jp))) *
                       m(jp, j);
        acc /= static_cast<double>(n * n);
        if (std::abs(acc.imag()) > 1e-10)
            throw NegativeCoefficient("imaginary residue in recovered |c_r|^2");
        if (acc.real() < -1e-10)
            throw NegativeCoefficient("negative recovered |c_r|^2");
        moduli[r] = std::max(acc.real(), 0.0);
    }
    return moduli;
}

ReciprocalSet reciprocal_set(const SymmetricSet& set) {
    const std::size_t n = set.n;
    double z = 0.0;
    for (const auto& c : set.coefficients) {
        const double c2 = std::norm(c);
        if (c2 < kIndependenceTol) throw DegenerateCoefficient("coefficient too small to invert");
        z += 1.0 / c2;
    }
    ReciprocalSet recip;
    recip.normalization_z = z;
    recip.vectors = CMatrix(n, n);
    const double zinv = 1.0 / std::sqrt(z);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < n; ++r)
            recip.vectors(r, j) = zinv / std::conj(set.coefficients[r]) *
                                  root_of_unity(n, static_cast<long long>(j * r));
    return recip;
}

bool verify_symmetry(const CMatrix& vectors, const CMatrix& u, double tol) {
    const std::size_t dim = vectors.rows();
    const std::size_t n = vectors.cols();
    if (u.rows() != dim || u.cols() != dim) throw DimensionMismatch("unitary dimension mismatch");

    const CMatrix gram_u = u.adjoint() * u;
    if ((gram_u - CMatrix::identity(dim)).max_abs() > 1e-10) return false;

    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t prev = (j + n - 1) % n;
        if ((u * vectors.column(prev) - vectors.column(j)).max_abs() > tol) return false;
    }

    CMatrix power = CMatrix::identity(dim);
    for (std::size_t i = 0; i < n; ++i) power = u * power;
    return (power - CMatrix::identity(dim)).max_abs() <= tol;
}

} // namespace usd
