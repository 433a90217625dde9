#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "usd/errors.hpp"

namespace usd {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n);
    static CMatrix zero(std::size_t n) { return CMatrix(n, n); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& data() const { return data_; }

    CMatrix adjoint() const;
    CMatrix operator*(const CMatrix& rhs) const;
    CMatrix operator+(const CMatrix& rhs) const;
    CMatrix operator-(const CMatrix& rhs) const;
    CMatrix scaled(Complex s) const;

    /// Largest entry magnitude.
    double max_abs() const;
    double frobenius_norm() const;

    /// max_{i,j} |M[i][j] - conj(M[j][i])| <= tol_scale * max|M|
    bool is_hermitian(double rel_tol = 1e-12) const;

    /// Column j as an N-vector (stored as N x 1 matrix).
    CMatrix column(std::size_t j) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Complex> data_;
};

Complex inner_product(const CMatrix& x, const CMatrix& y); // <x|y>, column vectors

struct EigDecomposition {
    std::vector<double> eigenvalues; // ascending
    CMatrix eigenvectors;            // orthonormal columns, V[:,i] <-> eigenvalues[i]
};

/// Cyclic Jacobi eigensolver for complex Hermitian matrices (dim <= 64).
EigDecomposition hermitian_eig(const CMatrix& m);

double max_eigenvalue(const CMatrix& m);

bool is_positive_semidefinite(const CMatrix& m, double tol = 1e-9);

/// exp(2*pi*i*k/N), k reduced mod N.
Complex root_of_unity(std::size_t n, long long k);

/// xoshiro256++ seeded through splitmix64; uniform doubles are the high
/// 53 bits scaled, so sequences are bit-exact across platforms.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform on [0, 1).
    double next_uniform();

    std::uint64_t seed() const { return seed_; }

    /// Independent stream for parallel batches.
    RandomStream split(std::uint64_t batch) const { return RandomStream(seed_ ^ (0x9e3779b97f4a7c15ULL * (batch + 1))); }

private:
    std::uint64_t seed_;
    std::uint64_t state_[4];
};

} // namespace usd
