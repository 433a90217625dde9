#include "usd/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace usd {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
    CMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex a = (*this)(i, k);
            if (a == Complex{}) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

CMatrix CMatrix::operator+(const CMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    CMatrix out = *this;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

CMatrix CMatrix::operator-(const CMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    CMatrix out = *this;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
}

CMatrix CMatrix::scaled(Complex s) const {
    CMatrix out = *this;
    for (auto& v : out.data_) v *= s;
    return out;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

bool CMatrix::is_hermitian(double rel_tol) const {
    if (rows_ != cols_) return false;
    const double scale = std::max(max_abs(), 1.0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > rel_tol * scale) return false;
    return true;
}

CMatrix CMatrix::column(std::size_t j) const {
    CMatrix v(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) v(i, 0) = (*this)(i, j);
    return v;
}

Complex inner_product(const CMatrix& x, const CMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != 1 || y.cols() != 1)
        throw DimensionMismatch("inner product expects matching column vectors");
    Complex s{};
    for (std::size_t i = 0; i < x.rows(); ++i) s += std::conj(x(i, 0)) * y(i, 0);
    return s;
}

namespace {

double off_diagonal_norm(const CMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

} // namespace

EigDecomposition hermitian_eig(const CMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("eigensolver needs a square matrix");
    if (!m.is_hermitian()) throw NotHermitian("matrix fails the Hermitian symmetry check");
    const std::size_t n = m.rows();

    CMatrix a = m;
    // Symmetrize so rounding in the input cannot bias the sweeps.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = Complex(a(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    CMatrix v = CMatrix::identity(n);

    const double threshold = 1e-14 * std::max(a.frobenius_norm(), 1e-300);
    const int max_sweeps = 100;

    int sweep = 0;
    while (off_diagonal_norm(a) > threshold) {
        if (++sweep > max_sweeps) throw NoConvergence("Jacobi sweep budget exhausted");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex z = a(p, q);
                const double az = std::abs(z);
                if (az == 0.0) continue;
                const Complex phase = z / az; // e^{i phi}
                const double tau = (a(p, p).real() - a(q, q).real()) / (2.0 * az);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex sp = s * phase;       // J[p][q] = -sp, J[q][p] = conj(sp)... see below
                // J: J[p][p]=c, J[p][q]=-s*phase, J[q][p]=s*conj(phase), J[q][q]=c
                // columns: A <- A J
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + s * std::conj(phase) * akq;
                    a(k, q) = -sp * akp + c * akq;
                }
                // rows: A <- J^dagger A
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + sp * aqk;
                    a(q, k) = -s * std::conj(phase) * apk + c * aqk;
                }
                a(p, q) = Complex{};
                a(q, p) = Complex{};
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + s * std::conj(phase) * vkq;
                    v(k, q) = -sp * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = CMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        out.eigenvalues[col] = a(order[col], order[col]).real();
        for (std::size_t row = 0; row < n; ++row) out.eigenvectors(row, col) = v(row, order[col]);
    }
    return out;
}

double max_eigenvalue(const CMatrix& m) {
    return hermitian_eig(m).eigenvalues.back();
}

bool is_positive_semidefinite(const CMatrix& m, double tol) {
    return hermitian_eig(m).eigenvalues.front() >= -tol;
}

Complex root_of_unity(std::size_t n, long long k) {
    if (n < 1) throw OutOfRange("root_of_unity needs N >= 1");
    long long r = k % static_cast<long long>(n);
    if (r < 0) r += static_cast<long long>(n);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    return std::polar(1.0, angle);
}

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed) {
    std::uint64_t sm = seed;
    for (auto& s : state_) s = splitmix64(sm);
}

std::uint64_t RandomStream::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RandomStream::next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

} // namespace usd
