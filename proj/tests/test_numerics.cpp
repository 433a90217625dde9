#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "usd/numerics.hpp"
#include "usd/simulate.hpp"

using namespace usd;

namespace {

double reconstruction_residual(const CMatrix& m, const EigDecomposition& eig) {
    const std::size_t n = m.rows();
    CMatrix rebuilt(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                rebuilt(i, j) += eig.eigenvalues[k] * eig.eigenvectors(i, k) *
                                 std::conj(eig.eigenvectors(j, k));
    return (rebuilt - m).max_abs();
}

} // namespace

TEST_CASE("identity eigendecomposition") {
    const auto eig = hermitian_eig(CMatrix::identity(3));
    for (double lam : eig.eigenvalues) CHECK(lam == doctest::Approx(1.0).epsilon(1e-12));
    const CMatrix vhv = eig.eigenvectors.adjoint() * eig.eigenvectors;
    CHECK((vhv - CMatrix::identity(3)).max_abs() <= 1e-10);
}

TEST_CASE("diagonal matrix eigenvalues") {
    CMatrix m(2, 2);
    m(0, 0) = 0.9;
    m(1, 1) = 0.2;
    const auto eig = hermitian_eig(m);
    CHECK(eig.eigenvalues[0] == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(eig.eigenvalues[1] == doctest::Approx(0.9).epsilon(1e-14));
}

TEST_CASE("trace invariance on a random 5x5 Hermitian") {
    RandomStream stream(7);
    const CMatrix h = random_hermitian(5, stream);
    const auto eig = hermitian_eig(h);
    double trace = 0.0;
    for (std::size_t i = 0; i < 5; ++i) trace += h(i, i).real();
    double sum = 0.0;
    for (double lam : eig.eigenvalues) sum += lam;
    CHECK(std::abs(trace - sum) <= 1e-10);
}

TEST_CASE("orthonormality and reconstruction, random dims up to 16") {
    RandomStream stream(11);
    for (std::size_t dim = 2; dim <= 16; ++dim) {
        const CMatrix h = random_hermitian(dim, stream);
        const auto eig = hermitian_eig(h);
        const CMatrix vhv = eig.eigenvectors.adjoint() * eig.eigenvectors;
        CHECK((vhv - CMatrix::identity(dim)).max_abs() <= 1e-10);
        CHECK(reconstruction_residual(h, eig) <= 1e-10 * std::max(1.0, h.max_abs()));
        for (std::size_t i = 1; i < dim; ++i)
            CHECK(eig.eigenvalues[i] >= eig.eigenvalues[i - 1]);
    }
}

TEST_CASE("non-Hermitian input is rejected") {
    CMatrix m(2, 2);
    m(0, 1) = Complex(1.0, 0.0);
    m(1, 0) = Complex(2.0, 0.0);
    CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
}

TEST_CASE("max_eigenvalue") {
    CHECK(max_eigenvalue(CMatrix::zero(3)) == doctest::Approx(0.0).epsilon(1e-15));
    CMatrix m(2, 2);
    m(0, 0) = 0.3;
    m(1, 1) = 1.0;
    CHECK(max_eigenvalue(m) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("positive semidefiniteness") {
    CHECK(is_positive_semidefinite(CMatrix::identity(4), 1e-9));
    CMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -0.5;
    CHECK_FALSE(is_positive_semidefinite(m, 1e-9));
}

TEST_CASE("roots of unity") {
    CHECK(std::abs(root_of_unity(4, 1) - Complex(0.0, 1.0)) <= 1e-15);
    CHECK(std::abs(root_of_unity(7, 0) - Complex(1.0, 0.0)) <= 1e-15);
    const Complex w = root_of_unity(3, 1);
    CHECK(std::abs(w * w * w - Complex(1.0, 0.0)) <= 1e-15);
    for (std::size_t n = 2; n <= 12; ++n)
        for (long long k = 0; k < static_cast<long long>(n); ++k)
            CHECK(std::abs(root_of_unity(n, k) * root_of_unity(n, static_cast<long long>(n) - k) -
                           Complex(1.0, 0.0)) <= 1e-15);
    CHECK(std::abs(root_of_unity(5, -2) - root_of_unity(5, 3)) <= 1e-15);
}

TEST_CASE("random stream determinism") {
    RandomStream a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("seed sensitivity") {
    RandomStream a(1), b(2);
    bool differs = false;
    for (int i = 0; i < 4; ++i)
        if (a.next_u64() != b.next_u64()) differs = true;
    CHECK(differs);
}

TEST_CASE("uniformity of the stream") {
    RandomStream stream(123);
    const std::size_t n = 1000000;
    double sum = 0.0;
    std::vector<std::uint64_t> bins(16, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = stream.next_uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
        ++bins[static_cast<std::size_t>(u * 16.0)];
    }
    CHECK(std::abs(sum / static_cast<double>(n) - 0.5) <= 0.002);

    const double expected = static_cast<double>(n) / 16.0;
    double chi2 = 0.0;
    for (auto b : bins) {
        const double d = static_cast<double>(b) - expected;
        chi2 += d * d / expected;
    }
    // chi-square critical value, 15 dof, p = 0.001
    CHECK(chi2 < 37.697);
}
