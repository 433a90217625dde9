#include "usd/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace usd {

ConditionalProbabilities ConditionalProbabilities::uniform(std::size_t n, double value) {
    return ConditionalProbabilities{std::vector<double>(n, value)};
}

double ConditionalProbabilities::mean() const {
    if (p.empty()) return 0.0;
    return std::accumulate(p.begin(), p.end(), 0.0) / static_cast<double>(p.size());
}

namespace {

CMatrix sqrt_psd(const CMatrix& m, double psd_tol) {
    const EigDecomposition eig = hermitian_eig(m);
    const std::size_t n = m.rows();
    if (eig.eigenvalues.front() < -psd_tol)
        throw InadmissibleProbabilities("failure operator is not positive semidefinite");
    CMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = std::sqrt(std::max(eig.eigenvalues[k], 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += lam * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
    }
    return out;
}

} // namespace

KrausSet build_kraus(const SymmetricSet& set, const ReciprocalSet& recip,
                     const ConditionalProbabilities& probs, double psd_tol) {
    const std::size_t n = set.n;
    if (probs.p.size() != n) throw DimensionMismatch("probability count mismatch");

    KrausSet kraus;
    kraus.detection.reserve(n);
    CMatrix detection_sum(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (probs.p[j] < 0.0 || probs.p[j] > 1.0)
            throw InadmissibleProbabilities("conditional probabilities must lie in [0,1]");
        const Complex overlap = inner_product(recip.vectors.column(j), set.vectors.column(j));
        if (std::abs(overlap) <= 1e-12) throw DegenerateOverlap("reciprocal overlap too small");
        const Complex scale = std::sqrt(probs.p[j]) / overlap;
        // A_j = scale * |e_j><psi_perp_j|
        CMatrix a(n, n);
        for (std::size_t col = 0; col < n; ++col)
            a(j, col) = scale * std::conj(recip.vectors(col, j));
        detection_sum = detection_sum + a.adjoint() * a;
        kraus.detection.push_back(std::move(a));
    }

    const CMatrix failure_element = CMatrix::identity(n) - detection_sum;
    kraus.failure = sqrt_psd(failure_element, psd_tol);
    return kraus;
}

Povm povm_from_kraus(const KrausSet& kraus) {
    Povm povm;
    const std::size_t n = kraus.failure.rows();
    povm.total_detection = CMatrix(n, n);
    for (const auto& a : kraus.detection) {
        CMatrix e = a.adjoint() * a;
        povm.total_detection = povm.total_detection + e;
        povm.detection_elements.push_back(std::move(e));
    }
    povm.failure_element = CMatrix::identity(n) - povm.total_detection;
    return povm;
}

CMatrix detection_operator(const SymmetricSet& set, const ConditionalProbabilities& probs) {
    const std::size_t n = set.n;
    if (probs.p.size() != n) throw DimensionMismatch("probability count mismatch");
    for (const auto& c : set.coefficients)
        if (std::norm(c) < kIndependenceTol)
            throw DegenerateCoefficient("coefficient too small to invert");

    CMatrix e(n, n);
    for (std::size_t rp = 0; rp < n; ++rp) {
        for (std::size_t r = 0; r < n; ++r) {
            Complex acc{};
            for (std::size_t j = 0; j < n; ++j)
                acc += probs.p[j] * root_of_unity(n, static_cast<long long>(j) *
                                                         (static_cast<long long>(rp) -
                                                          static_cast<long long>(r)));
            e(rp, r) = acc / (std::conj(set.coefficients[rp]) * set.coefficients[r]) /
                       static_cast<double>(n * n);
        }
    }
    return e;
}

CMatrix averaged_operator(const SymmetricSet& set, const ConditionalProbabilities& probs) {
    const std::size_t n = set.n;
    const CMatrix e = detection_operator(set, probs);
    const CMatrix& u = set.cycling_unitary;
    CMatrix acc(n, n);
    CMatrix power = CMatrix::identity(n);
    for (std::size_t l = 0; l < n; ++l) {
        acc = acc + power * e * power.adjoint();
        power = u * power;
    }
    return acc.scaled(1.0 / static_cast<double>(n));
}

double optimal_bound(const std::vector<double>& moduli) {
    if (moduli.empty()) throw BadDistribution("empty modulus list");
    double sum = 0.0, min_m = moduli.front();
    for (double m : moduli) {
        if (m < -1e-10) throw BadDistribution("negative modulus");
        sum += m;
        min_m = std::min(min_m, m);
    }
    if (std::abs(sum - 1.0) > 1e-9) throw BadDistribution("moduli must sum to 1");
    return std::clamp(static_cast<double>(moduli.size()) * std::max(min_m, 0.0), 0.0, 1.0);
}

std::size_t argmin_modulus(const std::vector<double>& moduli) {
    return static_cast<std::size_t>(
        std::min_element(moduli.begin(), moduli.end()) - moduli.begin());
}

double idp_limit(Complex overlap) {
    const double mag = std::abs(overlap);
    if (mag > 1.0 + 1e-12) throw OutOfRange("overlap magnitude exceeds 1");
    return 1.0 - std::min(mag, 1.0);
}

OptimalResult optimal_povm(const SymmetricSet& set, double psd_tol) {
    std::vector<double> moduli(set.n);
    for (std::size_t k = 0; k < set.n; ++k) moduli[k] = std::norm(set.coefficients[k]);
    const double bound = optimal_bound(moduli);

    const ReciprocalSet recip = reciprocal_set(set);
    const auto probs = ConditionalProbabilities::uniform(set.n, bound);
    const KrausSet kraus = build_kraus(set, recip, probs, psd_tol);
    return OptimalResult{povm_from_kraus(kraus), bound};
}

namespace {

// PSD test via Cholesky with a tolerance shift; independent of the Jacobi path.
// Destroys the buffer.
bool cholesky_psd(CMatrix& a, double tol) {
    const std::size_t n = a.rows();
    double scale = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) += tol;
        scale = std::max(scale, std::abs(a(i, i)));
    }
    const double tiny = 1e-13 * scale;
    for (std::size_t k = 0; k < n; ++k) {
        const double d = a(k, k).real();
        if (d < 0.0) return false;
        if (d <= tiny) {
            // zero pivot: the rest of the column must vanish too
            for (std::size_t i = k + 1; i < n; ++i)
                if (std::abs(a(i, k)) > std::sqrt(tiny * scale)) return false;
            continue;
        }
        const double root = std::sqrt(d);
        for (std::size_t i = k + 1; i < n; ++i) a(i, k) /= root;
        for (std::size_t j = k + 1; j < n; ++j)
            for (std::size_t i = j; i < n; ++i)
                a(i, j) -= a(i, k) * std::conj(a(j, k));
    }
    return true;
}

} // namespace

double brute_force_max(const SymmetricSet& set, const OptimizerConfig& config) {
    const std::size_t n = set.n;
    if (n > 4) throw OutOfRange("oracle restricted to N <= 4");

    // rank-one building blocks: E_D(P) = sum_j P_j M_j
    const ReciprocalSet recip = reciprocal_set(set);
    std::vector<CMatrix> blocks;
    for (std::size_t j = 0; j < n; ++j) {
        const Complex overlap = inner_product(recip.vectors.column(j), set.vectors.column(j));
        const double w = 1.0 / std::norm(overlap);
        CMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m(r, c) = w * recip.vectors(r, j) * std::conj(recip.vectors(c, j));
        blocks.push_back(std::move(m));
    }

    CMatrix buf(n, n);
    const auto feasible = [&](const std::vector<double>& p) {
        for (double pj : p)
            if (pj < 0.0 || pj > 1.0) return false;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                Complex acc = (r == c) ? Complex(1.0, 0.0) : Complex{};
                for (std::size_t j = 0; j < n; ++j) acc -= p[j] * blocks[j](r, c);
                buf(r, c) = acc;
            }
        return cholesky_psd(buf, config.psd_tol);
    };

    const auto mean_of = [n](const std::vector<double>& p) {
        return std::accumulate(p.begin(), p.end(), 0.0) / static_cast<double>(n);
    };

    // coarse grid, lexicographic, pruned by objective
    const std::size_t steps = static_cast<std::size_t>(std::llround(1.0 / config.coarse_step));
    std::vector<std::size_t> idx(n, 0);
    std::vector<double> p(n, 0.0), best_p(n, 0.0);
    double best = 0.0;
    for (;;) {
        for (std::size_t j = 0; j < n; ++j)
            p[j] = static_cast<double>(idx[j]) * config.coarse_step;
        if (mean_of(p) > best && feasible(p)) {
            best = mean_of(p);
            best_p = p;
        }
        std::size_t j = n;
        while (j > 0) {
            --j;
            if (++idx[j] <= steps) break;
            idx[j] = 0;
            if (j == 0) { j = n; break; }
        }
        if (j == n) break;
    }

    // local refinement: single-coordinate and uniform steps, plus an
    // equalizing transfer that walks along the boundary
    p = best_p;
    for (double step = config.coarse_step; step >= config.refine_step * 0.5; step *= 0.5) {
        bool improved = true;
        int guard = 0;
        while (improved && ++guard < 10000) {
            improved = false;
            std::vector<double> trial = p;
            for (std::size_t j = 0; j < n; ++j) trial[j] = std::min(trial[j] + step, 1.0);
            if (mean_of(trial) > mean_of(p) && feasible(trial)) {
                p = trial;
                improved = true;
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                trial = p;
                trial[j] = std::min(trial[j] + step, 1.0);
                if (mean_of(trial) > mean_of(p) && feasible(trial)) {
                    p = trial;
                    improved = true;
                }
            }
            if (improved) continue;
            const std::size_t hi = static_cast<std::size_t>(
                std::max_element(p.begin(), p.end()) - p.begin());
            const std::size_t lo = static_cast<std::size_t>(
                std::min_element(p.begin(), p.end()) - p.begin());
            if (hi != lo && p[hi] - p[lo] > 2.0 * step) {
                trial = p;
                trial[hi] -= step;
                trial[lo] += step;
                if (feasible(trial)) {
                    p = trial;
                    improved = true;
                }
            }
        }
    }
    return std::max(best, mean_of(p));
}

} // namespace usd
