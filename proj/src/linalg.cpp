#include "modrad/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

namespace modrad {
namespace linalg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_square(const CMatrix& m, const char* op) {
    if (!m.is_square()) {
        throw NotSquareError(std::string(op) + " requires a square matrix, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

// Eigenvalues of the real symmetric 2x2 [[a, b_abs],[b_abs, d]], ascending.
void sym_eig_2x2(double a, double d, double b_abs, double& lo, double& hi) {
    const double half_tr = 0.5 * (a + d);
    const double disc = std::hypot(0.5 * (a - d), b_abs);
    lo = half_tr - disc;
    hi = half_tr + disc;
}

// Cyclic complex Jacobi on a Hermitian matrix held in a flat row-major buffer.
// The buffer must already be exactly Hermitian (call sites symmetrize).
std::vector<double> jacobi_eigenvalues(std::vector<Complex>& a, std::size_t n) {
    if (n == 1) return {a[0].real()};
    if (n == 2) {
        double lo, hi;
        sym_eig_2x2(a[0].real(), a[3].real(), std::abs(a[1]), lo, hi);
        return {lo, hi};
    }

    auto at = [&](std::size_t i, std::size_t j) -> Complex& { return a[i * n + j]; };

    double fro2 = 0.0;
    for (const Complex& z : a) fro2 += std::norm(z);
    const double stop = 1e-30 * (1.0 + fro2);

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off2 = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) off2 += std::norm(at(p, q));
        }
        if (off2 <= stop) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = at(p, q);
                const double abs_apq = std::abs(apq);
                const double app = at(p, p).real();
                const double aqq = at(q, q).real();
                if (abs_apq <= 0.5 * kEps * (std::abs(app) + std::abs(aqq))) {
                    at(p, q) = 0.0;
                    at(q, p) = 0.0;
                    continue;
                }

                // Unitary plane rotation U = diag(1, e^{-i phi}) * [[c, s],[-s, c]]
                // with e^{i phi} the phase of a_pq; zeroes the (p, q) entry.
                const Complex w = apq / abs_apq;
                const double tau = (aqq - app) / (2.0 * abs_apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex sw = s * w;             // s * e^{i phi}
                const Complex sw_conj = std::conj(sw);

                // A <- A U on columns p, q.
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex tp = at(i, p);
                    const Complex tq = at(i, q);
                    at(i, p) = c * tp - sw_conj * tq;
                    at(i, q) = s * tp + c * std::conj(w) * tq;
                }
                // A <- U^H A on rows p, q.
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex tp = at(p, j);
                    const Complex tq = at(q, j);
                    at(p, j) = c * tp - sw * tq;
                    at(q, j) = s * tp + c * w * tq;
                }
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                at(p, p) = at(p, p).real();
                at(q, q) = at(q, q).real();
            }
        }
    }

    std::vector<double> evs(n);
    for (std::size_t i = 0; i < n; ++i) evs[i] = at(i, i).real();
    std::sort(evs.begin(), evs.end());
    return evs;
}

// Symmetrized copy of a square matrix as a flat buffer; also reports the
// hermiticity deviation relative to the Frobenius scale.
std::vector<Complex> symmetrized(const CMatrix& m, double& rel_dev) {
    const std::size_t n = m.rows();
    std::vector<Complex> a(n * n);
    double dev2 = 0.0;
    double fro2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Complex mij = m(i, j);
            const Complex mji_c = std::conj(m(j, i));
            fro2 += std::norm(mij);
            dev2 += std::norm(mij - mji_c);
            a[i * n + j] = 0.5 * (mij + mji_c);
        }
    }
    rel_dev = std::sqrt(dev2) / (1.0 + std::sqrt(fro2));
    return a;
}

std::vector<double> hermitian_eigenvalues_checked(const CMatrix& m, const char* op) {
    require_square(m, op);
    double rel_dev = 0.0;
    std::vector<Complex> a = symmetrized(m, rel_dev);
    if (rel_dev > kHermTol) {
        throw NotHermitianError(std::string(op) + ": matrix is not Hermitian (relative deviation " +
                                std::to_string(rel_dev) + ")");
    }
    return jacobi_eigenvalues(a, m.rows());
}

// --- general spectrum -------------------------------------------------------

// In-place Householder reduction to upper Hessenberg form.
void hessenberg_reduce(std::vector<Complex>& h, std::size_t n) {
    auto at = [&](std::size_t i, std::size_t j) -> Complex& { return h[i * n + j]; };
    std::vector<Complex> v(n);

    for (std::size_t k = 0; k + 2 < n; ++k) {
        double norm_x2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) norm_x2 += std::norm(at(i, k));
        const double norm_x = std::sqrt(norm_x2);
        if (norm_x <= 0.0) continue;

        const Complex x0 = at(k + 1, k);
        const Complex phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : Complex{1.0, 0.0};
        const Complex alpha = -phase * norm_x;

        const std::size_t len = n - (k + 1);
        v[0] = x0 - alpha;
        double vnorm2 = std::norm(v[0]);
        for (std::size_t i = 1; i < len; ++i) {
            v[i] = at(k + 1 + i, k);
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 <= 0.0) continue;
        const double beta = 2.0 / vnorm2;

        // Left: rows k+1..n-1.
        for (std::size_t j = k; j < n; ++j) {
            Complex dot{0.0, 0.0};
            for (std::size_t i = 0; i < len; ++i) dot += std::conj(v[i]) * at(k + 1 + i, j);
            dot *= beta;
            for (std::size_t i = 0; i < len; ++i) at(k + 1 + i, j) -= dot * v[i];
        }
        // Right: columns k+1..n-1.
        for (std::size_t i = 0; i < n; ++i) {
            Complex dot{0.0, 0.0};
            for (std::size_t j = 0; j < len; ++j) dot += at(i, k + 1 + j) * v[j];
            dot *= beta;
            for (std::size_t j = 0; j < len; ++j) at(i, k + 1 + j) -= dot * std::conj(v[j]);
        }

        at(k + 1, k) = alpha;
        for (std::size_t i = k + 2; i < n; ++i) at(i, k) = 0.0;
    }
}

// Eigenvalues of the complex 2x2 [[p, q],[r, s]].
void eig_2x2(Complex p, Complex q, Complex r, Complex s, Complex& e1, Complex& e2) {
    const Complex half_tr = 0.5 * (p + s);
    const Complex disc = std::sqrt(half_tr * half_tr - (p * s - q * r));
    e1 = half_tr + disc;
    e2 = half_tr - disc;
}

// Shifted QR with deflation on an upper Hessenberg matrix; eigenvalues only.
std::vector<Complex> hessenberg_qr_eigenvalues(std::vector<Complex>& h, std::size_t n) {
    auto at = [&](std::size_t i, std::size_t j) -> Complex& { return h[i * n + j]; };
    std::vector<Complex> evs(n);
    std::vector<double> rot_c(n);
    std::vector<Complex> rot_s(n);

    std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
    int iters = 0;
    long total_iters = 0;
    const long max_total = 200 * static_cast<long>(n) + 200;

    auto negligible = [&](std::ptrdiff_t i) {
        const double sub = std::abs(at(i, i - 1));
        return sub <= kEps * (std::abs(at(i - 1, i - 1)) + std::abs(at(i, i))) ||
               sub < std::numeric_limits<double>::min();
    };

    while (hi >= 0) {
        if (hi == 0) {
            evs[0] = at(0, 0);
            break;
        }

        // Deflation scan from the bottom of the active block.
        std::ptrdiff_t lo = 0;
        for (std::ptrdiff_t i = hi; i >= 1; --i) {
            if (negligible(i)) {
                at(i, i - 1) = 0.0;
                lo = i;
                break;
            }
        }

        if (lo == hi) {
            evs[hi] = at(hi, hi);
            --hi;
            iters = 0;
            continue;
        }
        if (lo == hi - 1) {
            eig_2x2(at(hi - 1, hi - 1), at(hi - 1, hi), at(hi, hi - 1), at(hi, hi), evs[hi - 1], evs[hi]);
            hi -= 2;
            iters = 0;
            continue;
        }

        if (++total_iters > max_total) {
            throw Error("eigenvalue QR iteration failed to converge");
        }

        // Shift: Wilkinson from the trailing 2x2, with an occasional
        // exceptional shift to break symmetric cycles.
        Complex mu;
        if (++iters % 12 == 0) {
            mu = at(hi, hi) + 0.75 * std::abs(at(hi, hi - 1));
        } else {
            Complex e1, e2;
            eig_2x2(at(hi - 1, hi - 1), at(hi - 1, hi), at(hi, hi - 1), at(hi, hi), e1, e2);
            mu = (std::abs(e1 - at(hi, hi)) <= std::abs(e2 - at(hi, hi))) ? e1 : e2;
        }

        for (std::ptrdiff_t i = lo; i <= hi; ++i) at(i, i) -= mu;

        // QR step via Givens rotations restricted to the active block.
        for (std::ptrdiff_t j = lo; j < hi; ++j) {
            const Complex a = at(j, j);
            const Complex b = at(j + 1, j);
            double c;
            Complex s;
            const double ab = std::abs(a);
            const double bb = std::abs(b);
            if (bb == 0.0) {
                c = 1.0;
                s = 0.0;
            } else if (ab == 0.0) {
                c = 0.0;
                s = std::conj(b) / bb;
            } else {
                const double denom = std::hypot(ab, bb);
                c = ab / denom;
                s = (a / ab) * std::conj(b) / denom;
            }
            rot_c[j] = c;
            rot_s[j] = s;
            for (std::ptrdiff_t jj = j; jj <= hi; ++jj) {
                const Complex t1 = at(j, jj);
                const Complex t2 = at(j + 1, jj);
                at(j, jj) = c * t1 + s * t2;
                at(j + 1, jj) = -std::conj(s) * t1 + c * t2;
            }
        }
        for (std::ptrdiff_t j = lo; j < hi; ++j) {
            const double c = rot_c[j];
            const Complex s = rot_s[j];
            const std::ptrdiff_t top = lo;
            const std::ptrdiff_t bottom = std::min<std::ptrdiff_t>(j + 2, hi);
            for (std::ptrdiff_t ii = top; ii <= bottom; ++ii) {
                const Complex t1 = at(ii, j);
                const Complex t2 = at(ii, j + 1);
                at(ii, j) = c * t1 + std::conj(s) * t2;
                at(ii, j + 1) = -s * t1 + c * t2;
            }
        }

        for (std::ptrdiff_t i = lo; i <= hi; ++i) at(i, i) += mu;
    }

    return evs;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
    return hermitian_eigenvalues_checked(m, "hermitian_eigenvalues");
}

double hermitian_max_eigenvalue(const CMatrix& m) {
    return hermitian_eigenvalues_checked(m, "hermitian_max_eigenvalue").back();
}

double hermitian_norm(const CMatrix& m) {
    const std::vector<double> evs = hermitian_eigenvalues_checked(m, "hermitian_norm");
    return std::max(std::abs(evs.front()), std::abs(evs.back()));
}

double operator_norm(const CMatrix& m) {
    // Gram matrix is Hermitian by construction; skip the hermiticity gate.
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    std::vector<Complex> gram(c * c);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = i; j < c; ++j) {
            Complex sum{0.0, 0.0};
            for (std::size_t k = 0; k < r; ++k) sum += std::conj(m(k, i)) * m(k, j);
            gram[i * c + j] = (i == j) ? Complex{sum.real(), 0.0} : sum;
            gram[j * c + i] = std::conj(gram[i * c + j]);
        }
    }
    const std::vector<double> evs = jacobi_eigenvalues(gram, c);
    return std::sqrt(std::max(0.0, evs.back()));
}

std::vector<Complex> eigenvalues(const CMatrix& m) {
    require_square(m, "eigenvalues");
    const std::size_t n = m.rows();
    if (n == 1) return {m(0, 0)};
    std::vector<Complex> h(m.entries());
    hessenberg_reduce(h, n);
    return hessenberg_qr_eigenvalues(h, n);
}

double spectral_radius(const CMatrix& m) {
    require_square(m, "spectral_radius");
    double r = 0.0;
    for (const Complex& ev : eigenvalues(m)) r = std::max(r, std::abs(ev));
    return r;
}

double sym2x2_norm(const Sym2x2& b) {
    if (!(b.p >= 0.0) || !(b.s >= 0.0) || !(b.q >= 0.0)) {
        throw NegativeEntryError("sym2x2_norm requires nonnegative entries");
    }
    return 0.5 * (b.p + b.q + std::hypot(b.p - b.q, 2.0 * b.s));
}

}  // namespace linalg
}  // namespace modrad
