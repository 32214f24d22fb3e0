#pragma once

// Independent reference rules: Golub-Welsch on the Jacobi matrix of the
// three-term recurrence, and exact monomial moments. Meant for validation at
// small and moderate n; the eigensolver is O(n^2) per rule.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "gaussq/errors.hpp"
#include "gaussq/rule.hpp"
#include "gaussq/scalar.hpp"

namespace gaussq::oracle {

/// Symmetric tridiagonal Jacobi matrix with moment mu0 of the weight.
template <RealScalar Real>
struct JacobiMatrix {
    std::vector<Real> diagonal;       // a_0 .. a_{n-1}
    std::vector<Real> off_diagonal;   // b_1 .. b_{n-1}
    Real mu0 = Real(1);
};

/// Hermite: a_k = 0, b_k = sqrt(k/2), mu0 = sqrt(pi).
/// Laguerre: a_k = 2k + alpha + 1, b_k = sqrt(k (k + alpha)), mu0 = Gamma(alpha + 1),
/// or mu0 = 1 when `normalized`.
template <RealScalar Real>
JacobiMatrix<Real> jacobi_matrix(const QuadratureKind<Real>& kind, int n, bool normalized = false) {
    if (n < 1) throw invalid_argument("jacobi_matrix: n must be >= 1");
    JacobiMatrix<Real> m;
    m.diagonal.resize(static_cast<std::size_t>(n));
    m.off_diagonal.resize(static_cast<std::size_t>(n - 1));
    if (kind.family == Family::hermite) {
        for (int k = 0; k < n; ++k) m.diagonal[k] = Real(0);
        for (int k = 1; k < n; ++k) m.off_diagonal[k - 1] = num::sqrt(Real(k) / 2);
        m.mu0 = normalized ? Real(1) : num::sqrt(num::pi<Real>());
    } else {
        const Real& a = kind.alpha;
        for (int k = 0; k < n; ++k) m.diagonal[k] = Real(2 * k + 1) + a;
        for (int k = 1; k < n; ++k) m.off_diagonal[k - 1] = num::sqrt(Real(k) * (Real(k) + a));
        m.mu0 = normalized ? Real(1) : num::exp(num::lgamma(Real(a + 1)));
    }
    return m;
}

template <RealScalar Real>
struct ReferenceRule {
    std::vector<Real> nodes;    // ascending
    std::vector<Real> weights;
};

/// Eigenvalues and squared first eigenvector components of the Jacobi
/// matrix by implicit-shift QL. Only the first row of the accumulated
/// rotation matrix is tracked.
template <RealScalar Real>
ReferenceRule<Real> golub_welsch(const JacobiMatrix<Real>& jm, int max_sweeps = 60) {
    const std::size_t n = jm.diagonal.size();
    if (n == 0) throw invalid_argument("golub_welsch: empty matrix");
    if (jm.off_diagonal.size() + 1 != n) throw invalid_argument("golub_welsch: size mismatch");

    std::vector<Real> d = jm.diagonal;
    std::vector<Real> e(n, Real(0));
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = jm.off_diagonal[i];
    std::vector<Real> z(n, Real(0));
    z[0] = Real(1);

    const Real eps = std::numeric_limits<Real>::epsilon();
    auto hypot = [](const Real& a, const Real& b) {
        const Real aa = num::abs(a), bb = num::abs(b);
        if (aa > bb) {
            const Real r = bb / aa;
            return Real(aa * num::sqrt(Real(1 + r * r)));
        }
        if (bb == Real(0)) return Real(0);
        const Real r = aa / bb;
        return Real(bb * num::sqrt(Real(1 + r * r)));
    };

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const Real dd = num::abs(d[m]) + num::abs(d[m + 1]);
                if (!(num::abs(e[m]) > eps * dd)) break;
            }
            if (m != l) {
                if (iter++ == max_sweeps) throw no_convergence("golub_welsch: QL did not converge");
                Real g = (d[l + 1] - d[l]) / (2 * e[l]);
                Real r = hypot(g, Real(1));
                g = d[m] - d[l] + e[l] / (g + (g < Real(0) ? Real(-r) : r));
                Real s = Real(1), c = Real(1), p = Real(0);
                bool underflow = false;
                for (std::size_t i = m; i-- > l;) {
                    const Real f = s * e[i];
                    const Real b = c * e[i];
                    r = hypot(f, g);
                    e[i + 1] = r;
                    if (r == Real(0)) {
                        d[i + 1] -= p;
                        e[m] = Real(0);
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    const Real zf = z[i + 1];
                    z[i + 1] = s * z[i] + c * zf;
                    z[i] = c * z[i] - s * zf;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = Real(0);
            }
        } while (m != l);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    ReferenceRule<Real> out;
    out.nodes.reserve(n);
    out.weights.reserve(n);
    for (std::size_t i : order) {
        out.nodes.push_back(d[i]);
        out.weights.push_back(jm.mu0 * z[i] * z[i]);
    }
    return out;
}

template <RealScalar Real>
ReferenceRule<Real> reference_rule(const QuadratureKind<Real>& kind, int n, bool normalized = false) {
    return golub_welsch(jacobi_matrix(kind, n, normalized));
}

/// Moment of x^k against the weight function. When the value is not
/// representable `overflow` is set and only `log_value` is meaningful.
template <RealScalar Real>
struct Moment {
    Real value;
    Real log_value;
    bool overflow = false;
};

/// Hermite: 0 for odd k, Gamma((k+1)/2) for even k.
/// Laguerre: Gamma(alpha + k + 1), divided by Gamma(alpha + 1) if `normalized`.
template <RealScalar Real>
Moment<Real> monomial_moment(const QuadratureKind<Real>& kind, int k, bool normalized = false) {
    if (k < 0) throw invalid_argument("monomial_moment: k must be >= 0");
    Moment<Real> m;
    if (kind.family == Family::hermite) {
        if (k % 2 == 1) {
            m.value = Real(0);
            m.log_value = -num::infinity<Real>();
            return m;
        }
        m.log_value = num::lgamma(Real(Real(k + 1) / 2));
        if (normalized) m.log_value -= num::lgamma(Real(Real(1) / 2));
    } else {
        const Real& a = kind.alpha;
        if (normalized) {
            // Gamma(a+k+1)/Gamma(a+1) = (a+1)(a+2)...(a+k), exact for small k.
            Real v = Real(1);
            Real lv = Real(0);
            for (int i = 1; i <= k; ++i) {
                v *= a + Real(i);
                lv += num::log(Real(a + Real(i)));
            }
            m.log_value = lv;
            m.value = v;
            m.overflow = !num::isfinite(v);
            return m;
        }
        m.log_value = num::lgamma(Real(a + Real(k + 1)));
    }
    m.value = num::exp(m.log_value);
    m.overflow = !num::isfinite(m.value);
    return m;
}

}  // namespace gaussq::oracle
