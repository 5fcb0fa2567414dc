#include "cgsig/signature_forms.hpp"

#include "cgsig/algebraic_real.hpp"
#include "cgsig/errors.hpp"
#include "cgsig/polynomial.hpp"

#include <numeric>
#include <vector>

namespace cgsig {

int symmetric_signature(const IntMatrix& a) {
    if (!a.is_square())
        throw NotSymmetricError("signature of a non-square matrix");
    if (!a.is_symmetric())
        throw NotSymmetricError("signature of a non-symmetric matrix");
    std::size_t n = a.rows();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = mpq_class(a.at(i, j));

    int pos = 0, neg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i] == 0) {
            std::size_t j = i + 1;
            while (j < n && m[j][j] == 0)
                ++j;
            if (j < n) {
                std::swap(m[i], m[j]);
                for (std::size_t r = 0; r < n; ++r)
                    std::swap(m[r][i], m[r][j]);
            } else {
                // Diagonal exhausted: bring in an off-diagonal entry
                // (congruence row_r += row_s makes the diagonal 2*m[r][s]).
                std::size_t br = n, bs = n;
                for (std::size_t r = i; r < n && br == n; ++r)
                    for (std::size_t s = r + 1; s < n; ++s)
                        if (m[r][s] != 0) {
                            br = r;
                            bs = s;
                            break;
                        }
                if (br == n)
                    break; // remaining block is zero
                for (std::size_t t = 0; t < n; ++t)
                    m[br][t] += m[bs][t];
                for (std::size_t t = 0; t < n; ++t)
                    m[t][br] += m[t][bs];
                if (br != i) {
                    std::swap(m[i], m[br]);
                    for (std::size_t r = 0; r < n; ++r)
                        std::swap(m[r][i], m[r][br]);
                }
            }
        }
        const mpq_class p = m[i][i];
        if (p > 0)
            ++pos;
        else
            ++neg;
        // Schur complement relative to the pivot. The pivot row must stay
        // intact until every later row has been reduced against it; zeroing
        // it inside the loop would starve the remaining rows of their update.
        for (std::size_t r = i + 1; r < n; ++r) {
            if (m[r][i] == 0)
                continue;
            mpq_class f = m[r][i] / p;
            for (std::size_t s = i + 1; s < n; ++s)
                m[r][s] -= f * m[i][s];
            m[r][i] = 0;
        }
        for (std::size_t s = i + 1; s < n; ++s)
            m[i][s] = 0;
    }
    return pos - neg;
}

namespace {

// Matrix over the real cyclotomic field.
using FMatrix = std::vector<std::vector<QPoly>>;

QPoly fm_trace(const RealCyclotomicField& field, const FMatrix& m) {
    QPoly t;
    for (std::size_t i = 0; i < m.size(); ++i)
        t = poly::add(t, m[i][i]);
    return field.reduce(t);
}

FMatrix fm_mul(const RealCyclotomicField& field, const FMatrix& a, const FMatrix& b) {
    std::size_t n = a.size();
    FMatrix r(n, std::vector<QPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].empty())
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[k][j].empty())
                    continue;
                r[i][j] = poly::add(r[i][j], poly::mul(a[i][k], b[k][j]));
            }
        }
    for (auto& row : r)
        for (auto& e : row)
            e = field.reduce(e);
    return r;
}

// Characteristic polynomial coefficients [1, c1, ..., cn] of an n x n matrix
// over the field, leading coefficient first (p(x) = x^n + c1 x^(n-1) + ... + cn).
// Faddeev-LeVerrier: division-free except for exact integer divisions.
std::vector<QPoly> char_poly(const RealCyclotomicField& field, const FMatrix& a) {
    std::size_t n = a.size();
    std::vector<QPoly> coeffs(n + 1);
    coeffs[0] = QPoly{1};
    if (n == 0)
        return coeffs;
    FMatrix m = a;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            FMatrix shifted = m;
            for (std::size_t i = 0; i < n; ++i)
                shifted[i][i] = poly::add(shifted[i][i], coeffs[k - 1]);
            m = fm_mul(field, a, shifted);
        }
        QPoly t = fm_trace(field, m);
        coeffs[k] = poly::scale(t, mpq_class(-1, static_cast<unsigned long>(k)));
    }
    return coeffs;
}

int descartes_signature(const RealCyclotomicField& field, const std::vector<QPoly>& cp) {
    // All eigenvalues are real, so the positive count is exactly the number
    // of sign changes in the coefficient sequence, and the negative count is
    // the same for p(-x).
    std::size_t n = cp.size() - 1;
    std::vector<int> signs(cp.size());
    for (std::size_t i = 0; i < cp.size(); ++i)
        signs[i] = field.sign(cp[i]);
    int vpos = 0, last = 0;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] == 0)
            continue;
        if (last != 0 && signs[i] != last)
            ++vpos;
        last = signs[i];
    }
    int vneg = 0;
    last = 0;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] == 0)
            continue;
        // coefficient of x^(n-i) flips sign when n-i is odd
        int s = ((n - i) % 2) ? -signs[i] : signs[i];
        if (last != 0 && s != last)
            ++vneg;
        last = s;
    }
    return vpos - vneg;
}

} // namespace

int hermitian_signature_at_root(const IntMatrix& v, unsigned q, unsigned k) {
    if (!v.is_square())
        throw PreconditionError("hermitian signature needs a square matrix");
    if (q < 1)
        throw PreconditionError("root order must be positive");
    unsigned kr = k % q;
    if (kr == 0)
        throw PreconditionError("root of unity must not be 1");
    std::size_t n = v.rows();
    if (n == 0)
        return 0;

    unsigned d = std::gcd(kr, q);
    unsigned qp = q / d, kp = kr / d;
    IntMatrix s = v + v.transpose();
    if (qp == 2) {
        // w = -1: the form is 2(V + V^T).
        return symmetric_signature(s);
    }

    // Realify H = (1-w)V + (1-conj(w))V^T over Q(c), c = w + conj(w):
    // a positive congruence scaling turns [[Re, -Im], [Im, Re]] into
    // [[(4-c^2) S, -(2c+4) C], [(2c+4) C, 4 S]] with S = V+V^T, C = V^T-V,
    // whose signature is twice the Hermitian signature.
    RealCyclotomicField field(qp, kp);
    IntMatrix cm = v.transpose() - v;
    FMatrix m(2 * n, std::vector<QPoly>(2 * n));
    auto put = [&](std::size_t i, std::size_t j, QPoly e) {
        poly::normalize(e);
        m[i][j] = field.reduce(e);
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class sij(s.at(i, j)), cij(cm.at(i, j));
            put(i, j, QPoly{4 * sij, 0, -sij});
            put(i, n + j, QPoly{-4 * cij, -2 * cij});
            put(n + i, j, QPoly{4 * cij, 2 * cij});
            put(n + i, n + j, QPoly{4 * sij});
        }
    auto cp = char_poly(field, m);
    int sig2 = descartes_signature(field, cp);
    if (sig2 % 2 != 0)
        throw Error("realified signature is odd");
    return sig2 / 2;
}

} // namespace cgsig
