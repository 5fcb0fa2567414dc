#pragma once

#include "cgsig/polynomial.hpp"

#include <gmpxx.h>
#include <vector>

namespace cgsig {

// Real algebraic number: a squarefree integer polynomial together with a
// rational isolating interval [lo, hi] containing exactly one of its roots.
// Values are immutable after construction; all queries are pure, so instances
// are safe to share across threads.
class AlgebraicReal {
public:
    // Validates the isolation invariant (Sturm count == 1); throws
    // PreconditionError otherwise. The polynomial must be squarefree.
    AlgebraicReal(ZPoly defining, mpq_class lo, mpq_class hi);

    // All real roots of p (made squarefree internally), ascending.
    static std::vector<AlgebraicReal> isolate_roots(const ZPoly& p);

    const ZPoly& defining() const { return poly_; }
    const mpq_class& lo() const { return lo_; }
    const mpq_class& hi() const { return hi_; }

    bool is_rational() const; // degree-1 defining polynomial
    mpq_class rational_value() const;

    // Exact sign of f evaluated at this number (-1, 0, +1). Decides f == 0
    // via gcd with the defining polynomial, then refines a local copy of the
    // interval until interval evaluation has a definite sign.
    int sign_of(const QPoly& f) const;

    // Approximation for diagnostics only.
    double approx() const;

private:
    ZPoly poly_;
    QPoly qpoly_;
    std::vector<QPoly> chain_;
    mpq_class lo_, hi_;
};

// The real cyclotomic field Q(2cos(2*pi/n)): minimal polynomial psi_n and, for
// a chosen 1 <= k < n with gcd(k, n) == 1, the conjugate root 2cos(2*pi*k/n).
// Elements are QPoly representatives of degree < deg(psi).
struct RealCyclotomicField {
    unsigned n = 0;
    ZPoly psi;        // minimal polynomial of 2cos(2*pi/n), monic
    AlgebraicReal c;  // the root 2cos(2*pi*k/n)

    RealCyclotomicField(unsigned n, unsigned k);

    std::size_t degree() const { return psi.size() - 1; }
    QPoly reduce(const QPoly& f) const;
    QPoly mul(const QPoly& a, const QPoly& b) const;
    int sign(const QPoly& f) const; // exact
};

// Cyclotomic polynomial Phi_n (computed by exact division of x^n - 1).
ZPoly cyclotomic_polynomial(unsigned n);

// Minimal polynomial of 2cos(2*pi/n) over Q, monic over Z; n >= 3.
ZPoly min_poly_two_cos(unsigned n);

} // namespace cgsig
