#pragma once

#include <gmpxx.h>
#include <cstddef>
#include <utility>
#include <vector>

namespace cgsig {

// Coefficient vectors, constant term first; the zero polynomial is {} and
// nonzero polynomials carry a nonzero leading coefficient.
using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

namespace poly {

void normalize(QPoly& p);
int degree(const QPoly& p); // -1 for the zero polynomial

QPoly from_z(const ZPoly& p);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly neg(const QPoly& a);
QPoly scale(const QPoly& a, const mpq_class& c);
QPoly derivative(const QPoly& a);
mpq_class eval(const QPoly& a, const mpq_class& x);

// Quotient and remainder with deg(r) < deg(b); b must be nonzero.
std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);

// Monic gcd over Q ({} when both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);

// p / gcd(p, p'): same roots, all simple.
QPoly squarefree_part(const QPoly& p);

// Evaluate over the box [lo, hi]: a (possibly coarse) enclosing interval.
std::pair<mpq_class, mpq_class> interval_eval(const QPoly& p, const mpq_class& lo,
                                              const mpq_class& hi);

// Descartes: sign changes across the nonzero coefficients.
int sign_variations(const QPoly& p);

// Sturm chain of a squarefree polynomial; count of roots in (lo, hi].
std::vector<QPoly> sturm_chain(const QPoly& p);
int sturm_variations_at(const std::vector<QPoly>& chain, const mpq_class& x);
int count_roots_halfopen(const std::vector<QPoly>& chain, const mpq_class& lo,
                         const mpq_class& hi);

} // namespace poly
} // namespace cgsig
