#pragma once

#include "cgsig/knot.hpp"

#include <gmpxx.h>
#include <vector>

namespace cgsig {

// Character on (Z/q)^N: the value on the i-th summand's canonical generator
// is coeffs[i]. The trivial character has all coefficients zero.
struct Character {
    unsigned q = 5;
    std::vector<unsigned> coeffs;

    bool is_trivial() const;
    bool operator==(const Character& o) const = default;
};

// Characters on (Z/q)^N in canonical order: coefficient vectors as a base-q
// odometer, last coordinate fastest. index_of inverts enumeration.
Character character_at(unsigned q, std::size_t n, const mpz_class& index);
mpz_class character_index(const Character& chi);

// Rational interval center +- slack enclosing a signature value. Exact values
// have slack 0; each surgery-formula evaluation contributes slack 1.
struct SignatureEstimate {
    mpq_class center;
    mpq_class slack; // >= 0

    SignatureEstimate() = default;
    SignatureEstimate(mpq_class c, mpq_class s);

    SignatureEstimate operator+(const SignatureEstimate& o) const;
    SignatureEstimate operator-() const;
    bool contains(const mpq_class& x) const;
    // Largest m with |v| >= m for every v in the interval (0 if it straddles 0).
    mpq_class abs_lower_bound() const;
    bool operator==(const SignatureEstimate& o) const = default;
};

// Signature of the multiplicity-fold self-sum of the knot with Seifert matrix
// V at the root of unity exp(2*pi*i*k/q): multiplicity * sig((1-w)V + (1-conj(w))V^T).
// k == 0 mod q gives 0. q must be prime; multiplicity >= 0.
mpz_class tristram_levine(const SeifertMatrix& v, const mpz_class& multiplicity,
                          unsigned q, unsigned k);

// Exact rational signature defect of the q-fold cyclic branched cover
// described by surgery on a two-component link with linking matrix
// [[a, 1], [1, b]], evaluated at the character sending the two meridians to
// n1, n2 in Z/q (both nonzero mod q; q prime):
//   -1 - sign(L) + (2/q^2) * [n1 n2] L [q-n1 q-n2]^T.
mpq_class cf_hopf_signature(const mpz_class& a, const mpz_class& b, unsigned q,
                            unsigned n1, unsigned n2);

// Estimate of the base knot's cover signature at the character sending the
// canonical cover generator to c in Z/q: exactly zero for c == 0, otherwise
// the surgery-formula value with slack 1. Requires the base's cover group to
// be cyclic of order exactly q (q prime).
SignatureEstimate base_cg_estimate(const SatelliteKnot& k, unsigned q, unsigned c);

// Base estimate plus the exact companion contributions: each infection at
// site class s with orientation sign e and multiplicity m adds
// e * 2 * tristram_levine(companion, m, q, s*c mod q).
SignatureEstimate satellite_cg_estimate(const SatelliteKnot& k, unsigned q, unsigned c);

// Additivity over connected sums: the character assigns coefficient
// chi.coeffs[i] to summand i. Requires chi.coeffs.size() == sum.size() and
// every summand cover group cyclic of order chi.q.
SignatureEstimate sum_cg_estimate(const KnotSum& k, const Character& chi);

// Ordinary signature: symmetrized Seifert signature summed over summand bases
// (infections have winding number zero and do not contribute).
int ordinary_signature(const KnotSum& k);

// Per-summand estimates at every c in [0, q): row i, column c is
// satellite_cg_estimate(summands[i], q, c). sum_cg_estimate equals the
// row-sum selected by the character's coefficients.
std::vector<std::vector<SignatureEstimate>> summand_signature_tables(const KnotSum& k,
                                                                     unsigned q);

// Full table over all q^N characters in canonical order.
struct TableEntry {
    Character chi;
    SignatureEstimate estimate;
};
std::vector<TableEntry> cg_signature_table(const KnotSum& k, unsigned q);

} // namespace cgsig
