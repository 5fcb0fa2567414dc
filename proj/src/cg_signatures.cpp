#include "cgsig/cg_signatures.hpp"

#include "cgsig/errors.hpp"
#include "cgsig/signature_forms.hpp"

#include <algorithm>

namespace cgsig {

namespace {

bool is_prime(unsigned q) {
    if (q < 2)
        return false;
    for (unsigned d = 2; static_cast<unsigned long long>(d) * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

unsigned inverse_mod(unsigned a, unsigned q) {
    long long t = 0, newt = 1, r = q, newr = a % q;
    while (newr != 0) {
        long long quo = r / newr;
        std::swap(t, newt);
        newt -= quo * t;
        std::swap(r, newr);
        newr -= quo * r;
    }
    if (r != 1)
        throw PreconditionError("value is not a unit mod " + std::to_string(q));
    long long v = t % q;
    if (v < 0)
        v += q;
    return static_cast<unsigned>(v);
}

// The base cover group must be cyclic of order exactly q, generated by the
// class of the first surgery meridian (the canonical generator). Returns the
// ratio rho with [mu_2] = rho * [mu_1], so a character with value c on the
// generator takes (c, rho * c) on the meridians. The classes reported by the
// Smith form are relative to its own factor generator; the ratio is basis
// independent.
unsigned meridian_ratio(const SatelliteKnot& k, unsigned q) {
    const FinAbGroup& g = k.cover_group();
    if (g.invariant_factors.size() != 1 || g.invariant_factors[0] != q)
        throw PreconditionError("cover group is not cyclic of order " + std::to_string(q));
    const auto& classes = k.meridian_classes();
    auto residue = [&](std::size_t j) {
        mpz_class v = classes[j][0] % q;
        if (v < 0)
            v += q;
        return static_cast<unsigned>(v.get_ui());
    };
    unsigned m1 = residue(0), m2 = residue(1);
    if (m1 == 0)
        throw PreconditionError("first surgery meridian does not generate the cover");
    return static_cast<unsigned>(
        (static_cast<unsigned long long>(m2) * inverse_mod(m1, q)) % q);
}

} // namespace

bool Character::is_trivial() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](unsigned c) { return c == 0; });
}

Character character_at(unsigned q, std::size_t n, const mpz_class& index) {
    Character chi;
    chi.q = q;
    chi.coeffs.assign(n, 0);
    mpz_class v(index);
    for (std::size_t i = n; i-- > 0;) {
        chi.coeffs[i] = static_cast<unsigned>(mpz_class(v % q).get_ui());
        v /= q;
    }
    if (v != 0)
        throw PreconditionError("character index out of range");
    return chi;
}

mpz_class character_index(const Character& chi) {
    mpz_class v = 0;
    for (unsigned c : chi.coeffs)
        v = v * chi.q + c;
    return v;
}

SignatureEstimate::SignatureEstimate(mpq_class c, mpq_class s)
    : center(std::move(c)), slack(std::move(s)) {
    if (slack < 0)
        throw PreconditionError("negative slack");
}

SignatureEstimate SignatureEstimate::operator+(const SignatureEstimate& o) const {
    return {center + o.center, slack + o.slack};
}

SignatureEstimate SignatureEstimate::operator-() const {
    return {-center, slack};
}

bool SignatureEstimate::contains(const mpq_class& x) const {
    return abs(x - center) <= slack;
}

mpq_class SignatureEstimate::abs_lower_bound() const {
    mpq_class m = abs(center) - slack;
    return m > 0 ? m : mpq_class(0);
}

mpz_class tristram_levine(const SeifertMatrix& v, const mpz_class& multiplicity, unsigned q,
                          unsigned k) {
    if (!is_prime(q))
        throw PreconditionError("root order must be prime");
    if (multiplicity < 0)
        throw PreconditionError("multiplicity must be nonnegative");
    if (k % q == 0)
        return 0;
    int s = hermitian_signature_at_root(v.V, q, k);
    return multiplicity * s;
}

mpq_class cf_hopf_signature(const mpz_class& a, const mpz_class& b, unsigned q, unsigned n1,
                            unsigned n2) {
    if (!is_prime(q))
        throw PreconditionError("cover order must be prime");
    unsigned r1 = n1 % q, r2 = n2 % q;
    if (r1 == 0 || r2 == 0)
        throw ZeroMeridianValueError("meridian values must be nonzero mod q");
    HopfSurgery surgery(a, b); // validates nonsingularity
    IntMatrix lam = surgery.linking_matrix();
    int sig = symmetric_signature(lam);

    // -1 - sign(L) + (2/q^2) * [n1 n2] L [q-n1 q-n2]^T
    mpz_class m1(r1), m2(r2), c1(q - r1), c2(q - r2);
    mpz_class pairing = m1 * (a * c1 + c2) + m2 * (c1 + b * c2);
    mpq_class result(-1 - sig, 1);
    result += mpq_class(2 * pairing, mpz_class(q) * q);
    result.canonicalize();
    return result;
}

SignatureEstimate base_cg_estimate(const SatelliteKnot& k, unsigned q, unsigned c) {
    if (!is_prime(q))
        throw PreconditionError("character order must be prime");
    unsigned rho = meridian_ratio(k, q);
    unsigned cr = c % q;
    if (cr == 0)
        return {mpq_class(0), mpq_class(0)};
    unsigned n2 = static_cast<unsigned>((static_cast<unsigned long long>(rho) * cr) % q);
    mpq_class center = cf_hopf_signature(k.surgery.a, k.surgery.b, q, cr, n2);
    return {center, mpq_class(1)};
}

SignatureEstimate satellite_cg_estimate(const SatelliteKnot& k, unsigned q, unsigned c) {
    SignatureEstimate est = base_cg_estimate(k, q, c);
    unsigned cr = c % q;
    for (const auto& inf : k.infections) {
        mpz_class site = inf.site_class % q;
        if (site < 0)
            site += q;
        unsigned exponent =
            static_cast<unsigned>(mpz_class(site * cr % q).get_ui());
        if (exponent == 0)
            continue;
        mpz_class contrib = 2 * tristram_levine(inf.companion, inf.multiplicity, q, exponent);
        if (inf.sign < 0)
            contrib = -contrib;
        est.center += mpq_class(contrib);
    }
    return est;
}

SignatureEstimate sum_cg_estimate(const KnotSum& k, const Character& chi) {
    if (chi.coeffs.size() != k.size())
        throw DimensionMismatchError("character length does not match summand count");
    SignatureEstimate total;
    for (std::size_t i = 0; i < k.size(); ++i)
        total = total + satellite_cg_estimate(k.summands[i], chi.q, chi.coeffs[i]);
    return total;
}

int ordinary_signature(const KnotSum& k) {
    int s = 0;
    for (const auto& sat : k.summands)
        s += symmetric_signature(sat.base.symmetrized());
    return s;
}

std::vector<std::vector<SignatureEstimate>> summand_signature_tables(const KnotSum& k,
                                                                     unsigned q) {
    std::vector<std::vector<SignatureEstimate>> tables;
    tables.reserve(k.size());
    for (const auto& sat : k.summands) {
        std::vector<SignatureEstimate> row;
        row.reserve(q);
        for (unsigned c = 0; c < q; ++c)
            row.push_back(satellite_cg_estimate(sat, q, c));
        tables.push_back(std::move(row));
    }
    return tables;
}

std::vector<TableEntry> cg_signature_table(const KnotSum& k, unsigned q) {
    auto tables = summand_signature_tables(k, q);
    std::size_t n = k.size();
    mpz_class total;
    mpz_class qz(q);
    mpz_pow_ui(total.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(n));
    if (!total.fits_uint_p() || total > 5000000)
        throw PreconditionError("full table over " + total.get_str() +
                                " characters exceeds desk scale");
    std::vector<TableEntry> out;
    out.reserve(total.get_ui());
    for (mpz_class idx = 0; idx < total; ++idx) {
        Character chi = character_at(q, n, idx);
        SignatureEstimate est;
        for (std::size_t i = 0; i < n; ++i)
            est = est + tables[i][chi.coeffs[i]];
        out.push_back({std::move(chi), std::move(est)});
    }
    return out;
}

} // namespace cgsig
