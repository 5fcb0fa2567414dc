#include "cgsig/knot.hpp"

#include "cgsig/errors.hpp"

namespace cgsig {

SeifertMatrix::SeifertMatrix(IntMatrix v) : V(std::move(v)) {
    if (!V.is_square())
        throw PreconditionError("Seifert matrix must be square");
    mpz_class d = (V - V.transpose()).det();
    if (d != 1 && d != -1)
        throw PreconditionError("V - V^T must be unimodular for a Seifert matrix");
}

HopfSurgery::HopfSurgery(mpz_class a_, mpz_class b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a * b == 1)
        throw PreconditionError("surgery linking matrix is singular");
}

IntMatrix HopfSurgery::linking_matrix() const {
    IntMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = b;
    return m;
}

SatelliteKnot::SatelliteKnot(SeifertMatrix base_, HopfSurgery surgery_,
                             std::vector<Infection> inf)
    : base(std::move(base_)), surgery(std::move(surgery_)), infections(std::move(inf)) {
    for (const auto& i : infections) {
        if (i.sign != 1 && i.sign != -1)
            throw PreconditionError("infection sign must be +1 or -1");
        if (i.multiplicity < 0)
            throw PreconditionError("infection multiplicity must be nonnegative");
    }
    presentation_ = group_from_presentation(surgery.linking_matrix());
    // The cover described by the surgery must present the same homology size
    // as the symmetrized Seifert form.
    mpz_class cover = abs(surgery.linking_matrix().det());
    mpz_class seifert = abs(base.symmetrized().det());
    if (cover != seifert)
        throw PreconditionError("surgery homology order " + cover.get_str() +
                                " does not match Seifert form order " + seifert.get_str());
}

FamilySpec::FamilySpec(unsigned g_, std::vector<unsigned> idx) : g(g_), indices(std::move(idx)) {
    if (g < 1)
        throw PreconditionError("genus parameter must be at least 1");
    if (indices.empty())
        throw PreconditionError("family needs at least one generation index");
    for (std::size_t i = 1; i < indices.size(); ++i)
        if (indices[i] <= indices[i - 1])
            throw IndexNotMonotoneError("generation indices must be strictly increasing");
}

SeifertMatrix unknot_seifert() {
    return SeifertMatrix(IntMatrix(0, 0));
}

SeifertMatrix figure_eight_seifert() {
    return SeifertMatrix(IntMatrix::from_rows({{1, 1}, {0, -1}}));
}

SeifertMatrix torus_2_5_seifert() {
    // Genus-2 Seifert surface: -1 on the diagonal, +1 on the subdiagonal.
    IntMatrix v(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        v.at(i, i) = -1;
        if (i + 1 < 4)
            v.at(i + 1, i) = 1;
    }
    return SeifertMatrix(std::move(v));
}

SatelliteBase two_bridge_base(unsigned t) {
    if (t < 1)
        throw PreconditionError("two-bridge base parameter must be at least 1");
    mpz_class tz(t);
    SeifertMatrix seifert(IntMatrix::from_rows({{tz, 1}, {0, -tz}}));
    HopfSurgery surgery(mpz_class(-2) * tz, mpz_class(2) * tz);
    return {std::move(seifert), std::move(surgery)};
}

SatelliteKnot build_infected_base(const SatelliteBase& base, const SeifertMatrix& companion,
                                  const mpz_class& multiplicity) {
    // The two infection axes lift to classes 2t * g and g in the cyclic cover
    // group; the companion is tied in positively along the first and
    // negatively along the second.
    mpz_class t = base.surgery.b / 2;
    std::vector<Infection> inf;
    inf.push_back({mpz_class(2) * t, +1, companion, multiplicity});
    inf.push_back({mpz_class(1), -1, companion, multiplicity});
    return SatelliteKnot(base.seifert, base.surgery, std::move(inf));
}

KnotSum build_family(const FamilySpec& spec) {
    return build_family(spec, torus_2_5_seifert());
}

KnotSum build_family(const FamilySpec& spec, const SeifertMatrix& companion) {
    SatelliteBase base = two_bridge_base(1);
    KnotSum sum;
    unsigned block = 2 * spec.g + 2;
    for (unsigned kj : spec.indices) {
        for (unsigned i = 1; i <= block; ++i) {
            unsigned long l = static_cast<unsigned long>(kj) * block + i;
            mpz_class mult;
            mpz_ui_pow_ui(mult.get_mpz_t(), 2, 2 * l + 1);
            mult *= spec.g;
            sum.summands.push_back(build_infected_base(base, companion, mult));
        }
    }
    return sum;
}

} // namespace cgsig
