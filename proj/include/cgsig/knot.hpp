#pragma once

#include "cgsig/int_matrix.hpp"
#include "cgsig/smith.hpp"

#include <gmpxx.h>
#include <vector>

namespace cgsig {

// Seifert matrix: square integer V with det(V - V^T) = +-1. The 0x0 matrix
// is the unknot. Validated on construction.
struct SeifertMatrix {
    IntMatrix V;

    SeifertMatrix() = default;
    explicit SeifertMatrix(IntMatrix v);

    std::size_t genus_bound() const { return V.rows() / 2; }
    IntMatrix symmetrized() const { return V + V.transpose(); }
    bool operator==(const SeifertMatrix& o) const = default;
};

// Surgery description of the base's double branched cover: a two-component
// link with linking matrix [[a, 1], [1, b]]; det(ab - 1) != 0 so the cover is
// a rational homology sphere.
struct HopfSurgery {
    mpz_class a, b;

    HopfSurgery() = default;
    HopfSurgery(mpz_class a_, mpz_class b_);

    IntMatrix linking_matrix() const;
    bool operator==(const HopfSurgery& o) const = default;
};

// One infection (companion tie-in) of the pattern: the axis lifts to the
// class site_class * g in the cyclic cover group (g the canonical generator),
// the companion is tied in with the given orientation sign, and the companion
// knot is the multiplicity-fold connected self-sum of the companion matrix.
struct Infection {
    mpz_class site_class;
    int sign = +1; // +1 or -1
    SeifertMatrix companion;
    mpz_class multiplicity = 1; // >= 0

    bool operator==(const Infection& o) const = default;
};

// Satellite of a two-bridge-type base: the base knot (Seifert matrix plus the
// surgery picture of its double branched cover) with a list of infections.
// The cover group and the generator classes of the two surgery meridians are
// derived from the linking matrix and cached on construction.
struct SatelliteKnot {
    SeifertMatrix base;
    HopfSurgery surgery;
    std::vector<Infection> infections;

    SatelliteKnot() = default;
    SatelliteKnot(SeifertMatrix base_, HopfSurgery surgery_, std::vector<Infection> inf);

    // H1 of the base's double branched cover; independent of the infections.
    const FinAbGroup& cover_group() const { return presentation_.group; }
    // Classes of the two surgery meridians in invariant-factor coordinates.
    const std::vector<std::vector<mpz_class>>& meridian_classes() const {
        return presentation_.generator_classes;
    }
    bool operator==(const SatelliteKnot& o) const {
        return base == o.base && surgery == o.surgery && infections == o.infections;
    }

private:
    GroupPresentation presentation_;
};

// Connected sum, kept as the ordered list of satellite summands.
struct KnotSum {
    std::vector<SatelliteKnot> summands;

    std::size_t size() const { return summands.size(); }
    bool operator==(const KnotSum& o) const = default;
};

// Parameters of the doubly-indexed family: genus target g >= 1 and a strictly
// increasing list of generation indices (k >= 0). Generation k contributes
// 2g + 2 satellite summands.
struct FamilySpec {
    unsigned g = 1;
    std::vector<unsigned> indices;

    FamilySpec(unsigned g_, std::vector<unsigned> idx);
};

// Fixed example knots.
SeifertMatrix unknot_seifert();
SeifertMatrix figure_eight_seifert();
SeifertMatrix torus_2_5_seifert();

// The amphichiral two-bridge base with parameter t >= 1: Seifert matrix
// [[t, 1], [0, -t]], surgery framings (-2t, 2t), double branched cover group
// Z/(4t^2+1) where the second meridian class is 2t times the first.
struct SatelliteBase {
    SeifertMatrix seifert;
    HopfSurgery surgery;
};
SatelliteBase two_bridge_base(unsigned t);

// The base infected along both surgery axes by the multiplicity-fold sum of
// the companion: +companion at the class-2t axis, -companion at the class-1
// axis. With the unknot companion this is just the base knot.
SatelliteKnot build_infected_base(const SatelliteBase& base, const SeifertMatrix& companion,
                                  const mpz_class& multiplicity);

// The family member for a FamilySpec (g, indices): for each index k_j, summands
// i = 1..2g+2 with global position l = k_j * (2g+2) + i and companion
// multiplicity 2^(2l+1) * g. All summands use the t = 1 base; the companion
// defaults to the (2,5) torus knot and may be overridden (e.g. by the unknot
// for negative controls).
KnotSum build_family(const FamilySpec& spec);
KnotSum build_family(const FamilySpec& spec, const SeifertMatrix& companion);

} // namespace cgsig
