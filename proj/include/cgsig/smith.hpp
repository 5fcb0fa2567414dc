#pragma once

#include "cgsig/int_matrix.hpp"

#include <vector>

namespace cgsig {

// U * A * W = D with U, W unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}
// (zeros trail the chain).
struct SmithResult {
    IntMatrix D, U, W;
};

SmithResult smith_normal_form(const IntMatrix& a);

// Finite abelian group as its invariant factor chain (factors > 1 only,
// each dividing the next).
struct FinAbGroup {
    std::vector<mpz_class> invariant_factors;

    mpz_class order() const;
    bool is_trivial() const { return invariant_factors.empty(); }
    // True iff the group is (Z/p)^rank for the given prime p.
    bool is_elementary_abelian(const mpz_class& p) const;
    std::size_t rank() const { return invariant_factors.size(); }
    bool operator==(const FinAbGroup& o) const = default;
};

// Cokernel of the transpose of a relation matrix (rows = relations over the
// column generators), plus the image of each generator in invariant-factor
// coordinates (entry i reduced into [0, d_i)).
struct GroupPresentation {
    FinAbGroup group;
    std::vector<std::vector<mpz_class>> generator_classes;
};

// Throws InfiniteGroupError when the cokernel has a free part.
GroupPresentation group_from_presentation(const IntMatrix& relations);

} // namespace cgsig
