#pragma once

#include <gmpxx.h>
#include <cstddef>
#include <functional>
#include <vector>

namespace cgsig {

// Subspace of F_p^n held in canonical form: basis rows in reduced row echelon
// form (leading 1s, pivot columns cleared, rows ordered by pivot column).
// Equal subspaces therefore compare equal componentwise.
struct Subspace {
    unsigned p = 0;
    std::size_t ambient = 0;
    std::vector<std::vector<unsigned>> basis; // RREF rows, entries in [0, p)

    std::size_t dim() const { return basis.size(); }
    bool contains(const std::vector<unsigned>& v) const;
    bool operator==(const Subspace& o) const = default;
};

// Canonicalize an arbitrary spanning set (entries taken mod p).
Subspace subspace_from_spanning(unsigned p, std::size_t ambient,
                                const std::vector<std::vector<unsigned>>& spanning);

// All vectors orthogonal to S under the standard dot product, in canonical form.
// dim(annihilator) == ambient - dim(S); annihilator(annihilator(S)) == S.
Subspace annihilator(const Subspace& s);

// Number of d-dimensional subspaces of F_p^n (Gaussian binomial coefficient).
mpz_class gaussian_binomial(std::size_t n, std::size_t d, unsigned p);

// Canonical enumeration order for the d-dimensional subspaces of F_p^n:
// pivot-column sets in lexicographic order, then the free entries of the RREF
// pattern as a base-p odometer over row-major positions, last position
// fastest. subspace_at gives random access by ordinal (0-based) in that
// order, which the parallel sweep uses to partition work deterministically.
Subspace subspace_at(std::size_t n, unsigned p, std::size_t d, const mpz_class& ordinal);
void for_each_subspace(std::size_t n, unsigned p, std::size_t d,
                       const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> enumerate_subspaces(std::size_t n, unsigned p, std::size_t d);

} // namespace cgsig
