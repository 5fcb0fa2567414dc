#pragma once

#include "cgsig/cg_signatures.hpp"
#include "cgsig/fp_subspace.hpp"
#include "cgsig/knot.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace cgsig {

// Dimensions over F_p that a vanishing subspace A1 + B can take when the
// 4-genus is at most g: d + (N - d)/2 for 0 <= d <= min(2g, N) with N - d
// even. Sorted ascending, deduplicated.
std::vector<std::size_t> admissible_subspace_dims(std::size_t n, unsigned g);

// A knot sum prepared for the obstruction sweep: elementary abelian cover
// group (Z/5)^N, per-summand signature tables, ordinary signature. Throws
// UnsupportedGroupError unless every summand's cover group is Z/5.
class ObstructionInstance {
public:
    ObstructionInstance(KnotSum knot, unsigned genus);

    const KnotSum& knot() const { return knot_; }
    unsigned genus() const { return genus_; }
    unsigned p() const { return 5; }
    std::size_t rank() const { return knot_.size(); }
    int base_signature() const { return base_signature_; }

    // center +- slack of the cover signature at the character with the given
    // coefficient vector (entries in [0, 5)).
    SignatureEstimate estimate_at(const std::vector<unsigned>& coeffs) const;

    // |center + ordinary signature| - slack, the certified magnitude.
    mpq_class certified_bound(const std::vector<unsigned>& coeffs) const;

private:
    KnotSum knot_;
    unsigned genus_;
    int base_signature_;
    std::vector<std::vector<SignatureEstimate>> tables_;
};

// One subspace dispatched: a witness character vanishing on it whose
// certified signature magnitude strictly exceeds the threshold 4g.
struct WitnessRecord {
    Subspace subspace;
    Character witness;
    mpq_class center;
    mpq_class slack;
    mpq_class bound; // |center + base signature| - slack
};

struct GenusCertificate {
    unsigned genus = 0;
    unsigned p = 5;
    std::size_t rank = 0;
    KnotSum knot;
    std::vector<WitnessRecord> records; // sweep order: dim ascending, canonical within
};

// First subspace (in sweep order) with no witness in its annihilator.
struct Inconclusive {
    Subspace first_failing;
};

using ObstructionOutcome = std::variant<GenusCertificate, Inconclusive>;

// Scan the annihilator of S (nonzero characters in canonical odometer order)
// for the first witness with certified bound > 4g.
std::optional<WitnessRecord> witness_search(const Subspace& s, const ObstructionInstance& inst);

// Sweep every subspace of every admissible dimension. Deterministic: the
// certificate (or first failure) is identical for any jobs count; jobs == 0
// means hardware concurrency. Throws PreconditionError when the sweep size
// exceeds desk scale (10^7 subspaces).
ObstructionOutcome prove_genus_exceeds(const ObstructionInstance& inst, unsigned jobs = 0);

} // namespace cgsig
