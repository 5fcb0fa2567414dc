#pragma once

#include "cgsig/cg_signatures.hpp"
#include "cgsig/fp_subspace.hpp"
#include "cgsig/gilmer.hpp"
#include "cgsig/knot.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cgsig {

struct CheckLine {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct WorkedExampleReport {
    std::vector<CheckLine> checks;
    bool all_ok = false;
};

// Recompute the frozen figure-eight reference table from first principles:
// cover group and meridian relation, the five character signatures via the
// surgery formula, conjugation symmetry, and the |value| < 2 envelope.
// The surgery framings and modulus are parameters so tests can perturb them:
// framings (-2, 3) must fail the group check, q = 3 must be rejected as a
// precondition violation before any table is produced.
struct WorkedExampleOptions {
    mpz_class framing_a = -2;
    mpz_class framing_b = 2;
    unsigned q = 5;
};
WorkedExampleReport verify_base_reference_table(const WorkedExampleOptions& opt = {});

// Throws VerificationMismatchError naming the first failing check.
void require_base_reference_table(const WorkedExampleOptions& opt = {});

// The closed-form lower bound for the family member at global position l
// with genus parameter g: star = (2^(2l+3) g - 2) - sum_{k=1}^{l-1} (2^(2k+3) g + 2),
// evaluated three ways (defining sum and two closed forms) plus the strict
// comparison chain down to 4g. Requires l > 2g + 2 (HypothesisViolationError).
struct AnalyticBoundReport {
    unsigned g = 0;
    unsigned l = 0;
    mpz_class dominant; // 2^(2l+3) g - 2
    mpz_class tail;     // sum_{k=1}^{l-1} (2^(2k+3) g + 2)
    mpz_class star;     // dominant - tail
    mpz_class closed_form_grouped;    // 8g(2^(2l) - sum_{k<l} 2^(2k)) - 2l
    mpz_class closed_form_simplified; // g(2^(2l+4) + 32)/3 - 2l
    bool forms_agree = false;
    // star > (g/3) 2^(2l+2) - 2l > 2^(2l) - 2l > 2l > 4g+4 > 4g
    std::vector<mpq_class> chain;
    bool chain_strict = false;
    bool passes() const { return forms_agree && chain_strict; }
};
AnalyticBoundReport analytic_lower_bound(unsigned g, unsigned l);

// Exhaustive scan over all nonzero characters of (Z/5)^N: min certified
// bound and whether every character strictly exceeds 4g. Used as the
// desk-scale check when the subspace sweep is out of reach (N = 8: every
// admissible dimension is < N, so each annihilator is nontrivial and a
// uniformly-exceeding table implies a witness for every subspace).
struct CharacterScanReport {
    mpz_class characters_checked;
    bool all_exceed = false;
    mpq_class min_bound;
    Character argmin;
};
CharacterScanReport exhaustive_character_scan(const KnotSum& k, unsigned g);

// Brute-force search for a half-rank subspace on which the linking form of
// the double branched cover vanishes (the algebraic-sliceness direction that
// makes the ordinary signature invisible to this knot family). Canonical
// enumeration order; first hit wins.
struct MetabolizerReport {
    bool found = false;
    Subspace metabolizer;
    mpz_class examined;
};
MetabolizerReport find_metabolizer(const KnotSum& k);

// Side-by-side harness for one family member: the exhaustive subspace sweep
// (or, above the sweep cap, the exhaustive character scan), each witness
// bound compared against the analytic prediction for its top supported
// position, and the metabolizer search. With unknot companions the sweep is
// expected to come back inconclusive (negative control).
struct CrossValidationReport {
    unsigned g = 0;
    std::vector<unsigned> indices;
    bool unknot_companions = false;
    std::size_t rank = 0;

    bool swept = false;
    bool proved = false;
    std::size_t record_count = 0;
    std::optional<Subspace> first_failing;

    bool analytic_checked = false;
    bool analytic_ok = false;       // every witness bound >= its prediction
    mpq_class min_margin;           // min over records of bound - prediction
    std::size_t min_margin_index = 0;

    std::optional<CharacterScanReport> scan;
    std::optional<MetabolizerReport> metabolizer;
};
CrossValidationReport cross_validate(const FamilySpec& spec, bool unknot_companions = false,
                                     std::size_t sweep_cap_rank = 6, unsigned jobs = 0);

// Analytic prediction for a witness character: the star bound at the largest
// global position its support touches (positions as in build_family).
mpz_class witness_analytic_prediction(const FamilySpec& spec, const Character& chi);

} // namespace cgsig
