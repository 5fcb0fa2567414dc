#include "cgsig/gilmer.hpp"

#include "cgsig/errors.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace cgsig {

std::vector<std::size_t> admissible_subspace_dims(std::size_t n, unsigned g) {
    // |A1 (+) B| splits as d generators from A1 and a half-rank metabolizing
    // complement inside the remaining N - d coordinates, so the dimension is
    // d + (N - d)/2 with N - d even and d <= min(2g, N).
    std::vector<std::size_t> dims;
    std::size_t dmax = std::min<std::size_t>(2 * g, n);
    for (std::size_t d = 0; d <= dmax; ++d) {
        if ((n - d) % 2 != 0)
            continue;
        dims.push_back(d + (n - d) / 2);
    }
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    return dims;
}

ObstructionInstance::ObstructionInstance(KnotSum knot, unsigned genus)
    : knot_(std::move(knot)), genus_(genus) {
    if (genus_ < 1)
        throw PreconditionError("genus threshold must be at least 1");
    if (knot_.size() == 0)
        throw PreconditionError("empty knot sum");
    for (const auto& s : knot_.summands) {
        const FinAbGroup& g = s.cover_group();
        if (g.invariant_factors.size() != 1 || g.invariant_factors[0] != 5)
            throw UnsupportedGroupError(
                "obstruction sweep requires every summand cover group to be Z/5");
    }
    base_signature_ = ordinary_signature(knot_);
    tables_ = summand_signature_tables(knot_, 5);
}

SignatureEstimate ObstructionInstance::estimate_at(const std::vector<unsigned>& coeffs) const {
    if (coeffs.size() != rank())
        throw DimensionMismatchError("character length does not match rank");
    SignatureEstimate est;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        est = est + tables_[i][coeffs[i] % 5];
    return est;
}

mpq_class ObstructionInstance::certified_bound(const std::vector<unsigned>& coeffs) const {
    SignatureEstimate est = estimate_at(coeffs);
    mpq_class shifted = est.center + base_signature_;
    return abs(shifted) - est.slack;
}

std::optional<WitnessRecord> witness_search(const Subspace& s, const ObstructionInstance& inst) {
    if (s.ambient != inst.rank() || s.p != inst.p())
        throw DimensionMismatchError("subspace does not match the instance");
    Subspace ann = annihilator(s);
    std::size_t m = ann.dim();
    mpq_class threshold(4 * inst.genus());
    std::size_t n = s.ambient;

    // Nonzero coefficient tuples over the annihilator basis, canonical
    // odometer order (last coefficient fastest).
    std::vector<unsigned> coeff(m, 0);
    std::vector<unsigned> chi(n, 0);
    for (;;) {
        std::size_t k = m;
        while (k > 0) {
            if (++coeff[k - 1] < inst.p())
                break;
            coeff[k - 1] = 0;
            --k;
        }
        if (k == 0)
            return std::nullopt;
        std::fill(chi.begin(), chi.end(), 0);
        for (std::size_t i = 0; i < m; ++i) {
            if (coeff[i] == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                chi[j] = (chi[j] + coeff[i] * ann.basis[i][j]) % inst.p();
        }
        SignatureEstimate est = inst.estimate_at(chi);
        mpq_class shifted = est.center + inst.base_signature();
        mpq_class bound = abs(shifted) - est.slack;
        if (bound > threshold) {
            WitnessRecord rec;
            rec.subspace = s;
            rec.witness = Character{inst.p(), chi};
            rec.center = est.center;
            rec.slack = est.slack;
            rec.bound = bound;
            return rec;
        }
    }
}

ObstructionOutcome prove_genus_exceeds(const ObstructionInstance& inst, unsigned jobs) {
    std::size_t n = inst.rank();
    auto dims = admissible_subspace_dims(n, inst.genus());

    mpz_class total = 0;
    for (auto d : dims)
        total += gaussian_binomial(n, d, inst.p());
    if (total > 10000000)
        throw PreconditionError("sweep over " + total.get_str() +
                                " subspaces exceeds desk scale");

    if (jobs == 0) {
        jobs = std::thread::hardware_concurrency();
        if (jobs == 0)
            jobs = 1;
    }

    GenusCertificate cert;
    cert.genus = inst.genus();
    cert.p = inst.p();
    cert.rank = n;
    cert.knot = inst.knot();

    for (auto d : dims) {
        mpz_class count = gaussian_binomial(n, d, inst.p());
        std::size_t cnt = count.get_ui();
        std::vector<std::optional<WitnessRecord>> slots(cnt);
        // Earliest witnessless ordinal found so far. Workers skip ordinals at
        // or past it: the value only ever decreases, so everything before the
        // final minimum is still fully searched and the reported first failure
        // is the true sweep-order minimum regardless of scheduling.
        std::atomic<std::size_t> first_fail{SIZE_MAX};
        std::size_t nthreads = std::min<std::size_t>(jobs, cnt ? cnt : 1);
        std::vector<std::thread> pool;
        std::size_t chunk = cnt / nthreads, extra = cnt % nthreads;
        std::size_t start = 0;
        for (std::size_t t = 0; t < nthreads; ++t) {
            std::size_t len = chunk + (t < extra ? 1 : 0);
            std::size_t lo = start, hi = start + len;
            start = hi;
            pool.emplace_back([&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i) {
                    if (i >= first_fail.load(std::memory_order_relaxed))
                        break;
                    Subspace s = subspace_at(n, inst.p(), d, mpz_class(static_cast<unsigned long>(i)));
                    slots[i] = witness_search(s, inst);
                    if (!slots[i]) {
                        std::size_t cur = first_fail.load(std::memory_order_relaxed);
                        while (i < cur &&
                               !first_fail.compare_exchange_weak(cur, i,
                                                                 std::memory_order_relaxed)) {
                        }
                    }
                }
            });
        }
        for (auto& th : pool)
            th.join();
        std::size_t fail = first_fail.load(std::memory_order_relaxed);
        if (fail != SIZE_MAX)
            return Inconclusive{
                subspace_at(n, inst.p(), d, mpz_class(static_cast<unsigned long>(fail)))};
        for (std::size_t i = 0; i < cnt; ++i) {
            if (!slots[i])
                return Inconclusive{subspace_at(n, inst.p(), d, mpz_class(static_cast<unsigned long>(i)))};
            cert.records.push_back(std::move(*slots[i]));
        }
    }
    return cert;
}

} // namespace cgsig
