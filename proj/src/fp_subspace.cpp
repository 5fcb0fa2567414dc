#include "cgsig/fp_subspace.hpp"

#include "cgsig/errors.hpp"

#include <algorithm>

namespace cgsig {

namespace {

unsigned inv_mod(unsigned a, unsigned p) {
    // p prime, 0 < a < p
    long long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        long long q = r / newr;
        std::swap(t, newt);
        newt -= q * t;
        std::swap(r, newr);
        newr -= q * r;
    }
    long long v = t % p;
    if (v < 0)
        v += p;
    return static_cast<unsigned>(v);
}

// In-place RREF; returns pivot columns. Entries assumed already in [0, p).
std::vector<std::size_t> rref(std::vector<std::vector<unsigned>>& rows, unsigned p,
                              std::size_t n) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][col] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[r], rows[sel]);
        unsigned inv = inv_mod(rows[r][col], p);
        for (std::size_t j = col; j < n; ++j)
            rows[r][j] = static_cast<unsigned>((static_cast<unsigned long long>(rows[r][j]) * inv) % p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0)
                continue;
            unsigned f = rows[i][col];
            for (std::size_t j = col; j < n; ++j) {
                unsigned long long v = rows[i][j] + static_cast<unsigned long long>(p - f) * rows[r][j];
                rows[i][j] = static_cast<unsigned>(v % p);
            }
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// Free positions of the RREF pattern for a pivot set, row-major order.
std::vector<std::pair<std::size_t, std::size_t>> free_positions(const std::vector<std::size_t>& piv,
                                                                std::size_t n) {
    std::vector<bool> is_piv(n, false);
    for (auto c : piv)
        is_piv[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = piv[i] + 1; j < n; ++j)
            if (!is_piv[j])
                out.emplace_back(i, j);
    return out;
}

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
    std::size_t d = comb.size();
    for (std::size_t i = d; i-- > 0;) {
        if (comb[i] < n - d + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < d; ++j)
                comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

Subspace build_from_pattern(std::size_t n, unsigned p, const std::vector<std::size_t>& piv,
                            const std::vector<std::pair<std::size_t, std::size_t>>& free_pos,
                            const std::vector<unsigned>& digits) {
    Subspace s;
    s.p = p;
    s.ambient = n;
    s.basis.assign(piv.size(), std::vector<unsigned>(n, 0));
    for (std::size_t i = 0; i < piv.size(); ++i)
        s.basis[i][piv[i]] = 1;
    for (std::size_t k = 0; k < free_pos.size(); ++k)
        s.basis[free_pos[k].first][free_pos[k].second] = digits[k];
    return s;
}

} // namespace

bool Subspace::contains(const std::vector<unsigned>& v) const {
    if (v.size() != ambient)
        throw DimensionMismatchError("vector length does not match ambient dimension");
    std::vector<unsigned> w(v);
    for (auto& x : w)
        x %= p;
    for (const auto& row : basis) {
        std::size_t piv = 0;
        while (piv < ambient && row[piv] == 0)
            ++piv;
        if (piv == ambient || w[piv] == 0)
            continue;
        unsigned f = w[piv];
        for (std::size_t j = 0; j < ambient; ++j)
            w[j] = static_cast<unsigned>((w[j] + static_cast<unsigned long long>(p - f) * row[j]) % p);
    }
    return std::all_of(w.begin(), w.end(), [](unsigned x) { return x == 0; });
}

Subspace subspace_from_spanning(unsigned p, std::size_t ambient,
                                const std::vector<std::vector<unsigned>>& spanning) {
    if (p < 2)
        throw PreconditionError("field characteristic must be at least 2");
    std::vector<std::vector<unsigned>> rows;
    rows.reserve(spanning.size());
    for (const auto& v : spanning) {
        if (v.size() != ambient)
            throw DimensionMismatchError("spanning vector length mismatch");
        auto w = v;
        for (auto& x : w)
            x %= p;
        rows.push_back(std::move(w));
    }
    rref(rows, p, ambient);
    Subspace s;
    s.p = p;
    s.ambient = ambient;
    s.basis = std::move(rows);
    return s;
}

Subspace annihilator(const Subspace& s) {
    // Kernel of the basis matrix: one vector per non-pivot column.
    std::vector<std::size_t> piv;
    std::vector<bool> is_piv(s.ambient, false);
    for (const auto& row : s.basis) {
        std::size_t c = 0;
        while (c < s.ambient && row[c] == 0)
            ++c;
        piv.push_back(c);
        is_piv[c] = true;
    }
    std::vector<std::vector<unsigned>> gens;
    for (std::size_t f = 0; f < s.ambient; ++f) {
        if (is_piv[f])
            continue;
        std::vector<unsigned> v(s.ambient, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = (s.p - s.basis[i][f]) % s.p;
        gens.push_back(std::move(v));
    }
    return subspace_from_spanning(s.p, s.ambient, gens);
}

mpz_class gaussian_binomial(std::size_t n, std::size_t d, unsigned p) {
    if (d > n)
        return 0;
    mpz_class num = 1, den = 1, pz = p;
    for (std::size_t i = 0; i < d; ++i) {
        mpz_class pn, pd;
        mpz_pow_ui(pn.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(n - i));
        mpz_pow_ui(pd.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(d - i));
        num *= pn - 1;
        den *= pd - 1;
    }
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

Subspace subspace_at(std::size_t n, unsigned p, std::size_t d, const mpz_class& ordinal) {
    if (d > n)
        throw PreconditionError("subspace dimension exceeds ambient dimension");
    mpz_class left(ordinal);
    std::vector<std::size_t> comb(d);
    for (std::size_t i = 0; i < d; ++i)
        comb[i] = i;
    for (;;) {
        auto fp = free_positions(comb, n);
        mpz_class count, pz = p;
        mpz_pow_ui(count.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(fp.size()));
        if (left < count) {
            std::vector<unsigned> digits(fp.size(), 0);
            mpz_class v(left);
            for (std::size_t k = fp.size(); k-- > 0;) {
                digits[k] = static_cast<unsigned>(mpz_class(v % p).get_ui());
                v /= p;
            }
            return build_from_pattern(n, p, comb, fp, digits);
        }
        left -= count;
        if (!next_combination(comb, n))
            throw PreconditionError("subspace ordinal out of range");
    }
}

void for_each_subspace(std::size_t n, unsigned p, std::size_t d,
                       const std::function<void(const Subspace&)>& fn) {
    if (d > n)
        return;
    std::vector<std::size_t> comb(d);
    for (std::size_t i = 0; i < d; ++i)
        comb[i] = i;
    for (;;) {
        auto fp = free_positions(comb, n);
        std::vector<unsigned> digits(fp.size(), 0);
        for (;;) {
            fn(build_from_pattern(n, p, comb, fp, digits));
            // base-p odometer, last position fastest
            std::size_t k = digits.size();
            while (k > 0) {
                if (++digits[k - 1] < p)
                    break;
                digits[k - 1] = 0;
                --k;
            }
            if (k == 0)
                break;
        }
        if (!next_combination(comb, n))
            return;
    }
}

std::vector<Subspace> enumerate_subspaces(std::size_t n, unsigned p, std::size_t d) {
    std::vector<Subspace> out;
    for_each_subspace(n, p, d, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

} // namespace cgsig
