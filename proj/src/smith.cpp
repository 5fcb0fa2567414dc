#include "cgsig/smith.hpp"

#include "cgsig/errors.hpp"

#include <cstdlib>

namespace cgsig {

namespace {

struct Worker {
    IntMatrix D, U, W;
    std::size_t m, n;

    explicit Worker(const IntMatrix& a)
        : D(a), U(IntMatrix::identity(a.rows())), W(IntMatrix::identity(a.cols())),
          m(a.rows()), n(a.cols()) {}

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t j = 0; j < n; ++j)
            std::swap(D.at(a, j), D.at(b, j));
        for (std::size_t j = 0; j < m; ++j)
            std::swap(U.at(a, j), U.at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t i = 0; i < m; ++i)
            std::swap(D.at(i, a), D.at(i, b));
        for (std::size_t i = 0; i < n; ++i)
            std::swap(W.at(i, a), W.at(i, b));
    }
    // row[a] += q * row[b]
    void add_row(std::size_t a, std::size_t b, const mpz_class& q) {
        for (std::size_t j = 0; j < n; ++j)
            D.at(a, j) += q * D.at(b, j);
        for (std::size_t j = 0; j < m; ++j)
            U.at(a, j) += q * U.at(b, j);
    }
    // col[a] += q * col[b]
    void add_col(std::size_t a, std::size_t b, const mpz_class& q) {
        for (std::size_t i = 0; i < m; ++i)
            D.at(i, a) += q * D.at(i, b);
        for (std::size_t i = 0; i < n; ++i)
            W.at(i, a) += q * W.at(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < n; ++j)
            D.at(a, j) = -D.at(a, j);
        for (std::size_t j = 0; j < m; ++j)
            U.at(a, j) = -U.at(a, j);
    }

    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        mpz_class best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (D.at(i, j) == 0)
                    continue;
                mpz_class a = abs(D.at(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void run() {
        std::size_t r = std::min(m, n);
        for (std::size_t t = 0; t < r; ++t) {
            for (;;) {
                std::size_t pi, pj;
                if (!find_pivot(t, pi, pj))
                    goto diagonal_done; // remaining block is zero
                swap_rows(t, pi);
                swap_cols(t, pj);

                bool clean = true;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (D.at(i, t) == 0)
                        continue;
                    mpz_class q;
                    mpz_tdiv_q(q.get_mpz_t(), D.at(i, t).get_mpz_t(), D.at(t, t).get_mpz_t());
                    add_row(i, t, -q);
                    if (D.at(i, t) != 0)
                        clean = false; // remainder smaller than pivot; loop again
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (D.at(t, j) == 0)
                        continue;
                    mpz_class q;
                    mpz_tdiv_q(q.get_mpz_t(), D.at(t, j).get_mpz_t(), D.at(t, t).get_mpz_t());
                    add_col(j, t, -q);
                    if (D.at(t, j) != 0)
                        clean = false;
                }
                if (!clean)
                    continue;
                // Pivot must divide the rest of the block for the invariant
                // factor chain; drag in an offending row and reduce again.
                bool divides = true;
                for (std::size_t i = t + 1; i < m && divides; ++i)
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (D.at(i, j) % D.at(t, t) != 0) {
                            add_row(t, i, 1);
                            divides = false;
                            break;
                        }
                if (divides)
                    break;
            }
        }
    diagonal_done:
        for (std::size_t t = 0; t < r; ++t)
            if (D.at(t, t) < 0)
                negate_row(t);
    }
};

} // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
    Worker w(a);
    w.run();
    return {w.D, w.U, w.W};
}

mpz_class FinAbGroup::order() const {
    mpz_class o = 1;
    for (const auto& d : invariant_factors)
        o *= d;
    return o;
}

bool FinAbGroup::is_elementary_abelian(const mpz_class& p) const {
    for (const auto& d : invariant_factors)
        if (d != p)
            return false;
    return true;
}

GroupPresentation group_from_presentation(const IntMatrix& relations) {
    // Rows are relations among the column generators; the group is the
    // cokernel of the transpose (columns of B = relations^T are relations).
    IntMatrix b = relations.transpose();
    SmithResult s = smith_normal_form(b);
    std::size_t gens = b.rows();
    std::size_t rank = std::min(b.rows(), b.cols());

    std::vector<mpz_class> diag(gens, 0);
    for (std::size_t i = 0; i < rank; ++i)
        diag[i] = s.D.at(i, i);

    GroupPresentation out;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < gens; ++i) {
        if (diag[i] == 0)
            throw InfiniteGroupError("presented group has a free summand");
        if (diag[i] != 1) {
            out.group.invariant_factors.push_back(diag[i]);
            kept.push_back(i);
        }
    }
    // Generator j maps to column j of U in diagonal coordinates.
    out.generator_classes.resize(gens);
    for (std::size_t j = 0; j < gens; ++j) {
        for (std::size_t idx = 0; idx < kept.size(); ++idx) {
            std::size_t i = kept[idx];
            mpz_class v = s.U.at(i, j) % diag[i];
            if (v < 0)
                v += diag[i];
            out.generator_classes[j].push_back(v);
        }
    }
    return out;
}

} // namespace cgsig
