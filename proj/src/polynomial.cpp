#include "cgsig/polynomial.hpp"

#include "cgsig/errors.hpp"

#include <algorithm>

namespace cgsig {
namespace poly {

void normalize(QPoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

int degree(const QPoly& p) {
    return static_cast<int>(p.size()) - 1;
}

QPoly from_z(const ZPoly& p) {
    QPoly q;
    q.reserve(p.size());
    for (const auto& c : p)
        q.emplace_back(c);
    normalize(q);
    return q;
}

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size())
            r[i] += a[i];
        if (i < b.size())
            r[i] += b[i];
    }
    normalize(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    return add(a, neg(b));
}

QPoly neg(const QPoly& a) {
    QPoly r(a);
    for (auto& c : r)
        c = -c;
    return r;
}

QPoly scale(const QPoly& a, const mpq_class& c) {
    if (c == 0)
        return {};
    QPoly r(a);
    for (auto& x : r)
        x *= c;
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty())
        return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    normalize(r);
    return r;
}

QPoly derivative(const QPoly& a) {
    if (a.size() <= 1)
        return {};
    QPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = a[i] * static_cast<unsigned long>(i);
    normalize(r);
    return r;
}

mpq_class eval(const QPoly& a, const mpq_class& x) {
    mpq_class v = 0;
    for (std::size_t i = a.size(); i-- > 0;)
        v = v * x + a[i];
    return v;
}

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
    if (b.empty())
        throw PreconditionError("polynomial division by zero");
    QPoly r(a), q;
    if (a.size() >= b.size())
        q.assign(a.size() - b.size() + 1, 0);
    while (r.size() >= b.size()) {
        mpq_class f = r.back() / b.back();
        std::size_t shift = r.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[shift + i] -= f * b[i];
        // leading term cancels exactly
        r.pop_back();
        while (!r.empty() && r.back() == 0)
            r.pop_back();
    }
    normalize(q);
    return {q, r};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly x(a), y(b);
    normalize(x);
    normalize(y);
    while (!y.empty()) {
        QPoly r = divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.empty()) {
        mpq_class lead = x.back();
        for (auto& c : x)
            c /= lead;
    }
    return x;
}

QPoly squarefree_part(const QPoly& p) {
    if (p.size() <= 1)
        return p;
    QPoly g = gcd(p, derivative(p));
    return divrem(p, g).first;
}

std::pair<mpq_class, mpq_class> interval_eval(const QPoly& p, const mpq_class& lo,
                                              const mpq_class& hi) {
    // Interval Horner: [l, h] <- [l, h] * [lo, hi] + coefficient.
    mpq_class l = 0, h = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        mpq_class c1 = l * lo, c2 = l * hi, c3 = h * lo, c4 = h * hi;
        mpq_class nl = std::min(std::min(c1, c2), std::min(c3, c4));
        mpq_class nh = std::max(std::max(c1, c2), std::max(c3, c4));
        l = nl + p[i];
        h = nh + p[i];
    }
    return {l, h};
}

int sign_variations(const QPoly& p) {
    int count = 0, last = 0;
    for (const auto& c : p) {
        int s = sgn(c);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++count;
        last = s;
    }
    return count;
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> chain;
    QPoly p0(p);
    normalize(p0);
    if (p0.empty())
        return chain;
    chain.push_back(p0);
    QPoly p1 = derivative(p0);
    while (!p1.empty()) {
        chain.push_back(p1);
        QPoly r = neg(divrem(chain[chain.size() - 2], p1).second);
        p1 = std::move(r);
    }
    return chain;
}

int sturm_variations_at(const std::vector<QPoly>& chain, const mpq_class& x) {
    int count = 0, last = 0;
    for (const auto& p : chain) {
        int s = sgn(eval(p, x));
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++count;
        last = s;
    }
    return count;
}

int count_roots_halfopen(const std::vector<QPoly>& chain, const mpq_class& lo,
                         const mpq_class& hi) {
    if (lo >= hi)
        return 0;
    return sturm_variations_at(chain, lo) - sturm_variations_at(chain, hi);
}

} // namespace poly
} // namespace cgsig
