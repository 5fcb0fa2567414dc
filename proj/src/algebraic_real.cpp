#include "cgsig/algebraic_real.hpp"

#include "cgsig/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace cgsig {

namespace {

ZPoly to_primitive_z(const QPoly& q) {
    // Clear denominators, divide by content, make the leading coefficient positive.
    mpz_class lcm_den = 1;
    for (const auto& c : q)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z;
    z.reserve(q.size());
    mpz_class content = 0;
    for (const auto& c : q) {
        mpz_class v = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        z.push_back(v);
    }
    if (content == 0)
        return {};
    for (auto& v : z)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    if (z.back() < 0)
        for (auto& v : z)
            v = -v;
    return z;
}

mpq_class cauchy_bound(const QPoly& p) {
    mpq_class m = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        m = std::max(m, mpq_class(abs(p[i] / p.back())));
    return m + 1;
}

} // namespace

AlgebraicReal::AlgebraicReal(ZPoly defining, mpq_class lo, mpq_class hi)
    : poly_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {
    qpoly_ = poly::from_z(poly_);
    if (poly::degree(qpoly_) < 1)
        throw PreconditionError("defining polynomial must be nonconstant");
    if (lo_ > hi_)
        throw PreconditionError("empty isolating interval");
    chain_ = poly::sturm_chain(qpoly_);
    if (lo_ == hi_) {
        if (poly::eval(qpoly_, lo_) != 0)
            throw PreconditionError("degenerate interval endpoint is not a root");
        return;
    }
    if (poly::eval(qpoly_, lo_) == 0 || poly::eval(qpoly_, hi_) == 0)
        throw PreconditionError("isolating interval endpoints must not be roots");
    if (poly::count_roots_halfopen(chain_, lo_, hi_) != 1)
        throw PreconditionError("interval does not isolate exactly one root");
}

std::vector<AlgebraicReal> AlgebraicReal::isolate_roots(const ZPoly& p) {
    QPoly sf = poly::squarefree_part(poly::from_z(p));
    ZPoly zsf = to_primitive_z(sf);
    if (zsf.size() <= 1)
        return {};
    QPoly q = poly::from_z(zsf);
    auto chain = poly::sturm_chain(q);
    mpq_class b = cauchy_bound(q);

    std::vector<std::pair<mpq_class, mpq_class>> found;
    // Invariant: q(lo) != 0, q(hi) != 0.
    auto recurse = [&](auto&& self, const mpq_class& lo, const mpq_class& hi) -> void {
        int k = poly::count_roots_halfopen(chain, lo, hi);
        if (k == 0)
            return;
        if (k == 1) {
            found.emplace_back(lo, hi);
            return;
        }
        mpq_class mid = (lo + hi) / 2;
        if (poly::eval(q, mid) == 0) {
            // Rational root at the midpoint: emit it degenerately and inset
            // the flanks until the midpoint is cleanly excluded.
            mpq_class delta = (hi - lo) / 4;
            while (poly::count_roots_halfopen(chain, mid - delta, mid + delta) != 1 ||
                   poly::eval(q, mid - delta) == 0 || poly::eval(q, mid + delta) == 0)
                delta /= 2;
            self(self, lo, mid - delta);
            found.emplace_back(mid, mid);
            self(self, mid + delta, hi);
            return;
        }
        self(self, lo, mid);
        self(self, mid, hi);
    };
    recurse(recurse, -b, b);

    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b2) { return a.first < b2.first; });
    std::vector<AlgebraicReal> out;
    out.reserve(found.size());
    for (auto& [lo, hi] : found)
        out.emplace_back(zsf, lo, hi);
    return out;
}

bool AlgebraicReal::is_rational() const {
    return poly_.size() == 2;
}

mpq_class AlgebraicReal::rational_value() const {
    if (!is_rational())
        throw PreconditionError("algebraic number is not rational");
    return mpq_class(-poly_[0], poly_[1]);
}

int AlgebraicReal::sign_of(const QPoly& f_in) const {
    QPoly f(f_in);
    poly::normalize(f);
    if (f.empty())
        return 0;

    // f vanishes at this number iff it shares the isolated root with the
    // defining polynomial.
    QPoly g = poly::gcd(f, qpoly_);
    if (poly::degree(g) >= 1) {
        if (lo_ == hi_) {
            if (poly::eval(g, lo_) == 0)
                return 0;
        } else {
            auto gchain = poly::sturm_chain(g);
            if (poly::count_roots_halfopen(gchain, lo_, hi_) > 0)
                return 0;
        }
    }

    mpq_class lo = lo_, hi = hi_;
    if (lo == hi)
        return sgn(poly::eval(f, lo));
    int slo = sgn(poly::eval(qpoly_, lo));
    for (;;) {
        auto [vl, vh] = poly::interval_eval(f, lo, hi);
        if (vl > 0)
            return 1;
        if (vh < 0)
            return -1;
        mpq_class mid = (lo + hi) / 2;
        int smid = sgn(poly::eval(qpoly_, mid));
        if (smid == 0)
            return sgn(poly::eval(f, mid));
        if (smid == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

double AlgebraicReal::approx() const {
    mpq_class lo = lo_, hi = hi_;
    if (lo == hi)
        return lo.get_d();
    int slo = sgn(poly::eval(qpoly_, lo));
    for (int i = 0; i < 80 && hi - lo > mpq_class(1, 1 << 30); ++i) {
        mpq_class mid = (lo + hi) / 2;
        int smid = sgn(poly::eval(qpoly_, mid));
        if (smid == 0)
            return mid.get_d();
        if (smid == slo)
            lo = mid;
        else
            hi = mid;
    }
    return mpq_class((lo + hi) / 2).get_d();
}

ZPoly cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, ZPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    auto compute = [](auto&& self, unsigned m) -> ZPoly {
        auto it = cache.find(m);
        if (it != cache.end())
            return it->second;
        ZPoly result;
        if (m == 1) {
            result = {-1, 1};
        } else {
            QPoly num(m + 1, 0);
            num[0] = -1;
            num[m] = 1;
            for (unsigned d = 1; d < m; ++d) {
                if (m % d != 0)
                    continue;
                auto [q, r] = poly::divrem(num, poly::from_z(self(self, d)));
                if (!r.empty())
                    throw Error("cyclotomic division left a remainder");
                num = std::move(q);
            }
            result = to_primitive_z(num);
        }
        cache[m] = result;
        return result;
    };
    return compute(compute, n);
}

ZPoly min_poly_two_cos(unsigned n) {
    if (n < 3)
        throw PreconditionError("min_poly_two_cos requires n >= 3");
    ZPoly phi = cyclotomic_polynomial(n);
    std::size_t deg = phi.size() - 1; // = phi(n), even for n >= 3
    std::size_t half = deg / 2;
    // Phi_n(z) = z^half * Psi(z + 1/z) via z^m + z^-m = p_m(x),
    // p_0 = 2, p_1 = x, p_{m+1} = x p_m - p_{m-1}.
    QPoly psi = {mpq_class(phi[half])};
    QPoly pm_prev = {2}, pm = {0, 1};
    for (std::size_t m = 1; m <= half; ++m) {
        psi = poly::add(psi, poly::scale(pm, mpq_class(phi[half + m])));
        if (m < half) {
            QPoly next = poly::sub(poly::mul(QPoly{0, 1}, pm), pm_prev);
            pm_prev = std::move(pm);
            pm = std::move(next);
        }
    }
    return to_primitive_z(psi);
}

RealCyclotomicField::RealCyclotomicField(unsigned n_, unsigned k)
    : n(n_), psi(min_poly_two_cos(n_)),
      c([&] {
          if (n_ < 3)
              throw PreconditionError("real cyclotomic field requires n >= 3");
          if (k == 0 || k >= n_ || std::gcd(k, n_) != 1)
              throw PreconditionError("field conjugate index must be a unit mod n");
          auto roots = AlgebraicReal::isolate_roots(min_poly_two_cos(n_));
          // Roots are 2cos(2*pi*j/n) for the units j <= n/2, decreasing in j;
          // isolate_roots returns them in ascending numeric order.
          unsigned kk = std::min(k, n_ - k);
          std::size_t rank = 0; // position of our root in decreasing order, 1-based
          for (unsigned j = 1; j <= kk; ++j)
              if (std::gcd(j, n_) == 1)
                  ++rank;
          return roots.at(roots.size() - rank);
      }()) {}

QPoly RealCyclotomicField::reduce(const QPoly& f) const {
    if (poly::degree(f) < static_cast<int>(degree()))
        return f;
    return poly::divrem(f, poly::from_z(psi)).second;
}

QPoly RealCyclotomicField::mul(const QPoly& a, const QPoly& b) const {
    return reduce(poly::mul(a, b));
}

int RealCyclotomicField::sign(const QPoly& f) const {
    return c.sign_of(reduce(f));
}

} // namespace cgsig
