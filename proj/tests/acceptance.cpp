// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failed criteria. Each criterion is self-contained and uses only public
// library APIs plus the command-line binary.

#include "cgsig/cg_signatures.hpp"
#include "cgsig/fp_subspace.hpp"
#include "cgsig/gilmer.hpp"
#include "cgsig/int_matrix.hpp"
#include "cgsig/json_io.hpp"
#include "cgsig/knot.hpp"
#include "cgsig/rational_io.hpp"
#include "cgsig/signature_forms.hpp"
#include "cgsig/smith.hpp"
#include "cgsig/verify.hpp"

#include "numeric_oracle.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <variant>
#include <vector>

using namespace cgsig;

namespace {

#ifndef CGSIG_CLI_PATH
#error "CGSIG_CLI_PATH must point at the command-line binary"
#endif

struct CliResult {
    int exit_code = -1;
    std::string out;
};

std::string temp_path(const char* tag) {
    static int counter = 0;
    std::ostringstream ss;
    ss << "/tmp/cgsig_accept_" << getpid() << "_" << counter++ << "_" << tag;
    return ss.str();
}

CliResult run_cli(const std::string& args) {
    std::string out_file = temp_path("out");
    std::string cmd = std::string(CGSIG_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    CliResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    res.out = ss.str();
    return res;
}

mpz_class pow2(unsigned e) { return mpz_class(1) << e; }

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> entry(lo, hi);
    std::vector<std::vector<mpz_class>> rows(r, std::vector<mpz_class>(c));
    for (auto& row : rows)
        for (auto& x : row)
            x = entry(rng);
    return IntMatrix::from_rows(rows);
}

bool is_diagonal(const IntMatrix& d) {
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d.at(i, j) != 0)
                return false;
    return true;
}

// --- criterion 1: exact surgery-formula signatures, sub-millisecond ---

bool criterion1(std::string& detail) {
    bool ok = cf_hopf_signature(-2, 2, 5, 1, 2) == mpq_class(1, 5) &&
              cf_hopf_signature(-2, 2, 5, 2, 4) == mpq_class(-1, 5);

    mpq_class sink;
    auto start = std::chrono::steady_clock::now();
    for (int rep = 0; rep < 1000; ++rep) {
        // the two values are exact negatives, so the accumulator must stay 0
        sink += cf_hopf_signature(-2, 2, 5, 1, 2);
        sink += cf_hopf_signature(-2, 2, 5, 2, 4);
    }
    auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    double avg_us = static_cast<double>(micros) / 2000.0;
    ok = ok && avg_us < 1000.0 && sink == 0;

    std::ostringstream ss;
    ss << "(1,2) -> 1/5 and (2,4) -> -1/5 exact, avg " << avg_us << " us per evaluation";
    detail = ss.str();
    return ok;
}

// --- criterion 2: double-cover homology groups and meridian relation ---

bool criterion2(std::string& detail) {
    auto p = group_from_presentation(IntMatrix::from_rows({{-2, 1}, {1, 2}}));
    bool ok = p.group.invariant_factors == std::vector<mpz_class>{5} &&
              p.generator_classes.size() == 2;
    // the second meridian class is twice the first in Z/5
    if (ok) {
        mpz_class rel = 2 * p.generator_classes[0][0] - p.generator_classes[1][0];
        ok = rel % 5 == 0;
    }
    for (int a = 1; a <= 5 && ok; ++a) {
        mpz_class order = 4 * a * a + 1;
        auto pa = group_from_presentation(IntMatrix::from_rows({{2 * a, 1}, {1, -2 * a}}));
        ok = pa.group.invariant_factors == std::vector<mpz_class>{order};
        if (ok) {
            // flipped framing signs reverse the relation: first = 2a * second
            mpz_class rel = pa.generator_classes[0][0] - 2 * a * pa.generator_classes[1][0];
            ok = rel % order == 0;
        }
    }
    detail = "Z/5 with second meridian class twice the first; Z/(4a^2+1) for a = 1..5";
    return ok;
}

// --- criterion 3: fifth-root signatures of the (2,5) torus knot, scaled ---

bool criterion3(std::string& detail) {
    SeifertMatrix t25 = torus_2_5_seifert();
    int expected[5] = {0, -2, -4, -4, -2};
    bool ok = true;
    for (unsigned k = 1; k <= 4; ++k)
        ok = ok && tristram_levine(t25, 1, 5, k) == expected[k];

    for (unsigned g = 1; g <= 3 && ok; ++g) {
        for (unsigned i = 1; i <= 6 && ok; ++i) {
            mpz_class m = pow2(2 * i + 1) * g;
            ok = tristram_levine(t25, m, 5, 1) == -(pow2(2 * i + 2) * g) &&
                 tristram_levine(t25, m, 5, 2) == -(pow2(2 * i + 3) * g);
        }
    }

    // independent numeric eigenvalue oracle agrees at each fifth root
    for (unsigned k = 1; k <= 4 && ok; ++k) {
        auto sig = oracle::numeric_signature(oracle::realified_root_form(t25.V, 5, k));
        ok = sig.definite && sig.value == 2 * expected[k];
    }
    detail = "per-copy (-2,-4,-4,-2); multiples 2^(2i+1)g give -2^(2i+2)g, -2^(2i+3)g "
             "for i <= 6, g <= 3; numeric oracle agrees";
    return ok;
}

// --- criterion 4: per-summand estimate envelope around 2^(2i+3) g ---

bool criterion4(std::string& detail) {
    bool ok = true;
    int checked = 0;
    for (unsigned g = 1; g <= 2 && ok; ++g) {
        auto tables = summand_signature_tables(build_family(FamilySpec(g, {0})), 5);
        for (unsigned i = 1; i <= 4 && ok; ++i) {
            mpq_class target = pow2(2 * i + 3) * g;
            for (unsigned c = 1; c <= 4 && ok; ++c) {
                const SignatureEstimate& e = tables[i - 1][c];
                mpq_class mag = abs(e.center);
                ok = target - 2 <= mag - e.slack && mag + e.slack <= target + 2;
                ++checked;
            }
        }
    }
    std::ostringstream ss;
    ss << "all " << checked << " nontrivial character values lie in [2^(2i+3)g - 2, "
       << "2^(2i+3)g + 2] for i <= 4, g <= 2";
    detail = ss.str();
    return ok;
}

// --- criterion 5: end-to-end desk-scale proof with re-validated certificate ---

bool criterion5(std::string& detail) {
    std::string cert_file = temp_path("cert.json");
    auto start = std::chrono::steady_clock::now();
    CliResult sweep = run_cli("gilmer-check --family 1:0 --genus 1 --emit-cert " + cert_file);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool ok = sweep.exit_code == 0 && sweep.out.find("PROVED") != std::string::npos &&
              secs < 60.0;

    std::size_t n_records = 0;
    if (ok) {
        std::ifstream in(cert_file);
        json cert = json::parse(in, nullptr, false);
        ok = !cert.is_discarded() && cert["records"].is_array();
        if (ok) {
            n_records = cert["records"].size();
            ok = n_records == 962;
            for (const auto& rec : cert["records"]) {
                mpq_class bound =
                    abs(rational_from_json(rec["center"])) - rational_from_json(rec["slack"]);
                ok = ok && bound > 4;
            }
        }
    }

    CliResult check = run_cli("check-cert --input " + cert_file);
    ok = ok && check.exit_code == 0 && check.out == "VALID\n";

    std::ostringstream ss;
    ss << "proof found in " << secs << " s covering " << n_records
       << " subspaces, every witness bound > 4, certificate re-validates";
    detail = ss.str();
    return ok;
}

// --- criterion 6: closed-form lower bounds agree and dominate 4g ---

bool criterion6(std::string& detail) {
    bool ok = true;
    int checked = 0;
    for (unsigned g = 1; g <= 3 && ok; ++g) {
        for (unsigned l = 2 * g + 3; l <= 2 * g + 8 && ok; ++l) {
            AnalyticBoundReport rep = analytic_lower_bound(g, l);
            ok = rep.passes();

            // independent recomputation straight from the defining sum
            mpz_class star = pow2(2 * l + 3) * g - 2;
            for (unsigned k = 1; k < l; ++k)
                star -= pow2(2 * k + 3) * g + 2;
            ok = ok && star == rep.star;

            mpz_class mid = pow2(2 * l) - 2 * l;
            ok = ok && rep.star > mid && mid > 2 * l && 2 * l > 4 * g + 4;
            ++checked;
        }
    }
    std::ostringstream ss;
    ss << "both closed forms match the defining sum and the strict chain holds for all "
       << checked << " (g, l) pairs";
    detail = ss.str();
    return ok;
}

// --- criterion 7: randomized property suites, >= 200 cases each ---

bool property_smith(std::mt19937_64& rng, int& cases) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int it = 0; it < 220; ++it) {
        IntMatrix a = random_matrix(rng, dim(rng), dim(rng), -9, 9);
        SmithResult s = smith_normal_form(a);
        if (s.U * a * s.W != s.D || !is_diagonal(s.D))
            return false;
        if (abs(s.U.det()) != 1 || abs(s.W.det()) != 1)
            return false;
        std::size_t n = std::min(s.D.rows(), s.D.cols());
        for (std::size_t i = 0; i < n; ++i) {
            if (s.D.at(i, i) < 0)
                return false;
            if (i + 1 < n) {
                const mpz_class &d = s.D.at(i, i), &e = s.D.at(i + 1, i + 1);
                if (d == 0 && e != 0)
                    return false;
                if (d != 0 && e % d != 0)
                    return false;
            }
        }
        ++cases;
    }
    return true;
}

bool property_hermitian(std::mt19937_64& rng, int& cases) {
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    std::uniform_int_distribution<int> pick_q(0, 2);
    const unsigned qs[3] = {3, 5, 7};
    for (int it = 0; it < 110; ++it) {
        unsigned q = qs[pick_q(rng)];
        std::size_t na = dim(rng), nb = dim(rng);
        IntMatrix a = random_matrix(rng, na, na, -4, 4);
        IntMatrix b = random_matrix(rng, nb, nb, -4, 4);
        for (unsigned k = 1; k < q; ++k) {
            int sa = hermitian_signature_at_root(a, q, k);
            if (sa != hermitian_signature_at_root(a, q, q - k))
                return false;
            int sb = hermitian_signature_at_root(b, q, k);
            if (hermitian_signature_at_root(IntMatrix::block_diag(a, b), q, k) != sa + sb)
                return false;
            ++cases;
        }
    }
    return true;
}

bool property_annihilator(std::mt19937_64& rng, int& cases) {
    std::uniform_int_distribution<std::size_t> amb(1, 6);
    std::uniform_int_distribution<std::size_t> nvec(1, 6);
    std::uniform_int_distribution<unsigned> entry(0, 4);
    for (int it = 0; it < 220; ++it) {
        std::size_t n = amb(rng);
        std::vector<std::vector<unsigned>> span(nvec(rng), std::vector<unsigned>(n));
        for (auto& v : span)
            for (auto& x : v)
                x = entry(rng);
        Subspace s = subspace_from_spanning(5, n, span);
        Subspace ann = annihilator(s);
        if (ann.dim() != n - s.dim())
            return false;
        if (annihilator(ann) != s)
            return false;
        for (const auto& w : ann.basis) {
            for (const auto& v : s.basis) {
                unsigned dot = 0;
                for (std::size_t i = 0; i < n; ++i)
                    dot = (dot + w[i] * v[i]) % 5;
                if (dot != 0)
                    return false;
            }
        }
        ++cases;
    }
    return true;
}

bool property_containment(std::mt19937_64& rng, int& cases) {
    std::uniform_int_distribution<int> num(-400, 400);
    std::uniform_int_distribution<int> den(1, 9);
    std::uniform_int_distribution<int> snum(0, 60);
    for (int it = 0; it < 220; ++it) {
        SignatureEstimate a{mpq_class(num(rng), den(rng)), mpq_class(snum(rng), den(rng))};
        SignatureEstimate b{mpq_class(num(rng), den(rng)), mpq_class(snum(rng), den(rng))};
        const mpq_class lambdas[5] = {mpq_class(-1), mpq_class(-1, 2), mpq_class(0),
                                      mpq_class(1, 2), mpq_class(1)};
        for (const mpq_class& lam : lambdas) {
            mpq_class va = a.center + lam * a.slack;
            mpq_class vb = b.center + lam * b.slack;
            if (!a.contains(va) || !b.contains(vb))
                return false;
            if (!(a + b).contains(va + vb))
                return false;
            if (!(-a).contains(-va))
                return false;
            if (abs(va) < a.abs_lower_bound())
                return false;
        }
        ++cases;
    }
    return true;
}

bool property_cf_conjugation(std::mt19937_64& rng, int& cases) {
    const unsigned qs[5] = {3, 5, 7, 11, 13};
    std::uniform_int_distribution<int> pick_q(0, 4);
    std::uniform_int_distribution<int> framing(-6, 6);
    for (int it = 0; it < 220;) {
        unsigned q = qs[pick_q(rng)];
        mpz_class a = framing(rng), b = framing(rng);
        if (a * b == 1)
            continue;
        std::uniform_int_distribution<unsigned> nn(1, q - 1);
        unsigned n1 = nn(rng), n2 = nn(rng);
        if (cf_hopf_signature(a, b, q, n1, n2) != cf_hopf_signature(a, b, q, q - n1, q - n2))
            return false;
        ++it;
        ++cases;
    }
    return true;
}

bool property_antisymmetry(std::mt19937_64& rng, int& cases) {
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<long> mult(0, 1000);
    for (int it = 0; it < 60; ++it) {
        int which = pick(rng);
        SeifertMatrix companion = which == 0   ? torus_2_5_seifert()
                                  : which == 1 ? figure_eight_seifert()
                                               : unknot_seifert();
        SatelliteKnot k = build_infected_base(two_bridge_base(1), companion, mult(rng));
        for (unsigned c = 1; c <= 4; ++c) {
            SignatureEstimate e1 = satellite_cg_estimate(k, 5, c);
            SignatureEstimate e2 = satellite_cg_estimate(k, 5, (2 * c) % 5);
            if (e2.center != -e1.center || e2.slack != e1.slack)
                return false;
            ++cases;
        }
    }
    return true;
}

bool criterion7(std::string& detail) {
    std::mt19937_64 rng(0xACCE97);
    int snf = 0, herm = 0, ann = 0, cont = 0, cf = 0, anti = 0;
    bool ok = property_smith(rng, snf) && property_hermitian(rng, herm) &&
              property_annihilator(rng, ann) && property_containment(rng, cont) &&
              property_cf_conjugation(rng, cf) && property_antisymmetry(rng, anti);
    ok = ok && snf >= 200 && herm >= 200 && ann >= 200 && cont >= 200 && cf >= 200 &&
         anti >= 200;
    std::ostringstream ss;
    ss << "diagonalization " << snf << ", root-signature symmetry/additivity " << herm
       << ", orthogonal-complement duality " << ann << ", interval containment " << cont
       << ", surgery-formula conjugation " << cf << ", table antisymmetry " << anti
       << " cases";
    detail = ss.str();
    return ok;
}

// --- criterion 8: unknot companions never produce a proof ---

bool criterion8(std::string& detail) {
    // g = 1 through the command line
    CliResult r = run_cli("gilmer-check --family 1:0 --unknot-companions --genus 1");
    bool ok = r.exit_code == 1 && r.out.find("INCONCLUSIVE") != std::string::npos;

    // g = 2: the full subspace sweep comes back without a certificate
    if (ok) {
        KnotSum k2 = build_family(FamilySpec(2, {0}), unknot_seifert());
        auto outcome = prove_genus_exceeds(ObstructionInstance(k2, 2));
        ok = std::holds_alternative<Inconclusive>(outcome);
    }

    // g >= 3: no character of the rank-8 instance certifies a bound anywhere
    // near the threshold 4g = 12, so no subspace can ever receive a witness;
    // the sweep outcome is forced to be inconclusive for all larger g too
    // (thresholds only grow while the bounds stay fixed).
    mpq_class max_bound;
    if (ok) {
        KnotSum k3 = build_family(FamilySpec(3, {0}), unknot_seifert());
        ObstructionInstance inst(k3, 3);
        std::vector<unsigned> coeffs(inst.rank(), 0);
        max_bound = inst.certified_bound(std::vector<unsigned>{1, 0, 0, 0, 0, 0, 0, 0});
        while (true) {
            std::size_t pos = coeffs.size();
            while (pos > 0 && coeffs[pos - 1] == 4)
                coeffs[--pos] = 0;
            if (pos == 0)
                break;
            ++coeffs[pos - 1];
            mpq_class b = inst.certified_bound(coeffs);
            if (b > max_bound)
                max_bound = b;
        }
        ok = max_bound < 12;
    }

    std::ostringstream ss;
    ss << "g=1 exits 1 INCONCLUSIVE; g=2 sweep inconclusive; g=3 max certified bound "
       << rational_to_string(max_bound) << " over all 390624 characters stays below 12";
    detail = ss.str();
    return ok;
}

struct Criterion {
    int id;
    const char* label;
    bool (*fn)(std::string&);
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {1, "exact surgery-formula signature values", criterion1},
        {2, "double-cover homology and meridian relation", criterion2},
        {3, "fifth-root signatures with exact multiples and numeric oracle", criterion3},
        {4, "per-summand estimate envelope", criterion4},
        {5, "desk-scale proof with re-validated certificate", criterion5},
        {6, "analytic lower-bound chain", criterion6},
        {7, "randomized property suites", criterion7},
        {8, "unknot-companion negative control", criterion8},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok)
            ++failures;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.label << ": " << detail
                  << "\n";
    }
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass"
                                : "ACCEPTANCE: " + std::to_string(failures) +
                                      " criterion(s) failing")
              << "\n";
    return failures;
}
