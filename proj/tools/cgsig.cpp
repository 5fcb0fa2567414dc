// cgsig: exact Casson-Gordon style signature computations for satellite
// knots over two-bridge bases, with subspace-sweep 4-genus certificates.

#include "cgsig/cg_signatures.hpp"
#include "cgsig/errors.hpp"
#include "cgsig/gilmer.hpp"
#include "cgsig/json_io.hpp"
#include "cgsig/knot.hpp"
#include "cgsig/rational_io.hpp"
#include "cgsig/verify.hpp"

#include <CLI11.hpp>

#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using cgsig::json;

std::string read_input_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw cgsig::ParseError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw cgsig::ParseError("cannot open output file '" + path + "'");
    out << text;
}

void print_meta(bool meta) {
    if (!meta)
        return;
    std::time_t now = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    std::cout << "# generated: " << buf << "\n";
}

cgsig::SeifertMatrix seifert_from_preset(const std::string& preset) {
    if (preset == "figure-eight")
        return cgsig::figure_eight_seifert();
    if (preset == "torus-2-5")
        return cgsig::torus_2_5_seifert();
    if (preset == "unknot")
        return cgsig::unknot_seifert();
    if (preset.rfind("two-bridge:", 0) == 0) {
        unsigned long t = 0;
        try {
            t = std::stoul(preset.substr(11));
        } catch (...) {
            throw cgsig::ParseError("bad two-bridge parameter in preset '" + preset + "'");
        }
        return cgsig::two_bridge_base(static_cast<unsigned>(t)).seifert;
    }
    throw cgsig::ParseError("unknown preset '" + preset +
                            "' (figure-eight, torus-2-5, unknot, two-bridge:<t>)");
}

// "g:k1,k2,..." with strictly increasing generation indices.
cgsig::FamilySpec parse_family(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw cgsig::ParseError("family spec must look like \"g:k1,k2,...\"");
    unsigned g = 0;
    std::vector<unsigned> ks;
    try {
        g = static_cast<unsigned>(std::stoul(text.substr(0, colon)));
        std::string rest = text.substr(colon + 1);
        std::istringstream ss(rest);
        std::string tok;
        while (std::getline(ss, tok, ','))
            ks.push_back(static_cast<unsigned>(std::stoul(tok)));
    } catch (const cgsig::Error&) {
        throw;
    } catch (...) {
        throw cgsig::ParseError("bad family spec '" + text + "'");
    }
    return cgsig::FamilySpec(g, ks);
}

struct KnotInput {
    std::string input_path;
    std::string inline_text;
    std::string family;
    bool unknot_companions = false;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--input,-i", input_path, "path to knot JSON ('-' for stdin)");
        cmd->add_option("--inline", inline_text, "inline knot JSON");
        cmd->add_option("--family", family, "family member \"g:k1,k2,...\"");
        cmd->add_flag("--unknot-companions", unknot_companions,
                      "replace family companions by unknots (with --family)");
    }

    cgsig::KnotSum resolve() const {
        int sources = (!input_path.empty()) + (!inline_text.empty()) + (!family.empty());
        if (sources != 1)
            throw cgsig::ParseError("exactly one of --input, --inline, --family is required");
        if (!family.empty()) {
            cgsig::FamilySpec spec = parse_family(family);
            return unknot_companions ? cgsig::build_family(spec, cgsig::unknot_seifert())
                                     : cgsig::build_family(spec);
        }
        if (unknot_companions)
            throw cgsig::ParseError("--unknot-companions needs --family");
        std::string text = !input_path.empty() ? read_input_text(input_path) : inline_text;
        return cgsig::knot_sum_from_json(cgsig::parse_json_text(text));
    }
};

std::string dump(const json& j) {
    return j.dump(1) + "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact satellite-knot signature invariants and 4-genus certificates"};
    app.require_subcommand(1);
    bool meta = false;
    app.add_flag("--meta", meta, "add a generation timestamp to human-readable output");

    int rc = 0;

    // tl-sig
    auto* tl = app.add_subcommand("tl-sig", "signature at a prime-order root of unity");
    std::string tl_preset, tl_input, tl_inline, tl_mult = "1";
    unsigned tl_q = 0, tl_k = 0;
    tl->add_option("--preset", tl_preset, "figure-eight | torus-2-5 | unknot | two-bridge:<t>");
    tl->add_option("--input,-i", tl_input, "path to Seifert matrix JSON ('-' for stdin)");
    tl->add_option("--inline", tl_inline, "inline Seifert matrix JSON");
    tl->add_option("--q", tl_q, "root order (prime)")->required();
    tl->add_option("--k", tl_k, "root index")->required();
    tl->add_option("--multiplicity", tl_mult, "connected self-sum multiplicity (default 1)");
    tl->callback([&] {
        int sources = (!tl_preset.empty()) + (!tl_input.empty()) + (!tl_inline.empty());
        if (sources != 1)
            throw cgsig::ParseError("exactly one of --preset, --input, --inline is required");
        cgsig::SeifertMatrix v =
            !tl_preset.empty()
                ? seifert_from_preset(tl_preset)
                : cgsig::SeifertMatrix(cgsig::matrix_from_json(cgsig::parse_json_text(
                      !tl_input.empty() ? read_input_text(tl_input) : tl_inline)));
        mpz_class mult = cgsig::parse_integer(tl_mult);
        print_meta(meta);
        std::cout << cgsig::tristram_levine(v, mult, tl_q, tl_k).get_str() << "\n";
    });

    // cover-homology
    auto* cover = app.add_subcommand("cover-homology",
                                     "invariant factors and meridian classes of a presentation");
    std::string cov_input, cov_inline;
    cover->add_option("--input,-i", cov_input, "path to relation matrix JSON ('-' for stdin)");
    cover->add_option("--inline", cov_inline, "inline relation matrix JSON");
    cover->callback([&] {
        if (cov_input.empty() == cov_inline.empty())
            throw cgsig::ParseError("exactly one of --input, --inline is required");
        cgsig::IntMatrix m = cgsig::matrix_from_json(cgsig::parse_json_text(
            !cov_input.empty() ? read_input_text(cov_input) : cov_inline));
        std::cout << dump(cgsig::presentation_to_json(cgsig::group_from_presentation(m)));
    });

    // cf-sig
    auto* cf = app.add_subcommand("cf-sig", "exact surgery-formula signature defect");
    std::string cf_a, cf_b;
    unsigned cf_q = 0, cf_n1 = 0, cf_n2 = 0;
    cf->add_option("-a", cf_a, "framing of the first surgery component")->required();
    cf->add_option("-b", cf_b, "framing of the second surgery component")->required();
    cf->add_option("--q", cf_q, "cover order (prime)")->required();
    cf->add_option("--n1", cf_n1, "character value on the first meridian")->required();
    cf->add_option("--n2", cf_n2, "character value on the second meridian")->required();
    cf->callback([&] {
        print_meta(meta);
        std::cout << cgsig::rational_to_string(cgsig::cf_hopf_signature(
                         cgsig::parse_integer(cf_a), cgsig::parse_integer(cf_b), cf_q, cf_n1,
                         cf_n2))
                  << "\n";
    });

    // cg-table
    auto* table = app.add_subcommand("cg-table", "signature estimates over all characters");
    KnotInput table_input;
    table_input.add_options(table);
    unsigned table_q = 5;
    std::string table_emit_knot;
    table->add_option("--q", table_q, "character order (prime, default 5)");
    table->add_option("--emit-knot", table_emit_knot, "also write the knot JSON to this path");
    table->callback([&] {
        cgsig::KnotSum k = table_input.resolve();
        if (!table_emit_knot.empty())
            write_output_file(table_emit_knot, dump(cgsig::knot_sum_to_json(k)));
        std::cout << dump(cgsig::signature_table_to_json(cgsig::cg_signature_table(k, table_q)));
    });

    // gilmer-check
    auto* gil = app.add_subcommand("gilmer-check", "sweep all admissible subspaces for witnesses");
    KnotInput gil_input;
    gil_input.add_options(gil);
    unsigned gil_genus = 0, gil_jobs = 0;
    std::string gil_emit_cert, gil_emit_knot;
    gil->add_option("--genus", gil_genus, "genus threshold to exceed")->required();
    gil->add_option("--jobs", gil_jobs, "worker threads (default: hardware)");
    gil->add_option("--emit-cert", gil_emit_cert, "write the certificate JSON to this path");
    gil->add_option("--emit-knot", gil_emit_knot, "also write the knot JSON to this path");
    gil->callback([&] {
        cgsig::KnotSum k = gil_input.resolve();
        if (!gil_emit_knot.empty())
            write_output_file(gil_emit_knot, dump(cgsig::knot_sum_to_json(k)));
        cgsig::ObstructionInstance inst(k, gil_genus);
        auto outcome = cgsig::prove_genus_exceeds(inst, gil_jobs);
        print_meta(meta);
        if (auto* cert = std::get_if<cgsig::GenusCertificate>(&outcome)) {
            mpq_class min_bound = cert->records.front().bound;
            for (const auto& r : cert->records)
                min_bound = std::min(min_bound, r.bound);
            std::cout << "PROVED: every admissible subspace carries a witness; 4-genus > "
                      << gil_genus << "\n";
            std::cout << "records: " << cert->records.size()
                      << "  min bound: " << cgsig::rational_to_string(min_bound)
                      << "  threshold: " << 4 * gil_genus << "\n";
            if (!gil_emit_cert.empty())
                write_output_file(gil_emit_cert, dump(cgsig::certificate_to_json(*cert)));
        } else {
            const auto& inc = std::get<cgsig::Inconclusive>(outcome);
            std::cout << "INCONCLUSIVE: no witness for subspace "
                      << json(inc.first_failing.basis).dump() << "\n";
            rc = 1;
        }
    });

    // check-cert
    auto* chk = app.add_subcommand("check-cert", "revalidate a certificate from its own contents");
    std::string chk_input;
    chk->add_option("--input,-i", chk_input, "path to certificate JSON ('-' for stdin)")
        ->required();
    chk->callback([&] {
        json cert = cgsig::parse_json_text(read_input_text(chk_input));
        std::string why;
        print_meta(meta);
        if (cgsig::check_certificate(cert, &why)) {
            std::cout << "VALID\n";
        } else {
            std::cout << "INVALID: " << why << "\n";
            rc = 1;
        }
    });

    // selfcheck
    auto* pv = app.add_subcommand("selfcheck", "recompute the frozen reference results");
    std::string pv_section = "all", pv_json_path, pv_k = "0";
    unsigned pv_g = 1, pv_cap = 6, pv_jobs = 0;
    pv->add_option("--section", pv_section, "base-table | family-bounds | all (default all)")
        ->check(CLI::IsMember({"base-table", "family-bounds", "all"}));
    pv->add_option("--g", pv_g, "genus parameter for the family-bounds section (default 1)");
    pv->add_option("--k", pv_k, "comma-separated generation indices (default \"0\")");
    pv->add_option("--cap", pv_cap, "max rank for exhaustive subspace sweeps (default 6)");
    pv->add_option("--jobs", pv_jobs, "worker threads (default: hardware)");
    pv->add_option("--json", pv_json_path, "write a machine-readable report to this path");
    pv->callback([&] {
        print_meta(meta);
        json report;
        bool all_ok = true;

        if (pv_section == "base-table" || pv_section == "all") {
            auto rep = cgsig::verify_base_reference_table({});
            std::cout << "[base-table] frozen reference values\n";
            for (const auto& c : rep.checks)
                std::cout << "  " << (c.ok ? "ok  " : "FAIL") << "  " << c.name << " ("
                          << c.detail << ")\n";
            all_ok = all_ok && rep.all_ok;
            json jlines = json::array();
            for (const auto& c : rep.checks)
                jlines.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
            report["base_table"] = {{"ok", rep.all_ok}, {"checks", jlines}};
        }

        if (pv_section == "family-bounds" || pv_section == "all") {
            cgsig::FamilySpec spec = parse_family(std::to_string(pv_g) + ":" + pv_k);
            json jprop;

            // analytic grid for the requested genus
            bool grid_ok = true;
            json jgrid = json::array();
            for (unsigned l = 2 * pv_g + 3; l <= 2 * pv_g + 8; ++l) {
                auto rep = cgsig::analytic_lower_bound(pv_g, l);
                grid_ok = grid_ok && rep.passes();
                jgrid.push_back({{"l", l},
                                 {"star", cgsig::integer_to_json(rep.star)},
                                 {"forms_agree", rep.forms_agree},
                                 {"chain_strict", rep.chain_strict}});
                std::cout << "[family-bounds] g=" << pv_g << " l=" << l
                          << " star=" << rep.star.get_str()
                          << (rep.passes() ? " (forms agree, chain strict)" : " MISMATCH")
                          << "\n";
            }
            jprop["analytic_grid"] = {{"ok", grid_ok}, {"rows", jgrid}};
            all_ok = all_ok && grid_ok;

            // sweep / scan cross-validation
            auto cv = cgsig::cross_validate(spec, false, pv_cap, pv_jobs);
            bool cv_ok;
            json jcv;
            jcv["rank"] = cv.rank;
            if (cv.swept) {
                cv_ok = cv.proved && (!cv.analytic_checked || cv.analytic_ok);
                std::cout << "[family-bounds] sweep rank " << cv.rank << ": "
                          << (cv.proved ? "PROVED" : "INCONCLUSIVE") << " (" << cv.record_count
                          << " records)";
                if (cv.analytic_checked)
                    std::cout << "; witness bounds vs analytic predictions: "
                              << (cv.analytic_ok ? "consistent" : "violated")
                              << ", min margin " << cgsig::rational_to_string(cv.min_margin);
                std::cout << "\n";
                jcv["proved"] = cv.proved;
                jcv["records"] = cv.record_count;
                if (cv.analytic_checked) {
                    jcv["analytic_ok"] = cv.analytic_ok;
                    jcv["min_margin"] = cgsig::rational_to_string(cv.min_margin);
                }
            } else {
                cv_ok = cv.scan && cv.scan->all_exceed;
                std::cout << "[family-bounds] scan rank " << cv.rank << ": "
                          << (cv_ok ? "all characters exceed threshold" : "threshold violated")
                          << ", min bound "
                          << (cv.scan ? cgsig::rational_to_string(cv.scan->min_bound) : "-")
                          << "\n";
                if (cv.scan) {
                    jcv["scan_all_exceed"] = cv.scan->all_exceed;
                    jcv["scan_min_bound"] = cgsig::rational_to_string(cv.scan->min_bound);
                }
            }
            if (cv.metabolizer) {
                std::cout << "[family-bounds] metabolizer: "
                          << (cv.metabolizer->found ? "found " : "missing")
                          << (cv.metabolizer->found
                                  ? json(cv.metabolizer->metabolizer.basis).dump()
                                  : std::string())
                          << "\n";
                cv_ok = cv_ok && cv.metabolizer->found;
                jcv["metabolizer_found"] = cv.metabolizer->found;
            }
            jprop["cross_validation"] = jcv;
            all_ok = all_ok && cv_ok;

            // negative control: unknot companions must be inconclusive
            if (cv.rank <= pv_cap) {
                auto neg = cgsig::cross_validate(spec, true, pv_cap, pv_jobs);
                bool neg_ok = neg.swept && !neg.proved;
                std::cout << "[family-bounds] negative control (unknot companions): "
                          << (neg_ok ? "inconclusive as expected" : "unexpectedly proved")
                          << "\n";
                jprop["negative_control_ok"] = neg_ok;
                all_ok = all_ok && neg_ok;
            }

            report["family_bounds"] = jprop;
        }

        report["ok"] = all_ok;
        if (!pv_json_path.empty())
            write_output_file(pv_json_path, dump(report));
        std::cout << (all_ok ? "PASS" : "FAIL") << "\n";
        if (!all_ok)
            rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cgsig::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cgsig::UnsupportedGroupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const cgsig::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cgsig::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
