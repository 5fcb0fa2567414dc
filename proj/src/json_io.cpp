#include "cgsig/json_io.hpp"

#include "cgsig/errors.hpp"
#include "cgsig/rational_io.hpp"

#include <algorithm>
#include <cstdint>

namespace cgsig {

namespace {

const mpz_class k53 = mpz_class(1) << 53;

} // namespace

json integer_to_json(const mpz_class& v) {
    if (abs(v) < k53)
        return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

mpz_class integer_from_json(const json& j) {
    if (j.is_number_integer())
        return mpz_class(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string())
        return parse_integer(j.get<std::string>());
    throw ParseError("expected an integer (number or decimal string), got " + j.dump());
}

json rational_to_json(const mpq_class& v) {
    return json(rational_to_string(v));
}

mpq_class rational_from_json(const json& j) {
    if (j.is_number_integer())
        return mpq_class(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational (\"p/q\" string), got " + j.dump());
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(integer_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array())
        throw ParseError("matrix must be an array of rows");
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& r : j) {
        if (!r.is_array())
            throw ParseError("matrix row must be an array");
        std::vector<mpz_class> row;
        for (const auto& e : r)
            row.push_back(integer_from_json(e));
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("matrix rows must all have the same length");
        rows.push_back(std::move(row));
    }
    return IntMatrix::from_rows(rows);
}

json satellite_to_json(const SatelliteKnot& k) {
    json j;
    j["base_seifert"] = matrix_to_json(k.base.V);
    j["surgery"] = {{"a", integer_to_json(k.surgery.a)}, {"b", integer_to_json(k.surgery.b)}};
    json infs = json::array();
    for (const auto& inf : k.infections) {
        json ji;
        ji["class"] = integer_to_json(inf.site_class);
        ji["sign"] = inf.sign;
        ji["companion_seifert"] = matrix_to_json(inf.companion.V);
        ji["multiplicity"] = integer_to_json(inf.multiplicity);
        infs.push_back(std::move(ji));
    }
    j["infections"] = std::move(infs);
    return j;
}

namespace {

void expect_keys(const json& j, std::initializer_list<const char*> keys, const char* what) {
    if (!j.is_object())
        throw ParseError(std::string(what) + " must be a JSON object");
    for (const char* k : keys)
        if (!j.contains(k))
            throw ParseError(std::string(what) + " is missing \"" + k + "\"");
}

} // namespace

SatelliteKnot satellite_from_json(const json& j) {
    expect_keys(j, {"base_seifert", "surgery", "infections"}, "satellite knot");
    expect_keys(j["surgery"], {"a", "b"}, "surgery");
    SeifertMatrix base(matrix_from_json(j["base_seifert"]));
    HopfSurgery surgery(integer_from_json(j["surgery"]["a"]), integer_from_json(j["surgery"]["b"]));
    std::vector<Infection> infections;
    if (!j["infections"].is_array())
        throw ParseError("\"infections\" must be an array");
    for (const auto& ji : j["infections"]) {
        expect_keys(ji, {"class", "sign", "companion_seifert", "multiplicity"}, "infection");
        Infection inf;
        inf.site_class = integer_from_json(ji["class"]);
        if (!ji["sign"].is_number_integer())
            throw ParseError("infection sign must be an integer");
        inf.sign = ji["sign"].get<int>();
        inf.companion = SeifertMatrix(matrix_from_json(ji["companion_seifert"]));
        inf.multiplicity = integer_from_json(ji["multiplicity"]);
        infections.push_back(std::move(inf));
    }
    return SatelliteKnot(std::move(base), std::move(surgery), std::move(infections));
}

json knot_sum_to_json(const KnotSum& k) {
    json arr = json::array();
    for (const auto& s : k.summands)
        arr.push_back(satellite_to_json(s));
    return arr;
}

KnotSum knot_sum_from_json(const json& j) {
    KnotSum sum;
    if (j.is_object()) {
        sum.summands.push_back(satellite_from_json(j));
        return sum;
    }
    if (!j.is_array() || j.empty())
        throw ParseError("knot sum must be a nonempty array of satellite knots");
    for (const auto& e : j)
        sum.summands.push_back(satellite_from_json(e));
    return sum;
}

json presentation_to_json(const GroupPresentation& p) {
    json j;
    json factors = json::array();
    for (const auto& d : p.group.invariant_factors)
        factors.push_back(integer_to_json(d));
    j["invariant_factors"] = std::move(factors);
    json classes = json::array();
    for (const auto& cls : p.generator_classes) {
        json c = json::array();
        for (const auto& v : cls)
            c.push_back(integer_to_json(v));
        classes.push_back(std::move(c));
    }
    j["generator_classes"] = std::move(classes);
    return j;
}

json signature_table_to_json(const std::vector<TableEntry>& table) {
    json arr = json::array();
    for (const auto& e : table) {
        json row;
        row["character"] = e.chi.coeffs;
        row["center"] = rational_to_json(e.estimate.center);
        row["slack"] = rational_to_json(e.estimate.slack);
        arr.push_back(std::move(row));
    }
    return arr;
}

json certificate_to_json(const GenusCertificate& cert) {
    json j;
    j["genus"] = cert.genus;
    j["p"] = cert.p;
    j["rank"] = cert.rank;
    j["knot"] = knot_sum_to_json(cert.knot);
    json records = json::array();
    for (const auto& r : cert.records) {
        json rec;
        rec["subspace_basis"] = r.subspace.basis;
        rec["witness"] = r.witness.coeffs;
        rec["center"] = rational_to_json(r.center);
        rec["slack"] = rational_to_json(r.slack);
        rec["threshold"] = 4 * cert.genus;
        records.push_back(std::move(rec));
    }
    j["records"] = std::move(records);
    return j;
}

namespace {

std::vector<unsigned> unsigned_vector_from_json(const json& j, unsigned p, const char* what) {
    if (!j.is_array())
        throw MalformedCertificateError(std::string(what) + " must be an array");
    std::vector<unsigned> out;
    for (const auto& e : j) {
        if (!e.is_number_unsigned() && !e.is_number_integer())
            throw MalformedCertificateError(std::string(what) + " entries must be integers");
        long long v = e.get<long long>();
        if (v < 0 || v >= static_cast<long long>(p))
            throw MalformedCertificateError(std::string(what) + " entry out of range [0, p)");
        out.push_back(static_cast<unsigned>(v));
    }
    return out;
}

} // namespace

bool check_certificate(const json& cert, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why)
            *why = reason;
        return false;
    };
    if (!cert.is_object())
        throw MalformedCertificateError("certificate must be a JSON object");
    for (const char* k : {"genus", "p", "rank", "knot", "records"})
        if (!cert.contains(k))
            throw MalformedCertificateError(std::string("certificate is missing \"") + k + "\"");
    if (!cert["genus"].is_number_unsigned() || cert["genus"].get<unsigned>() < 1)
        throw MalformedCertificateError("\"genus\" must be a positive integer");
    unsigned genus = cert["genus"].get<unsigned>();
    if (!cert["p"].is_number_unsigned() || cert["p"].get<unsigned>() != 5)
        throw MalformedCertificateError("\"p\" must be 5");
    unsigned p = 5;
    if (!cert["rank"].is_number_unsigned())
        throw MalformedCertificateError("\"rank\" must be a nonnegative integer");
    std::size_t rank = cert["rank"].get<std::size_t>();
    if (!cert["records"].is_array())
        throw MalformedCertificateError("\"records\" must be an array");

    KnotSum knot = knot_sum_from_json(cert["knot"]);
    ObstructionInstance inst(knot, genus); // may throw UnsupportedGroup
    if (inst.rank() != rank)
        return fail("declared rank " + std::to_string(rank) + " does not match the knot (" +
                    std::to_string(inst.rank()) + " summands)");

    mpq_class threshold(4 * genus);

    // Sweep-order coverage bookkeeping: records must hit every subspace of
    // every admissible dimension exactly once, in enumeration order.
    auto dims = admissible_subspace_dims(rank, genus);
    std::size_t rec_index = 0;
    const json& records = cert["records"];

    for (auto d : dims) {
        mpz_class count = gaussian_binomial(rank, d, p);
        for (mpz_class i = 0; i < count; ++i, ++rec_index) {
            if (rec_index >= records.size())
                return fail("records end before covering all admissible subspaces (dimension " +
                            std::to_string(d) + ")");
            const json& rec = records[rec_index];
            for (const char* k : {"subspace_basis", "witness", "center", "slack", "threshold"})
                if (!rec.is_object() || !rec.contains(k))
                    throw MalformedCertificateError(std::string("record is missing \"") + k + "\"");

            Subspace expected = subspace_at(rank, p, d, i);
            if (!rec["subspace_basis"].is_array())
                throw MalformedCertificateError("\"subspace_basis\" must be an array");
            std::vector<std::vector<unsigned>> basis;
            for (const auto& row : rec["subspace_basis"])
                basis.push_back(unsigned_vector_from_json(row, p, "subspace basis row"));
            if (basis != expected.basis)
                return fail("record " + std::to_string(rec_index) +
                            " is out of sweep order or lists a non-canonical basis");

            std::vector<unsigned> chi = unsigned_vector_from_json(rec["witness"], p, "witness");
            if (chi.size() != rank)
                return fail("record " + std::to_string(rec_index) + " witness has wrong length");
            if (std::all_of(chi.begin(), chi.end(), [](unsigned c) { return c == 0; }))
                return fail("record " + std::to_string(rec_index) + " witness is trivial");

            // The witness must vanish on the subspace: orthogonal to every basis row.
            for (const auto& row : expected.basis) {
                unsigned long long dot = 0;
                for (std::size_t jx = 0; jx < rank; ++jx)
                    dot += static_cast<unsigned long long>(row[jx]) * chi[jx];
                if (dot % p != 0)
                    return fail("record " + std::to_string(rec_index) +
                                " witness does not vanish on its subspace");
            }

            mpq_class rec_threshold = rational_from_json(rec["threshold"]);
            if (rec_threshold != threshold)
                return fail("record " + std::to_string(rec_index) + " threshold is not 4g");

            SignatureEstimate est = inst.estimate_at(chi);
            if (est.center != rational_from_json(rec["center"]) ||
                est.slack != rational_from_json(rec["slack"]))
                return fail("record " + std::to_string(rec_index) +
                            " center/slack do not match recomputation");
            mpq_class bound = abs(est.center + inst.base_signature()) - est.slack;
            if (!(bound > threshold))
                return fail("record " + std::to_string(rec_index) + " bound " +
                            rational_to_string(bound) + " does not exceed threshold");
        }
    }
    if (rec_index != records.size())
        return fail("certificate has " + std::to_string(records.size() - rec_index) +
                    " extra records");
    if (why)
        why->clear();
    return true;
}

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("invalid JSON input");
    return j;
}

} // namespace cgsig
