#include "frobgram/io.hpp"

#include <fstream>
#include <sstream>

namespace frobgram {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::ParseError, what); }

const Json& field(const Json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end()) parse_error(std::string("missing field \"") + key + "\"");
    return *it;
}

std::int64_t as_int(const Json& v, const std::string& what) {
    if (!v.is_number_integer()) parse_error(what + " must be an integer");
    return v.get<std::int64_t>();
}

std::uint32_t reduce(std::int64_t c, std::uint32_t p) {
    const std::int64_t r = c % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

PrimePoly poly_field(const Json& doc, const char* key, std::uint32_t p) {
    const Json& v = field(doc, key);
    if (!v.is_array()) parse_error(std::string("\"") + key + "\" must be an array");
    std::vector<std::int64_t> raw;
    for (const auto& c : v) raw.push_back(as_int(c, std::string("coefficient of ") + key));
    return prime_poly::normalized(raw, p);
}

Json poly_json(const PrimePoly& f) {
    Json out = Json::array();
    for (auto c : f) out.push_back(c);
    return out;
}

Json field_header(const char* kind, const CurveModel& curve) {
    Json doc;
    doc["kind"] = kind;
    doc["p"] = curve.base()->p;
    doc["k"] = curve.base()->k;
    return doc;
}

}  // namespace

ManifestSubject parse_manifest(const Json& doc) {
    if (!doc.is_object()) parse_error("manifest must be a JSON object");
    const Json& kind_value = field(doc, "kind");
    if (!kind_value.is_string()) parse_error("\"kind\" must be a string");
    const auto kind = kind_value.get<std::string>();

    const std::int64_t p = as_int(field(doc, "p"), "p");
    const std::int64_t k = doc.contains("k") ? as_int(doc["k"], "k") : 1;
    if (p < 2 || p > std::numeric_limits<std::uint32_t>::max()) throw Error(Errc::NotPrime, "p out of range");
    if (k < 1 || k > 64) throw Error(Errc::InvalidDegree, "k out of range");
    const auto prime = static_cast<std::uint32_t>(p);
    const FieldPtr base = construct_field(prime, static_cast<unsigned>(k));

    const auto apply_label = [&](CurveModel& curve) {
        if (!doc.contains("label")) return;
        if (!doc["label"].is_string()) parse_error("\"label\" must be a string");
        curve.set_label(doc["label"].get<std::string>());
    };

    if (kind == "line") {
        CurveModel curve = make_projective_line(base);
        apply_label(curve);
        return curve;
    }
    if (kind == "hyperelliptic") {
        CurveModel curve = make_hyperelliptic(base, poly_field(doc, "f", prime));
        apply_label(curve);
        return curve;
    }
    if (kind == "plane") {
        const std::int64_t degree = as_int(field(doc, "degree"), "degree");
        if (degree < 1 || degree > 64) throw Error(Errc::InvalidDegree, "plane degree out of range");
        const Json& flat = field(doc, "F");
        if (!flat.is_array() || flat.size() % 4 != 0)
            parse_error("\"F\" must be a flat array of (coefficient, ex, ey, ez) quadruples");
        std::vector<Monomial> terms;
        for (std::size_t i = 0; i < flat.size(); i += 4) {
            Monomial m;
            m.coefficient = reduce(as_int(flat[i], "plane coefficient"), prime);
            for (int v = 0; v < 3; ++v) {
                const std::int64_t e = as_int(flat[i + 1 + v], "plane exponent");
                if (e < 0 || e > 64) parse_error("plane exponent out of range");
                m.exponents[v] = static_cast<unsigned>(e);
            }
            terms.push_back(m);
        }
        CurveModel curve = make_smooth_plane(base, canonical_plane_poly(std::move(terms), prime),
                                             static_cast<unsigned>(degree));
        apply_label(curve);
        return curve;
    }
    if (kind == "biquadratic") {
        DiagramData diagram = make_biquadratic(base, poly_field(doc, "f", prime), poly_field(doc, "g", prime));
        if (doc.contains("certificate")) {
            const Json& cert = doc["certificate"];
            if (!cert.is_object()) parse_error("\"certificate\" must be an object");
            for (const char* key : {"absolutely_irreducible", "smooth"})
                if (cert.contains(key) && !cert[key].is_boolean())
                    parse_error(std::string("certificate.") + key + " must be a boolean");
            diagram.certificate.absolutely_irreducible = cert.value("absolutely_irreducible", true);
            diagram.certificate.smooth = cert.value("smooth", true);
        }
        apply_label(diagram.x);
        return diagram;
    }
    parse_error("unknown kind \"" + kind + "\"");
}

ManifestSubject parse_manifest_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        parse_error(e.what());
    }
    return parse_manifest(doc);
}

ManifestSubject read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) parse_error("cannot open " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_manifest_text(text.str());
}

Json manifest_json(const ManifestSubject& subject) {
    if (const auto* d = std::get_if<DiagramData>(&subject)) {
        Json doc = field_header("biquadratic", d->x);
        doc["f"] = poly_json(d->x.f());
        doc["g"] = poly_json(d->x.g());
        doc["certificate"] = {{"absolutely_irreducible", d->certificate.absolutely_irreducible},
                              {"smooth", d->certificate.smooth}};
        doc["label"] = d->x.label();
        return doc;
    }
    const auto& curve = std::get<CurveModel>(subject);
    Json doc;
    switch (curve.kind()) {
        case CurveKind::projective_line: doc = field_header("line", curve); break;
        case CurveKind::hyperelliptic:
            doc = field_header("hyperelliptic", curve);
            doc["f"] = poly_json(curve.f());
            break;
        case CurveKind::smooth_plane: {
            doc = field_header("plane", curve);
            doc["degree"] = curve.plane_degree();
            Json flat = Json::array();
            for (const auto& m : curve.plane()) {
                flat.push_back(m.coefficient);
                for (auto e : m.exponents) flat.push_back(e);
            }
            doc["F"] = std::move(flat);
            break;
        }
        case CurveKind::biquadratic_total_space:
            throw Error(Errc::WrongKind, "a biquadratic total space is written through its diagram");
    }
    doc["label"] = curve.label();
    return doc;
}

bool same_model(const ManifestSubject& a, const ManifestSubject& b) {
    if (a.index() != b.index()) return false;
    if (const auto* ca = std::get_if<CurveModel>(&a)) return *ca == std::get<CurveModel>(b);
    const auto& da = std::get<DiagramData>(a);
    const auto& db = std::get<DiagramData>(b);
    return da.x == db.x && da.y1 == db.y1 && da.y2 == db.y2 && da.z == db.z &&
           da.certificate.absolutely_irreducible == db.certificate.absolutely_irreducible &&
           da.certificate.smooth == db.certificate.smooth;
}

Json check_json(const CheckRecord& check) {
    Json out;
    out["name"] = check.name;
    out["lhs"] = check.lhs.str();
    out["rhs"] = check.rhs.str();
    out["holds"] = check.holds;
    out["margin"] = to_string(check.margin);
    out["scale"] = check.scale;
    return out;
}

Json report_json(const BoundReport& report) {
    Json out;
    out["subject"] = report.subject;
    out["all_hold"] = report.all_hold();
    Json checks = Json::array();
    for (const auto& c : report.checks) checks.push_back(check_json(c));
    out["checks"] = std::move(checks);
    return out;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_header() { return "subject,name,lhs,rhs,holds,margin,scale\n"; }

std::string csv_rows(const BoundReport& report) {
    std::string out;
    for (const auto& c : report.checks) {
        out += csv_field(report.subject) + "," + csv_field(c.name) + "," + c.lhs.str() + "," + c.rhs.str() + "," +
               (c.holds ? "true" : "false") + "," + to_string(c.margin) + "," + c.scale + "\n";
    }
    return out;
}

}  // namespace frobgram
