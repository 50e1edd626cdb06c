#include "tmcv/io.hpp"

#include <fstream>
#include <sstream>

namespace tmcv {

namespace {

[[noreturn]] void schema_fail(const std::string& where, const std::string& what)
{
    throw Error(ErrorCode::SchemaError, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key)) schema_fail(where, std::string("missing field '") + key + "'");
    return j.at(key);
}

Int int_field(const Json& j, const char* key, const std::string& where)
{
    const Json& v = field(j, key, where);
    if (!v.is_number_integer()) schema_fail(where, std::string("field '") + key + "' must be an integer");
    return v.get<Int>();
}

std::string string_field(const Json& j, const char* key, const std::string& where)
{
    const Json& v = field(j, key, where);
    if (!v.is_string()) schema_fail(where, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

void expect_schema(const Json& j, const char* schema, const std::string& where)
{
    if (string_field(j, "schema", where) != schema) schema_fail(where, std::string("expected schema ") + schema);
}

Kind kind_field(const Json& j, const std::string& where)
{
    try {
        return parse_kind(string_field(j, "system", where));
    } catch (const Error&) {
        schema_fail(where, "unknown root system");
    }
}

std::string provenance_of(const Json& j, const std::string& where)
{
    const Json& p = field(j, "provenance", where);
    if (!p.is_object()) schema_fail(where, "provenance must be an object");
    return canonical(p);
}

Json provenance_json(const std::string& s)
{
    if (s.empty()) return Json::object();
    return Json::parse(s);
}

// [[weight], multiplicity] pairs.
Json pairs_json(const Multiset& m)
{
    Json a = Json::array();
    for (const auto& [w, c] : m) a.push_back(Json::array({weight_json(w), c}));
    return a;
}

Multiset pairs_from_json(const Json& j, int rank, const std::string& where)
{
    if (!j.is_array()) schema_fail(where, "expected an array of [weight, multiplicity] pairs");
    Multiset out;
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[1].is_number_integer())
            schema_fail(where, "expected [weight, multiplicity]");
        out.emplace_back(weight_from_json(e[0], rank, where), e[1].get<Int>());
    }
    return out;
}

} // namespace

Json weight_json(const Weight& w)
{
    Json a = Json::array();
    for (Eigen::Index i = 0; i < w.size(); ++i) a.push_back(w(i));
    return a;
}

Weight weight_from_json(const Json& j, int rank, const std::string& where)
{
    if (!j.is_array() || static_cast<int>(j.size()) != rank)
        schema_fail(where, "weight must be an integer array of length " + std::to_string(rank));
    Weight w(rank);
    for (int i = 0; i < rank; ++i) {
        if (!j[static_cast<std::size_t>(i)].is_number_integer()) schema_fail(where, "weight coordinates must be integers");
        w(i) = j[static_cast<std::size_t>(i)].get<Int>();
    }
    return w;
}

std::string canonical(const Json& j) { return j.dump(); }

std::string pretty(const Json& j)
{
    if (!j.is_object()) return j.dump(2) + "\n";
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
        out << (first ? "\n" : ",\n") << "  " << Json(it.key()).dump() << ": ";
        first = false;
        const Json& v = it.value();
        if (v.is_array() && !v.empty() && v.front().is_structured()) {
            out << "[";
            for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ",\n    " : "\n    ") << v[i].dump();
            out << "\n  ]";
        } else {
            out << v.dump();
        }
    }
    out << "\n}\n";
    return out.str();
}

Json read_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MissingData, "cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::SchemaError, path.string() + ": " + e.what());
    }
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::MissingData, "cannot write " + path.string());
    out << text;
}

// Decomposition tables

Json to_json(const DecompositionFile& f)
{
    Json j;
    j["schema"] = kDecompositionSchema;
    j["system"] = kind_name(f.table.kind);
    j["prime"] = f.table.p;
    j["provenance"] = provenance_json(f.table.provenance);
    Json rows = Json::array();
    for (const auto& [w, row] : f.table.rows) rows.push_back({{"weight", weight_json(w)}, {"factors", pairs_json(row)}});
    j["rows"] = rows;
    Json chars = Json::array();
    for (const auto& [w, ch] : f.restricted) {
        Multiset m(ch.begin(), ch.end());
        chars.push_back({{"weight", weight_json(w)}, {"dominant", pairs_json(m)}});
    }
    j["restricted_characters"] = chars;
    return j;
}

DecompositionFile decomposition_from_json(const Json& j, const std::string& where)
{
    expect_schema(j, kDecompositionSchema, where);
    DecompositionFile f;
    f.table.kind = kind_field(j, where);
    f.table.p = int_field(j, "prime", where);
    f.table.provenance = provenance_of(j, where);
    const int rank = root_system(f.table.kind).rank;
    for (const Json& r : field(j, "rows", where)) {
        Weight w = weight_from_json(field(r, "weight", where), rank, where);
        if (f.table.has(w)) schema_fail(where, "duplicate key " + to_string(w));
        f.table.rows.emplace(w, pairs_from_json(field(r, "factors", where), rank, where + " row " + to_string(w)));
    }
    for (const Json& r : field(j, "restricted_characters", where)) {
        Weight w = weight_from_json(field(r, "weight", where), rank, where);
        Character ch;
        for (const auto& [mu, m] : pairs_from_json(field(r, "dominant", where), rank, where + " character " + to_string(w))) {
            if (ch[mu] != 0) schema_fail(where, "duplicate weight " + to_string(mu) + " in character " + to_string(w));
            ch.add(mu, m);
        }
        f.restricted.emplace(w, std::move(ch));
    }
    return f;
}

// Radical tables

Json to_json(const RadicalTable& t)
{
    Json j;
    j["schema"] = kRadicalSchema;
    j["system"] = "G2";
    j["prime"] = 7;
    j["alcove"] = t.alcove;
    j["base"] = weight_json(t.base);
    j["shifted_base"] = weight_json(t.shifted_base());
    j["provenance"] = provenance_json(t.provenance);
    Json rows = Json::array();
    for (const RadicalEntry& e : t.entries) {
        rows.push_back({{"sigma0", weight_json(e.sigma0)},
                        {"layer", e.layer},
                        {"sigma1", weight_json(e.sigma1)},
                        {"shifted_sigma1", weight_json(e.sigma1 + Weight::Ones(2))},
                        {"mult", e.mult}});
    }
    j["entries"] = rows;
    return j;
}

RadicalTable radical_from_json(const Json& j, const std::string& where)
{
    expect_schema(j, kRadicalSchema, where);
    if (kind_field(j, where) != Kind::G2 || int_field(j, "prime", where) != 7)
        schema_fail(where, "radical tables are for G2, p = 7");
    RadicalTable t;
    t.alcove = static_cast<int>(int_field(j, "alcove", where));
    t.base = weight_from_json(field(j, "base", where), 2, where);
    if (!same(weight_from_json(field(j, "shifted_base", where), 2, where), t.shifted_base()))
        schema_fail(where, "shifted_base must be base + 7 rho");
    t.provenance = provenance_of(j, where);
    for (const Json& r : field(j, "entries", where)) {
        RadicalEntry e;
        e.sigma0 = weight_from_json(field(r, "sigma0", where), 2, where);
        e.layer = static_cast<int>(int_field(r, "layer", where));
        e.sigma1 = weight_from_json(field(r, "sigma1", where), 2, where);
        e.mult = int_field(r, "mult", where);
        Weight shifted = weight_from_json(field(r, "shifted_sigma1", where), 2, where);
        if (!same(shifted, e.sigma1 + Weight::Ones(2)))
            schema_fail(where, "shifted column " + to_string(shifted) + " does not match sigma1 " + to_string(e.sigma1) +
                                   " + (1,1)");
        t.entries.push_back(e);
    }
    return t;
}

// Alcove labels

G2AlcoveLabels AlcoveLabelFile::labels() const
{
    std::map<int, Weight> ref;
    for (const AlcoveRow& r : rows) ref.emplace(r.label, r.lambda);
    return G2AlcoveLabels(ref);
}

Json to_json(const AlcoveLabelFile& f)
{
    Json j;
    j["schema"] = kLabelsSchema;
    j["system"] = "G2";
    j["prime"] = 7;
    j["special_point"] = weight_json(-Weight::Ones(2));
    j["provenance"] = provenance_json(f.provenance);
    Json rows = Json::array();
    for (const AlcoveRow& r : f.rows) {
        Json layers = Json::array();
        for (const auto& [layer, m] : r.layers) layers.push_back(Json::array({layer, m}));
        rows.push_back({{"label", r.label},
                        {"lambda", weight_json(r.lambda)},
                        {"w_lambda", weight_json(r.w_lambda)},
                        {"sigma0", weight_json(r.sigma0)},
                        {"q", r.q},
                        {"d", r.d},
                        {"layers", layers}});
    }
    j["alcoves"] = rows;
    return j;
}

AlcoveLabelFile labels_from_json(const Json& j, const std::string& where)
{
    expect_schema(j, kLabelsSchema, where);
    if (kind_field(j, where) != Kind::G2 || int_field(j, "prime", where) != 7)
        schema_fail(where, "alcove labels are for G2, p = 7");
    const Weight nu = weight_from_json(field(j, "special_point", where), 2, where);
    if (!same(nu, -Weight::Ones(2))) schema_fail(where, "special point must be -rho");
    AlcoveLabelFile f;
    f.provenance = provenance_of(j, where);
    for (const Json& r : field(j, "alcoves", where)) {
        AlcoveRow row;
        row.label = static_cast<int>(int_field(r, "label", where));
        const std::string at = where + " alcove " + std::to_string(row.label);
        row.lambda = weight_from_json(field(r, "lambda", at), 2, at);
        row.w_lambda = weight_from_json(field(r, "w_lambda", at), 2, at);
        row.sigma0 = weight_from_json(field(r, "sigma0", at), 2, at);
        row.q = string_field(r, "q", at);
        row.d = int_field(r, "d", at);
        for (const Json& l : field(r, "layers", at)) {
            if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() || !l[1].is_number_integer())
                schema_fail(at, "layers are [j, multiplicity] pairs");
            row.layers.emplace_back(l[0].get<int>(), l[1].get<Int>());
        }
        if (!same(row.w_lambda, w_nu_dot(SpecialPoint{nu}, row.lambda)))
            schema_fail(at, "w_lambda " + to_string(row.w_lambda) + " is not -lambda - 2 rho");
        if (!same(row.sigma0, row.w_lambda + 7 * Weight::Ones(2)))
            schema_fail(at, "sigma0 " + to_string(row.sigma0) + " does not split w_lambda = sigma0 - 7 rho");
        f.rows.push_back(std::move(row));
    }
    return f;
}

// Ext data

std::vector<ExtGapDatum> ext_gap_from_json(const Json& j, const std::string& where)
{
    expect_schema(j, kExtGapSchema, where);
    std::vector<ExtGapDatum> out;
    for (const Json& r : field(j, "entries", where)) {
        ExtGapDatum d;
        d.kind = kind_field(r, where);
        d.p = int_field(r, "prime", where);
        d.d = int_field(r, "d", where);
        if (r.contains("witness") && !r.at("witness").is_null())
            d.witness = weight_from_json(r.at("witness"), root_system(d.kind).rank, where);
        d.provenance = string_field(r, "source", where);
        out.push_back(std::move(d));
    }
    return out;
}

Json to_json(const std::vector<ExtGapDatum>& v)
{
    Json j;
    j["schema"] = kExtGapSchema;
    Json rows = Json::array();
    for (const ExtGapDatum& d : v) {
        Json r = {{"system", kind_name(d.kind)}, {"prime", d.p}, {"d", d.d}, {"source", d.provenance}};
        r["witness"] = d.witness ? weight_json(*d.witness) : Json();
        rows.push_back(r);
    }
    j["entries"] = rows;
    return j;
}

ExtTable ext_table_from_json(const Json& j, const std::string& where)
{
    expect_schema(j, kExtTableSchema, where);
    ExtTable t;
    t.kind = kind_field(j, where);
    t.p = int_field(j, "prime", where);
    t.provenance = provenance_of(j, where);
    const int rank = root_system(t.kind).rank;
    for (const Json& r : field(j, "rows", where))
        t.rows.push_back({weight_from_json(field(r, "mu0", where), rank, where), weight_from_json(field(r, "ext1", where), rank, where)});
    return t;
}

Json to_json(const ExtTable& t)
{
    Json j;
    j["schema"] = kExtTableSchema;
    j["system"] = kind_name(t.kind);
    j["prime"] = t.p;
    j["provenance"] = provenance_json(t.provenance);
    Json rows = Json::array();
    for (const ExtTableRow& r : t.rows) rows.push_back({{"mu0", weight_json(r.mu0)}, {"ext1", weight_json(r.ext1)}});
    j["rows"] = rows;
    return j;
}

} // namespace tmcv
