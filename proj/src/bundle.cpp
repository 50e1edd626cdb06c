#include "tmcv/bundle.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#ifndef TMCV_DATA_DIR
#define TMCV_DATA_DIR "data"
#endif

namespace tmcv {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error(ErrorCode::MissingData, "sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

fs::path default_data_dir()
{
    if (const char* env = std::getenv("TMCV_DATA_DIR"); env && *env) return env;
    return TMCV_DATA_DIR;
}

namespace {

const char* kManifest = "manifest.json";

std::string decomposition_path(Kind k, Int p) { return "decomposition/" + kind_name(k) + "_p" + std::to_string(p) + ".json"; }

std::vector<std::string> data_files(const fs::path& root)
{
    std::vector<std::string> out;
    if (!fs::is_directory(root)) throw Error(ErrorCode::MissingData, "data directory " + root.string() + " not found");
    for (const auto& e : fs::recursive_directory_iterator(root)) {
        if (!e.is_regular_file() || e.path().extension() != ".json") continue;
        std::string rel = fs::relative(e.path(), root).generic_string();
        if (rel != kManifest) out.push_back(rel);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string file_kind(const std::string& rel)
{
    if (rel.rfind("decomposition/", 0) == 0) return "decomposition";
    if (rel.rfind("radical/", 0) == 0) return "radical";
    return fs::path(rel).stem().string();
}

Json read_manifest(const fs::path& root)
{
    Json m = read_json(root / kManifest);
    if (!m.is_object() || m.value("schema", "") != kManifestSchema || !m.contains("files") || !m["files"].is_object())
        throw Error(ErrorCode::SchemaError, "manifest.json: malformed");
    return m;
}

void check_hash(const Json& manifest, const std::string& rel, const Json& content)
{
    const Json& files = manifest.at("files");
    if (!files.contains(rel)) throw Error(ErrorCode::MissingData, rel + " is not listed in the manifest");
    const std::string want = files.at(rel).value("sha256", "");
    const std::string got = sha256_hex(canonical(content));
    if (want != got) throw Error(ErrorCode::OracleMismatch, rel + ": content hash " + got + " does not match the manifest");
}

std::vector<Weight> restricted_weights(const RootSystem& rs, Int p)
{
    std::vector<Weight> out;
    Weight w = Weight::Zero(rs.rank);
    for (;;) {
        out.push_back(w);
        int i = rs.rank - 1;
        while (i >= 0 && w(i) == p - 1) w(i--) = 0;
        if (i < 0) break;
        ++w(i);
    }
    return out;
}

// First weight (highest, then lexicographic) where two characters differ.
std::optional<Weight> first_difference(const RootSystem& rs, const Character& a, const Character& b)
{
    Character d = a - b;
    if (d.empty()) return std::nullopt;
    return top_weight(rs, d);
}

std::string where_of(const DecompositionTable& t) { return kind_name(t.kind) + " p=" + std::to_string(t.p); }

} // namespace

Json build_manifest(const fs::path& root)
{
    Json files = Json::object();
    for (const std::string& rel : data_files(root)) {
        Json content = read_json(root / rel);
        Json entry;
        entry["sha256"] = sha256_hex(canonical(content));
        entry["kind"] = file_kind(rel);
        entry["provenance"] = content.contains("provenance") ? content["provenance"] : Json("see entries");
        files[rel] = entry;
    }
    Json m;
    m["schema"] = kManifestSchema;
    m["hash"] = "sha256 of the canonical form: sorted keys, no insignificant whitespace";
    m["files"] = files;
    return m;
}

void validate_decomposition(const DecompositionFile& f)
{
    const DecompositionTable& t = f.table;
    const RootSystem& rs = root_system(t.kind);
    const std::string where = where_of(t);
    for (const Weight& w : restricted_weights(rs, t.p)) {
        if (!t.has(w)) throw Error(ErrorCode::MissingKey, where + ": restricted weight " + to_string(w) + " is not a key");
        if (!f.restricted.count(w))
            throw Error(ErrorCode::MissingKey, where + ": no stored character for restricted weight " + to_string(w));
    }
    if (f.restricted.size() != restricted_weights(rs, t.p).size())
        throw Error(ErrorCode::SchemaError, where + ": stored characters for non-restricted weights");
    check_structure(t);

    std::vector<Weight> keys;
    for (const auto& [w, row] : t.rows) keys.push_back(w);
    std::stable_sort(keys.begin(), keys.end(),
                     [&](const Weight& a, const Weight& b) { return rs.scaled_height(a) < rs.scaled_height(b); });

    SimpleCharacters sc(t);
    for (const Weight& lambda : keys) {
        const std::string at = where + ", row " + to_string(lambda);
        const Character& derived = sc.dominant(lambda);
        if (!derived.nonnegative()) {
            auto neg = std::find_if(derived.begin(), derived.end(), [](const auto& e) { return e.second < 0; });
            throw Error(ErrorCode::NegativeResidue, at + ": ch L" + to_string(lambda) + " has multiplicity " +
                                                        std::to_string(neg->second) + " at " + to_string(neg->first));
        }
        auto [l0, l1] = restricted_split(lambda, t.p);
        if (l1.isZero()) {
            const Character& stored = f.restricted.at(lambda);
            if (auto w = first_difference(rs, derived, stored))
                throw Error(ErrorCode::CharacterMismatch,
                            at + ": ch L" + to_string(lambda) + " from the rows differs from the stored character at weight " +
                                to_string(*w) + " (" + std::to_string(derived[*w]) + " vs " + std::to_string(stored[*w]) + ")");
        } else if (t.has(l1)) {
            Character product = dominant_part(tensor(sc.character(l0), twist(sc.character(l1), t.p)));
            if (auto w = first_difference(rs, derived, product))
                throw Error(ErrorCode::CharacterMismatch,
                            at + ": ch L" + to_string(lambda) + " differs from ch L" + to_string(l0) + " * ch L" + to_string(l1) +
                                "^[1] at weight " + to_string(*w));
        }

        // Jantzen filtration: every proper factor of nabla(lambda) occurs in the sum
        // formula at least as often, and nothing else occurs.
        Multiset sf;
        try {
            sf = decompose_weyl(jantzen_sum_weyl(rs, t.p, lambda), sc);
        } catch (const Error& e) {
            throw Error(e.code(), at + ": sum formula: " + e.what());
        }
        const Multiset& row = t.row(lambda);
        for (const auto& [mu, m] : sf) {
            if (m < 0) throw Error(ErrorCode::NegativeResidue, at + ": sum formula has negative multiplicity at " + to_string(mu));
            if (same(mu, lambda) || multiplicity(row, mu) == 0)
                throw Error(ErrorCode::OracleMismatch, at + ": L" + to_string(mu) + " occurs in the sum formula but not below the head");
        }
        for (const auto& [mu, m] : row) {
            if (same(mu, lambda)) continue;
            if (multiplicity(sf, mu) < m)
                throw Error(ErrorCode::OracleMismatch, at + ": factor L" + to_string(mu) + " with multiplicity " + std::to_string(m) +
                                                           " exceeds its sum formula multiplicity " + std::to_string(multiplicity(sf, mu)));
        }

        if (rs.rank == 2 && l1.isZero() && is_p_regular(rs, lambda, t.p))
            for (const auto& [mu, m] : row)
                if (m != 1)
                    throw Error(ErrorCode::OracleMismatch,
                                at + ": p-regular restricted row is not multiplicity free at " + to_string(mu));
    }
}

void validate_radical_tables(const std::vector<RadicalTable>& tables, const AlcoveLabelFile& labels, const SimpleCharacters& g2p7)
{
    const RootSystem& rs = root_system(Kind::G2);
    const std::set<int> expected = {1, 2, 3, 4, 5, 6, 7, 8, 11, 13, 15, 16};
    std::set<int> seen;
    G2AlcoveLabels lab = labels.labels();
    for (const RadicalTable& t : tables) {
        const std::string where = "alcove " + std::to_string(t.alcove) + " table";
        if (!expected.count(t.alcove) || !seen.insert(t.alcove).second)
            throw Error(ErrorCode::SchemaError, where + ": unexpected or duplicate alcove label");
        check_table_structure(t);
        if (lab.label(alcove_of(rs, t.base, 7)) != t.alcove)
            throw Error(ErrorCode::SchemaError, where + ": base weight " + to_string(t.base) + " lies in alcove " +
                                                    std::to_string(lab.label(alcove_of(rs, t.base, 7))));
        validate_table(t, g2p7);
        // Parity over every special point touched by the table.
        std::set<std::pair<Weight, Weight>, std::function<bool(const std::pair<Weight, Weight>&, const std::pair<Weight, Weight>&)>> done(
            [](const auto& a, const auto& b) {
                if (!same(a.first, b.first)) return WeightLess{}(a.first, b.first);
                return WeightLess{}(a.second, b.second);
            });
        for (const RadicalEntry& e : t.entries) {
            if (!done.insert({e.sigma0, e.sigma1}).second) continue;
            SpecialPoint nu = special_point(rs, 7, e.sigma1 + rs.rho());
            Weight lambda = 2 * nu.nu - (e.sigma0 + 7 * e.sigma1);
            RecoveredQ q = recover_Q(t, nu, alcove_of(rs, lambda, 7));
            for (const auto& [exp, c] : q.q.coeffs)
                if (exp < 0 || c <= 0)
                    throw Error(ErrorCode::OracleMismatch, where + ": recovered Q for " + to_string(lambda) + " is " + q.q.to_string());
        }
    }
    if (seen != expected) throw Error(ErrorCode::MissingData, "radical tables: expected the twelve labelled alcoves");

    auto derived = derive_simple_characters(tables);
    for (const auto& [s, ch] : derived) {
        const Character& stored = g2p7.dominant(s);
        if (auto w = first_difference(rs, ch, stored))
            throw Error(ErrorCode::CharacterMismatch, "ch L" + to_string(s) + " solved from the radical tables differs from the G2 p=7 "
                                                                              "decomposition data at weight " + to_string(*w));
    }
}

void validate_alcove_labels(const AlcoveLabelFile& f, const std::vector<RadicalTable>& tables)
{
    const RootSystem& rs = root_system(Kind::G2);
    G2AlcoveLabels lab = f.labels();
    const RadicalTable* first = nullptr;
    for (const RadicalTable& t : tables)
        if (t.base.isZero()) first = &t;
    if (!first) throw Error(ErrorCode::MissingData, "no radical table with base (0,0)");
    const SpecialPoint nu{-rs.rho()};
    for (const AlcoveRow& row : f.rows) {
        const std::string at = "alcove " + std::to_string(row.label) + " " + to_string(row.lambda);
        AlcoveId c = alcove_of(rs, row.lambda, 7);
        if (lab.label(c) != row.label) throw Error(ErrorCode::SchemaError, at + ": label lookup disagrees");
        RecoveredQ q = recover_Q(*first, nu, c);
        if (!same(q.lambda, row.lambda) || !same(q.sigma0, row.sigma0))
            throw Error(ErrorCode::OracleMismatch, at + ": recovered weight " + to_string(q.lambda) + " / sigma0 " + to_string(q.sigma0));
        if (q.q.to_string() != row.q)
            throw Error(ErrorCode::OracleMismatch, at + ": Q recovered as " + q.q.to_string() + ", table has " + row.q);
        if (q.d != row.d)
            throw Error(ErrorCode::OracleMismatch, at + ": d recovered as " + std::to_string(q.d) + ", table has " + std::to_string(row.d));
        if (q.layers != row.layers) {
            std::string got;
            for (const auto& [j, m] : q.layers) got += " j=" + std::to_string(j) + ":" + std::to_string(m);
            throw Error(ErrorCode::OracleMismatch, at + ": layers at " + to_string(q.w_lambda) + " recovered as" + got);
        }
    }
}

void validate_ext_gap(const std::vector<ExtGapDatum>& data)
{
    for (const ExtGapDatum& d : data) {
        const RootSystem& rs = root_system(d.kind);
        const std::string at = "ext gap " + kind_name(d.kind) + " p=" + std::to_string(d.p);
        if (d.p >= rs.coxeter_number && d.d < 2 * (d.p - rs.coxeter_number + 1))
            throw Error(ErrorCode::OracleMismatch, at + ": d below the general bound 2(p-h+1)");
        if (d.witness) {
            const Weight& a0v = rs.coroots[static_cast<std::size_t>(rs.alpha0_index)];
            if (!is_dominant(*d.witness) || a0v.dot(*d.witness) != d.d)
                throw Error(ErrorCode::OracleMismatch, at + ": witness " + to_string(*d.witness) + " does not realise d");
        }
    }
}

// DatasetBundle

DatasetBundle::DatasetBundle(fs::path root) : root_(std::move(root)) { manifest_ = read_manifest(root_); }

Json DatasetBundle::load_checked(const std::string& rel) const
{
    if (!manifest_.at("files").contains(rel)) throw Error(ErrorCode::MissingData, rel + " is not part of the bundle");
    Json j = read_json(root_ / rel);
    check_hash(manifest_, rel, j);
    return j;
}

bool DatasetBundle::has_decomposition(Kind k, Int p) const { return manifest_.at("files").contains(decomposition_path(k, p)); }

std::vector<std::pair<Kind, Int>> DatasetBundle::decomposition_keys() const
{
    std::vector<std::pair<Kind, Int>> out;
    for (Kind k : {Kind::A1, Kind::A2, Kind::A3, Kind::B2, Kind::G2})
        for (Int p : {2, 3, 5, 7, 11, 13})
            if (has_decomposition(k, p)) out.emplace_back(k, p);
    return out;
}

const DecompositionFile& DatasetBundle::decomposition(Kind k, Int p) const
{
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto& slot = decomposition_[{k, p}];
    if (!slot) {
        const std::string rel = decomposition_path(k, p);
        if (!has_decomposition(k, p))
            throw Error(ErrorCode::MissingData, "no decomposition data for " + kind_name(k) + " p=" + std::to_string(p));
        Json j = load_checked(rel);
        auto f = std::make_unique<DecompositionFile>(decomposition_from_json(j, rel));
        if (f->table.kind != k || f->table.p != p) throw Error(ErrorCode::SchemaError, rel + ": system or prime mismatch");
        validate_decomposition(*f);
        slot = std::move(f);
    }
    return *slot;
}

const SimpleCharacters& DatasetBundle::simples(Kind k, Int p) const
{
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto& slot = simples_[{k, p}];
    if (!slot) slot = std::make_unique<SimpleCharacters>(decomposition(k, p).table);
    return *slot;
}

const AlcoveLabelFile& DatasetBundle::alcove_labels() const
{
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (!labels_) {
        const std::string rel = "g2_alcove_labels.json";
        Json j = load_checked(rel);
        auto f = std::make_unique<AlcoveLabelFile>(labels_from_json(j, rel));
        f->labels();
        labels_ = std::move(f);
    }
    return *labels_;
}

const std::vector<RadicalTable>& DatasetBundle::radical_tables() const
{
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (!radical_) {
        std::vector<RadicalTable> tables;
        for (const auto& [rel, entry] : manifest_.at("files").items()) {
            if (rel.rfind("radical/", 0) != 0) continue;
            tables.push_back(radical_from_json(load_checked(rel), rel));
        }
        std::sort(tables.begin(), tables.end(), [](const auto& a, const auto& b) { return a.alcove < b.alcove; });
        const AlcoveLabelFile& labels = alcove_labels();
        validate_radical_tables(tables, labels, simples(Kind::G2, 7));
        validate_alcove_labels(labels, tables);
        radical_ = std::make_unique<std::vector<RadicalTable>>(std::move(tables));
    }
    return *radical_;
}

const std::vector<ExtGapDatum>& DatasetBundle::ext_gap() const
{
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (!ext_gap_) {
        const std::string rel = "ext_gap.json";
        Json j = load_checked(rel);
        auto v = std::make_unique<std::vector<ExtGapDatum>>(ext_gap_from_json(j, rel));
        validate_ext_gap(*v);
        ext_gap_ = std::move(v);
    }
    return *ext_gap_;
}

const ExtTable& DatasetBundle::a3p3_ext_table() const
{
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (!ext_table_) {
        const std::string rel = "a3p3_ext_table.json";
        Json j = load_checked(rel);
        auto t = std::make_unique<ExtTable>(ext_table_from_json(j, rel));
        for (const ExtTableRow& r : t->rows)
            if (!is_restricted(r.mu0, t->p) || !is_dominant(r.ext1))
                throw Error(ErrorCode::SchemaError, rel + ": row " + to_string(r.mu0) + " is malformed");
        ext_table_ = std::move(t);
    }
    return *ext_table_;
}

std::vector<ValidationStep> validate_bundle(const fs::path& root, const std::function<void(const ValidationStep&)>& progress)
{
    std::vector<ValidationStep> steps;
    auto run = [&](const std::string& name, const std::function<std::string()>& body) {
        ValidationStep s{name, true, ""};
        try {
            s.detail = body();
        } catch (const std::exception& e) {
            s.ok = false;
            s.detail = e.what();
        }
        steps.push_back(s);
        if (progress) progress(s);
        return s.ok;
    };

    std::unique_ptr<DatasetBundle> bundle;
    if (!run("manifest", [&] {
            Json m = read_manifest(root);
            std::set<std::string> listed;
            for (const auto& [rel, entry] : m.at("files").items()) {
                listed.insert(rel);
                if (!fs::exists(root / rel)) throw Error(ErrorCode::MissingData, "manifest lists missing file " + rel);
            }
            for (const std::string& rel : data_files(root))
                if (!listed.count(rel)) throw Error(ErrorCode::MissingData, rel + " is not listed in the manifest");
            bundle = std::make_unique<DatasetBundle>(root);
            return std::to_string(listed.size()) + " files";
        }))
        return steps;

    for (const auto& [k, p] : bundle->decomposition_keys()) {
        if (!run("decomposition " + kind_name(k) + " p=" + std::to_string(p), [&] {
                const DecompositionFile& f = bundle->decomposition(k, p);
                return std::to_string(f.table.rows.size()) + " rows: structure, stored characters, tensor product theorem, "
                                                             "sum formula";
            }))
            return steps;
    }
    if (!run("radical tables", [&] {
            const auto& t = bundle->radical_tables();
            return std::to_string(t.size()) + " tables: baby Verma identity, parity, triangular solve, worked alcove table";
        }))
        return steps;
    if (!run("ext gap data", [&] { return std::to_string(bundle->ext_gap().size()) + " entries"; })) return steps;
    run("A3 p=3 ext table", [&] { return std::to_string(bundle->a3p3_ext_table().rows.size()) + " rows"; });
    return steps;
}

} // namespace tmcv
