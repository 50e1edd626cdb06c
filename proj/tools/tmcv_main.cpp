// tmcv: validate the bundled data and print verification reports.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or data error.

#include "tmcv/bundle.hpp"
#include "tmcv/report.hpp"
#include "tmcv/tmc.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace tmcv;

namespace {

struct Options {
    std::string type;
    Int prime = 0;
    std::string weight;
    std::string format = "text";
    std::string data_dir;
};

int exit_for(const Error& e)
{
    switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::UnsupportedCase:
    case ErrorCode::MissingData:
    case ErrorCode::SchemaError:
    case ErrorCode::WrongSystem:
    case ErrorCode::NotDominant:
    case ErrorCode::NotRestricted:
    case ErrorCode::MissingKey: return 2;
    default: return 1;
    }
}

Json pairs_json(const Multiset& m)
{
    Json a = Json::array();
    for (const auto& [w, k] : m) a.push_back(Json::array({weight_json(w), k}));
    return a;
}

Json character_json(const Character& c)
{
    Json a = Json::array();
    for (const auto& [w, k] : c) a.push_back(Json::array({weight_json(w), k}));
    return a;
}

void print(const Options& o, const Json& j, const std::string& text)
{
    if (o.format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

Weight read_weight(const RootSystem& rs, const std::string& s)
{
    Weight w = parse_weight(s);
    if (w.size() != rs.rank)
        throw Error(ErrorCode::ParseError, "weight " + s + " has " + std::to_string(w.size()) + " entries, " + kind_name(rs.kind) +
                                               " needs " + std::to_string(rs.rank));
    return w;
}

int cmd_validate(const Options& o)
{
    bool ok = true;
    validate_bundle(o.data_dir, [&](const ValidationStep& s) {
        std::cout << (s.ok ? "ok   " : "FAIL ") << s.name << ": " << s.detail << "\n";
        ok = ok && s.ok;
    });
    return ok ? 0 : 1;
}

int cmd_report(const Options& o)
{
    DatasetBundle bundle(o.data_dir);
    Report r = build_report(bundle, parse_kind(o.type), o.prime);
    print(o, to_json(r), render_text(r));
    return r.exit_status();
}

int cmd_chars(const Options& o)
{
    const RootSystem& rs = root_system(parse_kind(o.type));
    const Weight lambda = read_weight(rs, o.weight);
    if (!is_dominant(lambda)) throw Error(ErrorCode::NotDominant, to_string(lambda));
    std::ostringstream os;
    Json j;
    j["system"] = kind_name(rs.kind);
    j["prime"] = o.prime;
    j["weight"] = weight_json(lambda);

    Character weyl = dominant_part(weyl_character(rs, lambda));
    j["weyl_dim"] = weyl_dim(rs, lambda);
    j["weyl_dominant"] = character_json(weyl);
    os << "nabla" << to_string(lambda) << ": dim " << weyl_dim(rs, lambda) << "\n  dominant weights:";
    for (const auto& [w, m] : weyl) os << " " << to_string(w) << (m != 1 ? "x" + std::to_string(m) : "");
    os << "\n";

    DatasetBundle bundle(o.data_dir);
    if (o.prime > 0 && bundle.has_decomposition(rs.kind, o.prime)) {
        const DecompositionFile& f = bundle.decomposition(rs.kind, o.prime);
        const SimpleCharacters& sc = bundle.simples(rs.kind, o.prime);
        if (f.table.has(lambda)) {
            const Multiset& row = f.table.row(lambda);
            j["factors"] = pairs_json(row);
            os << "composition factors at p = " << o.prime << ":";
            for (const auto& [w, m] : row) os << " " << to_string(w) << (m != 1 ? "x" + std::to_string(m) : "");
            os << "\n";
            const Int dim = sc.character(lambda).dim();
            j["simple_dim"] = dim;
            os << "L" << to_string(lambda) << ": dim " << dim << "\n";
        } else {
            os << "no decomposition row for " << to_string(lambda) << " at p = " << o.prime << "\n";
        }
        if (is_restricted(lambda, o.prime)) {
            Character r = residual_character(rs, o.prime, lambda, sc);
            j["residual_dim"] = r.dim();
            j["hat"] = weight_json(hat(rs, o.prime, 1, lambda));
            os << "residual ch nabla(hat" << to_string(lambda) << ") - ch L" << to_string(lambda) << ": dim " << r.dim() << "\n";
        }
    } else if (o.prime > 0) {
        os << "no decomposition data for " << kind_name(rs.kind) << " p = " << o.prime << "\n";
    }
    print(o, j, os.str());
    return 0;
}

int cmd_scan(const Options& o)
{
    const RootSystem& rs = root_system(parse_kind(o.type));
    if (!is_prime(o.prime)) throw Error(ErrorCode::UnsupportedCase, std::to_string(o.prime) + " is not prime");
    auto rows = steinberg_weight_scan(rs, o.prime);
    Json a = Json::array();
    std::ostringstream os;
    os << rows.size() << " rows\n";
    for (const ScanViolation& v : rows) {
        a.push_back({{"gamma", weight_json(v.gamma)},
                     {"simple", v.simple + 1},
                     {"mu", weight_json(v.mu)},
                     {"sigma0", weight_json(v.sigma0)},
                     {"sigma1", weight_json(v.sigma1)},
                     {"reflected", weight_json(v.reflected)},
                     {"target", weight_json(v.target)}});
        os << to_string(v.gamma) << " | " << v.simple + 1 << " | " << to_string(v.mu) << " | " << to_string(v.sigma1) << " | "
           << to_string(v.reflected) << " | " << to_string(v.target) << "\n";
    }
    print(o, Json{{"system", kind_name(rs.kind)}, {"prime", o.prime}, {"rows", a}}, os.str());
    return 0;
}

int cmd_babyverma(const Options& o)
{
    const RootSystem& rs = root_system(parse_kind(o.type));
    const Weight mu = read_weight(rs, o.weight);
    DatasetBundle bundle(o.data_dir);
    const SimpleCharacters& sc = bundle.simples(rs.kind, o.prime);
    std::ostringstream os;
    Json j{{"system", kind_name(rs.kind)}, {"prime", o.prime}, {"weight", weight_json(mu)}};

    if (rs.kind == Kind::G2 && o.prime == 7) {
        for (const RadicalTable& t : bundle.radical_tables()) {
            if (!same(t.base, mu) && !same(t.shifted_base(), mu)) continue;
            Json layers = Json::array();
            os << "alcove " << t.alcove << ", radical layers of Zhat'" << to_string(t.shifted_base()) << " (sigma0 | layer | sigma1 + rho):\n";
            for (const RadicalEntry& e : t.entries) {
                layers.push_back({{"sigma0", weight_json(e.sigma0)}, {"layer", e.layer}, {"sigma1", weight_json(e.sigma1 + rs.rho())}, {"mult", e.mult}});
                os << "  " << to_string(e.sigma0) << " | " << e.layer << " | " << to_string(e.sigma1 + rs.rho())
                   << (e.mult != 1 ? " x" + std::to_string(e.mult) : "") << "\n";
            }
            j["alcove"] = t.alcove;
            j["layers"] = layers;
            print(o, j, os.str());
            return 0;
        }
    }
    Json fs = Json::array();
    os << "G_1T factors of Zhat'" << to_string(mu) << " (sigma0 | sigma1 | mult):\n";
    for (const G1TFactor& f : g1t_factors(rs, o.prime, mu, sc)) {
        fs.push_back({{"sigma0", weight_json(f.sigma0)}, {"sigma1", weight_json(f.sigma1)}, {"mult", f.mult}});
        os << "  " << to_string(f.sigma0) << " | " << to_string(f.sigma1) << " | " << f.mult << "\n";
    }
    j["factors"] = fs;
    print(o, j, os.str());
    return 0;
}

int cmd_alcoves(const Options& o)
{
    const RootSystem& rs = root_system(parse_kind(o.type));
    std::ostringstream os;
    Json j{{"system", kind_name(rs.kind)}, {"prime", o.prime}};
    if (!o.weight.empty()) {
        const Weight w = read_weight(rs, o.weight);
        j["weight"] = weight_json(w);
        const bool regular = is_p_regular(rs, w, o.prime);
        j["p_regular"] = regular;
        os << to_string(w) << (regular ? " is " : " is not ") << o.prime << "-regular\n";
        if (regular) {
            AlcoveId a = alcove_of(rs, w, o.prime);
            j["levels"] = a.levels;
            os << "alcove levels:";
            for (Int l : a.levels) os << " " << l;
            os << "\n";
            SpecialPoint nu = box_of(rs, o.prime, w);
            j["box"] = weight_json(nu.nu);
            os << "box of special point " << to_string(nu.nu) << "\n";
            if (rs.kind == Kind::G2 && o.prime == 7) {
                DatasetBundle bundle(o.data_dir);
                try {
                    int label = bundle.alcove_labels().labels().label(alcove_of(rs, w - (nu.nu + rs.rho()), 7));
                    j["label"] = label;
                    os << "label " << label << "\n";
                } catch (const Error&) {
                }
            }
        }
        print(o, j, os.str());
        return 0;
    }
    if (rs.kind != Kind::G2 || o.prime != 7) throw Error(ErrorCode::UnsupportedCase, "alcove labels exist for G2, p = 7 only; pass --weight");
    DatasetBundle bundle(o.data_dir);
    Json rows = Json::array();
    for (const HatPair& h : g2p7_hat_table(bundle.radical_tables())) {
        rows.push_back({{"alcove", h.alcove}, {"lambda", weight_json(h.lambda)}, {"hat", weight_json(h.hat)}});
        os << "alcove " << h.alcove << ": lambda " << to_string(h.lambda) << ", hat " << to_string(h.hat) << "\n";
    }
    j["hat_table"] = rows;
    print(o, j, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Checks for the tilting module conjecture in small rank"};
    app.require_subcommand(1);
    Options o;
    o.data_dir = default_data_dir().string();
    app.add_option("--data-dir", o.data_dir, "bundle directory (default $TMCV_DATA_DIR)");

    auto typed = [&](CLI::App* c, bool weight) {
        c->add_option("--type", o.type, "A1, A2, A3, B2 or G2")->required();
        c->add_option("--prime", o.prime)->required();
        auto* w = c->add_option("--weight", o.weight, "a,b[,c]");
        if (weight) w->required();
        c->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
        c->add_option("--data-dir", o.data_dir);
    };
    auto* validate = app.add_subcommand("validate", "run every loader and oracle over the bundle");
    validate->add_option("--data-dir", o.data_dir);
    validate->add_option("path", o.data_dir, "bundle directory");
    auto* report = app.add_subcommand("report", "verification report for one (type, prime)");
    typed(report, false);
    auto* chars = app.add_subcommand("chars", "Weyl character, decomposition and residual of one weight");
    typed(chars, true);
    auto* scan = app.add_subcommand("scan", "Steinberg weight scan");
    typed(scan, false);
    auto* bv = app.add_subcommand("babyverma", "G_1T factors or radical layers of a baby Verma module");
    typed(bv, true);
    auto* alc = app.add_subcommand("alcoves", "alcove of a weight, or the G2 p = 7 labels");
    typed(alc, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*validate) return cmd_validate(o);
        if (*report) return cmd_report(o);
        if (*chars) return cmd_chars(o);
        if (*scan) return cmd_scan(o);
        if (*bv) return cmd_babyverma(o);
        if (*alc) return cmd_alcoves(o);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_for(e);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
