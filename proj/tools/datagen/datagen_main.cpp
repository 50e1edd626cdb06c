// Offline generator for the bundled decomposition tables.
//
//   tmcv_datagen dims --type G2 --prime 7 --weight 5,5
//   tmcv_datagen generate --type A3 --prime 3 --out data/decomposition [--extra 2,3,3]
//   tmcv_datagen manifest --data data

#include "hyperalgebra.hpp"

#include "tmcv/bundle.hpp"
#include "tmcv/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <set>

using namespace tmcv;

namespace {

std::vector<Weight> restricted_weights(const RootSystem& rs, Int p)
{
    std::vector<Weight> out;
    Weight w = Weight::Zero(rs.rank);
    for (;;) {
        out.push_back(w);
        int i = 0;
        while (i < rs.rank && w(i) == p - 1) w(i++) = 0;
        if (i == rs.rank) break;
        ++w(i);
    }
    return out;
}

class Simples {
public:
    Simples(const RootSystem& rs, Int p) : rs_(rs), p_(p) {}

    // Dominant part of ch L(lambda), Steinberg's tensor product theorem above X_1.
    const Character& get(const Weight& lambda)
    {
        auto it = cache_.find(lambda);
        if (it != cache_.end()) return it->second;
        Character ch;
        auto [l0, l1] = restricted_split(lambda, p_);
        if (l1.isZero()) {
            ch = datagen::simple_dominant_multiplicities(rs_, p_, l0);
        } else {
            Character a = expand_orbits(rs_, get(l0));
            Character b = twist(expand_orbits(rs_, get(l1)), p_);
            ch = dominant_part(tensor(a, b));
        }
        return cache_.emplace(lambda, std::move(ch)).first->second;
    }

private:
    const RootSystem& rs_;
    Int p_;
    std::map<Weight, Character, WeightLess> cache_;
};

Multiset peel(const RootSystem& rs, Character c, Simples& simples)
{
    Multiset out;
    while (!c.empty()) {
        Weight top = top_weight(rs, c);
        Int m = c[top];
        if (m < 0) throw Error(ErrorCode::NegativeResidue, "negative residue at " + to_string(top));
        c.add(simples.get(top), -m);
        out.emplace_back(top, m);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return WeightLess{}(a.first, b.first); });
    return out;
}

int generate(Kind kind, Int p, const std::string& out_dir, const std::vector<std::string>& extra)
{
    const RootSystem& rs = root_system(kind);
    std::vector<Weight> tops = restricted_weights(rs, p);
    for (const std::string& e : extra) tops.push_back(parse_weight(e));

    std::set<Weight, WeightLess> keys;
    for (const Weight& t : tops)
        for (const Weight& w : dominant_weights_below(rs, t)) keys.insert(w);

    Simples simples(rs, p);
    DecompositionFile f;
    f.table.kind = kind;
    f.table.p = p;
    for (const Weight& lambda : keys) {
        Multiset row = peel(rs, dominant_part(weyl_character(rs, lambda)), simples);
        f.table.rows.emplace(lambda, std::move(row));
    }
    for (const Weight& lambda : restricted_weights(rs, p)) f.restricted.emplace(lambda, simples.get(lambda));

    Json prov;
    prov["method"] = "simple modules constructed weight space by weight space over F_p with the divided-power "
                     "hyperalgebra; non-restricted simples by Steinberg's tensor product theorem; rows by "
                     "highest-weight peeling of Weyl characters";
    prov["generator"] = "tmcv_datagen generate";
    prov["keys"] = "all dominant weights below a restricted weight" +
                   (extra.empty() ? std::string() : " or below one of the listed extra weights");
    Json extras = Json::array();
    for (const std::string& e : extra) extras.push_back(weight_json(parse_weight(e)));
    prov["extra"] = extras;
    f.table.provenance = canonical(prov);

    const std::string name = kind_name(kind) + "_p" + std::to_string(p) + ".json";
    write_text(std::filesystem::path(out_dir) / name, pretty(to_json(f)));
    std::cout << name << ": " << f.table.rows.size() << " rows, " << f.restricted.size() << " restricted characters\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Offline generator for simple characters and decomposition numbers"};
    app.require_subcommand(1);
    std::string type, weight, out_dir;
    std::vector<std::string> extra;
    Int p = 0;

    auto* dims = app.add_subcommand("dims", "print dominant multiplicities of L(lambda)");
    dims->add_option("--type", type)->required();
    dims->add_option("--prime", p)->required();
    dims->add_option("--weight", weight)->required();

    auto* gen = app.add_subcommand("generate", "write the decomposition table for one (type, prime)");
    gen->add_option("--type", type)->required();
    gen->add_option("--prime", p)->required();
    gen->add_option("--out", out_dir)->required();
    gen->add_option("--extra", extra, "additional top weights for the key set");

    std::string data_dir;
    auto* man = app.add_subcommand("manifest", "rewrite manifest.json for a data directory");
    man->add_option("--data", data_dir)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*man) {
            write_text(std::filesystem::path(data_dir) / "manifest.json", build_manifest(data_dir).dump(2) + "\n");
            return 0;
        }
        const RootSystem& rs = root_system(parse_kind(type));
        if (*dims) {
            Character ch = datagen::simple_dominant_multiplicities(rs, p, parse_weight(weight));
            Int total = 0;
            for (const auto& [w, m] : ch) {
                std::cout << to_string(w) << " " << m << "\n";
                total += m * static_cast<Int>(orbit(rs, w).size());
            }
            std::cout << "dim " << total << "\n";
            return 0;
        }
        return generate(rs.kind, p, out_dir, extra);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
