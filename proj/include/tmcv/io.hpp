#pragma once

#include "tmcv/alcove.hpp"
#include "tmcv/baby_verma.hpp"
#include "tmcv/decomposition.hpp"
#include "tmcv/tmc.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tmcv {

using Json = nlohmann::json;

// Schema identifiers written into every data file.
inline constexpr const char* kDecompositionSchema = "tmcv.decomposition/1";
inline constexpr const char* kRadicalSchema = "tmcv.radical/1";
inline constexpr const char* kLabelsSchema = "tmcv.g2-alcoves/1";
inline constexpr const char* kExtGapSchema = "tmcv.ext-gap/1";
inline constexpr const char* kExtTableSchema = "tmcv.ext-table/1";
inline constexpr const char* kManifestSchema = "tmcv.manifest/1";

Json weight_json(const Weight& w);
Weight weight_from_json(const Json& j, int rank, const std::string& where);

// Canonical form for hashing: sorted keys, no whitespace.
std::string canonical(const Json& j);
// Human-friendly layout: each element of a top-level array on its own line.
std::string pretty(const Json& j);

Json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

// Decomposition numbers plus dominant multiplicities of the restricted simples.
struct DecompositionFile {
    DecompositionTable table;
    std::map<Weight, Character, WeightLess> restricted;
};
Json to_json(const DecompositionFile& f);
DecompositionFile decomposition_from_json(const Json& j, const std::string& where);

Json to_json(const RadicalTable& t);
RadicalTable radical_from_json(const Json& j, const std::string& where);

// One row of the worked alcove table over the box of -rho: the alcove's
// 7-regular weight and the expected inverse KL polynomial, distance and layers.
struct AlcoveRow {
    int label = 0;
    Weight lambda;
    Weight w_lambda;
    Weight sigma0; // w_lambda = sigma0 - 7 rho
    std::string q;
    Int d = 0;
    std::vector<std::pair<int, Int>> layers;
};
struct AlcoveLabelFile {
    std::vector<AlcoveRow> rows;
    std::string provenance;
    G2AlcoveLabels labels() const;
};
Json to_json(const AlcoveLabelFile& f);
AlcoveLabelFile labels_from_json(const Json& j, const std::string& where);

std::vector<ExtGapDatum> ext_gap_from_json(const Json& j, const std::string& where);
Json to_json(const std::vector<ExtGapDatum>& v);

// Restricted mu0 with Ext^1_{G_1}(k, L(mu0)) != 0; the untwisted module is L(ext1).
struct ExtTableRow {
    Weight mu0;
    Weight ext1;
};
struct ExtTable {
    Kind kind = Kind::A3;
    Int p = 3;
    std::vector<ExtTableRow> rows;
    std::string provenance;
};
ExtTable ext_table_from_json(const Json& j, const std::string& where);
Json to_json(const ExtTable& t);

} // namespace tmcv
