#pragma once

#include "tmcv/io.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace tmcv {

std::string sha256_hex(const std::string& bytes);

// Data directory: $TMCV_DATA_DIR if set, else the source tree's data/.
std::filesystem::path default_data_dir();

// Manifest of the bundle: relative path -> sha256 of the canonical JSON and the
// provenance block of the file.
Json build_manifest(const std::filesystem::path& root);

// Validated view of a data directory. Each file is parsed and run through its
// validators on first use; a file that fails is never handed out.
class DatasetBundle {
public:
    explicit DatasetBundle(std::filesystem::path root);

    const std::filesystem::path& root() const { return root_; }

    bool has_decomposition(Kind k, Int p) const;
    const DecompositionFile& decomposition(Kind k, Int p) const;
    const SimpleCharacters& simples(Kind k, Int p) const;
    const std::vector<RadicalTable>& radical_tables() const;
    const AlcoveLabelFile& alcove_labels() const;
    const std::vector<ExtGapDatum>& ext_gap() const;
    const ExtTable& a3p3_ext_table() const;

    std::vector<std::pair<Kind, Int>> decomposition_keys() const;

private:
    Json load_checked(const std::string& rel) const;

    std::filesystem::path root_;
    Json manifest_;
    mutable std::recursive_mutex mutex_;
    mutable std::map<std::pair<Kind, Int>, std::unique_ptr<DecompositionFile>> decomposition_;
    mutable std::map<std::pair<Kind, Int>, std::unique_ptr<SimpleCharacters>> simples_;
    mutable std::unique_ptr<std::vector<RadicalTable>> radical_;
    mutable std::unique_ptr<AlcoveLabelFile> labels_;
    mutable std::unique_ptr<std::vector<ExtGapDatum>> ext_gap_;
    mutable std::unique_ptr<ExtTable> ext_table_;
};

// Validators, exposed for tests. Each throws tmcv::Error naming the first failure.
void validate_decomposition(const DecompositionFile& f);
void validate_radical_tables(const std::vector<RadicalTable>& tables, const AlcoveLabelFile& labels,
                             const SimpleCharacters& g2p7);
void validate_alcove_labels(const AlcoveLabelFile& f, const std::vector<RadicalTable>& tables);
void validate_ext_gap(const std::vector<ExtGapDatum>& data);

struct ValidationStep {
    std::string name;
    bool ok = true;
    std::string detail;
};

// Every loader and oracle over the bundle; stops at the first failure.
std::vector<ValidationStep> validate_bundle(const std::filesystem::path& root,
                                            const std::function<void(const ValidationStep&)>& progress = {});

} // namespace tmcv
