#include "support.hpp"

#include "tmcv/io.hpp"
#include "tmcv/report.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <unistd.h>

using namespace tmcv;
using namespace tmcv::test;
namespace fs = std::filesystem;

namespace {

// A private copy of the bundle that is removed again on scope exit.
class ScratchBundle {
public:
    ScratchBundle()
        : root_(fs::temp_directory_path() / ("tmcv-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++)))
    {
        fs::remove_all(root_);
        fs::copy(data_dir(), root_, fs::copy_options::recursive);
    }
    ~ScratchBundle() { fs::remove_all(root_); }

    const fs::path& root() const { return root_; }

    Json read(const std::string& rel) const { return read_json(root_ / rel); }
    void write(const std::string& rel, const Json& j) const
    {
        write_text(root_ / rel, j.dump(2) + "\n");
        write_text(root_ / "manifest.json", build_manifest(root_).dump(2) + "\n");
    }

private:
    static inline int counter_ = 0;
    fs::path root_;
};

std::string failure(const fs::path& root)
{
    for (const ValidationStep& s : validate_bundle(root))
        if (!s.ok) return s.detail;
    return {};
}

std::string wstr(const Json& a)
{
    return to_string(weight_from_json(a, static_cast<int>(a.size()), "test"));
}

int run_cli(const std::string& args)
{
    const std::string cmd = std::string(TMCV_CLI) + " " + args + " > /dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

struct Mutation {
    std::string file;
    std::string kind;  // "row", "restricted" or "radical"
    std::size_t item = 0, slot = 0;
    std::vector<std::string> names; // weights the diagnostic may name
};

} // namespace

TEST_SUITE("bundle")
{
TEST_CASE("the shipped bundle validates")
{
    std::vector<ValidationStep> steps = validate_bundle(data_dir());
    REQUIRE_FALSE(steps.empty());
    for (const ValidationStep& s : steps) {
        CAPTURE(s.name);
        CAPTURE(s.detail);
        CHECK(s.ok);
    }
    // 15 decomposition files plus the manifest, radical, ext gap and ext table steps
    CHECK(steps.size() >= 18);
    CHECK(canonical(build_manifest(data_dir())) == canonical(read_json(fs::path(data_dir()) / "manifest.json")));
}

TEST_CASE("reports")
{
    for (auto [k, p] : {std::pair{Kind::A2, Int(3)}, std::pair{Kind::A3, Int(3)}, std::pair{Kind::B2, Int(5)},
                        std::pair{Kind::G2, Int(3)}, std::pair{Kind::G2, Int(7)}}) {
        CAPTURE(kind_name(k));
        CAPTURE(p);
        const Report r = build_report(bundle(), k, p);
        CHECK_FALSE(r.sections.empty());
        const std::string text = render_text(r);
        const std::string json = canonical(to_json(r));
        // byte for byte the same on a second run, from a fresh bundle
        DatasetBundle again(data_dir());
        const Report r2 = build_report(again, k, p);
        CHECK(render_text(r2) == text);
        CHECK(canonical(to_json(r2)) == json);
        // JSON round trip
        const Report back = report_from_json(to_json(r));
        CHECK(canonical(to_json(back)) == json);
        CHECK(to_json(r)["schema"] == kReportSchema);
        // no section names a source document
        CHECK(text.find("Section") == std::string::npos);
        CHECK(text.find("Theorem") == std::string::npos);
    }
    CHECK_THROWS_AS(build_report(bundle(), Kind::G2, 9), Error);
    try {
        build_report(bundle(), Kind::A2, 1);
        FAIL("1 is not prime");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnsupportedCase);
    }
}

TEST_CASE("report exit status")
{
    Report r;
    r.sections.push_back({"a", Status::Verified, {}});
    r.sections.push_back({"b", Status::OutOfScope, {}});
    CHECK(r.exit_status() == 0);
    r.sections.push_back({"c", Status::Failed, {"x"}});
    CHECK(r.exit_status() == 1);
    CHECK(status_name(Status::DataValidated) == "DataValidated");
}

TEST_CASE("CLI exit codes")
{
    const std::string data = "--data-dir " + data_dir().string();
    CHECK(run_cli("validate " + data) == 0);
    CHECK(run_cli("report --type A3 --prime 3 " + data) == 0);
    CHECK(run_cli("report --type G2 --prime 7 --format json " + data) == 0);
    CHECK(run_cli("scan --type A3 --prime 3") == 0);
    CHECK(run_cli("chars --type G2 --prime 7 --weight 1,1 " + data) == 0);
    CHECK(run_cli("alcoves --type G2 --prime 7 " + data) == 0);
    CHECK(run_cli("") == 2);
    CHECK(run_cli("report --type G2") == 2);
    CHECK(run_cli("report --type E8 --prime 7") == 2);
    CHECK(run_cli("report --type G2 --prime 8") == 2);
    CHECK(run_cli("chars --type G2 --prime 7 --weight 1,2,3") == 2);
    CHECK(run_cli("validate " + (fs::temp_directory_path() / "tmcv-no-such-dir").string()) != 0);
}

TEST_CASE("a missing row is reported by weight")
{
    ScratchBundle s;
    const std::string rel = "decomposition/G2_p7.json";
    Json j = s.read(rel);
    auto& rows = j["rows"];
    auto it = std::find_if(rows.begin(), rows.end(), [](const Json& r) { return r["weight"] == Json::array({3, 2}); });
    REQUIRE(it != rows.end());
    rows.erase(it);
    s.write(rel, j);
    const std::string msg = failure(s.root());
    CAPTURE(msg);
    CHECK(msg.find("MissingKey") != std::string::npos);
    CHECK(msg.find("(3,2)") != std::string::npos);
    CHECK(run_cli("validate " + s.root().string()) == 1);
}

TEST_CASE("a missing key is reported")
{
    ScratchBundle s;
    const std::string rel = "radical/alcove_08.json";
    Json j = s.read(rel);
    j["entries"][3].erase("layer");
    s.write(rel, j);
    const std::string msg = failure(s.root());
    CAPTURE(msg);
    CHECK(msg.find("layer") != std::string::npos);
    CHECK(msg.find("alcove_08") != std::string::npos);
}

TEST_CASE("a stale manifest is caught")
{
    ScratchBundle s;
    Json j = s.read("ext_gap.json");
    j["entries"][0]["d"] = 7;
    write_text(s.root() / "ext_gap.json", j.dump(2) + "\n");
    const std::string msg = failure(s.root());
    CAPTURE(msg);
    CHECK(msg.find("ext_gap.json") != std::string::npos);
}

TEST_CASE("every sampled multiplicity change is caught")
{
    // sample multiplicity fields across the three kinds of data
    std::mt19937_64 gen(2026);
    std::vector<Mutation> all;
    for (const auto& e : fs::directory_iterator(fs::path(data_dir()) / "decomposition")) {
        const std::string rel = "decomposition/" + e.path().filename().string();
        const Json j = read_json(e.path());
        for (std::size_t i = 0; i < j["rows"].size(); ++i) {
            const Json& row = j["rows"][i];
            for (std::size_t k = 0; k < row["factors"].size(); ++k)
                all.push_back({rel, "row", i, k, {wstr(row["weight"]), wstr(row["factors"][k][0])}});
        }
        for (std::size_t i = 0; i < j["restricted_characters"].size(); ++i) {
            const Json& c = j["restricted_characters"][i];
            for (std::size_t k = 0; k < c["dominant"].size(); ++k)
                all.push_back({rel, "restricted", i, k, {wstr(c["weight"]), wstr(c["dominant"][k][0])}});
        }
    }
    for (const auto& e : fs::directory_iterator(fs::path(data_dir()) / "radical")) {
        const std::string rel = "radical/" + e.path().filename().string();
        const Json j = read_json(e.path());
        for (std::size_t i = 0; i < j["entries"].size(); ++i) {
            const Json& x = j["entries"][i];
            all.push_back({rel, "radical", i, 0, {wstr(x["sigma0"]), wstr(x["sigma1"]), wstr(x["shifted_sigma1"])}});
        }
    }
    std::vector<Mutation> picked;
    for (const char* kind : {"row", "restricted", "radical"}) {
        std::vector<Mutation> pool;
        std::copy_if(all.begin(), all.end(), std::back_inserter(pool), [&](const Mutation& m) { return m.kind == kind; });
        REQUIRE(pool.size() >= 18);
        std::shuffle(pool.begin(), pool.end(), gen);
        picked.insert(picked.end(), pool.begin(), pool.begin() + 18);
    }
    REQUIRE(picked.size() >= 50);

    ScratchBundle s;
    int caught = 0;
    for (const Mutation& m : picked) {
        const Json original = s.read(m.file);
        Json j = original;
        if (m.kind == "row") j["rows"][m.item]["factors"][m.slot][1] = j["rows"][m.item]["factors"][m.slot][1].get<Int>() + 1;
        else if (m.kind == "restricted")
            j["restricted_characters"][m.item]["dominant"][m.slot][1] = j["restricted_characters"][m.item]["dominant"][m.slot][1].get<Int>() + 1;
        else j["entries"][m.item]["mult"] = j["entries"][m.item]["mult"].get<Int>() + 1;
        s.write(m.file, j);
        const std::string msg = failure(s.root());
        s.write(m.file, original);
        CAPTURE(m.file);
        CAPTURE(m.kind);
        CAPTURE(m.item);
        CAPTURE(msg);
        CHECK_FALSE(msg.empty());
        CHECK(msg.find("manifest") == std::string::npos);
        const bool named = std::any_of(m.names.begin(), m.names.end(), [&](const std::string& n) { return msg.find(n) != std::string::npos; });
        CHECK(named);
        caught += !msg.empty() && named;
    }
    CHECK(caught == static_cast<int>(picked.size()));
    CHECK(failure(s.root()).empty());
}
}
