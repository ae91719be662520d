#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "invforms/errors.hpp"
#include "invforms/report.hpp"

using namespace invforms;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("invforms_test_" + name)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    void write(const std::string& file, const std::string& text) const { std::ofstream(path / file) << text; }
    std::string read(const std::string& file) const {
        std::ifstream in(path / file);
        return std::string(std::istreambuf_iterator<char>(in), {});
    }
};

} // namespace

TEST_CASE("A1 report") {
    AnalyzeOptions opt;
    opt.max_degree = 6;
    const Analysis a = analyze(cyclic_action(2, {1, 1}), opt);
    CHECK_FALSE(a.inconclusive);
    CHECK(a.violations.empty());
    const auto& r = a.report;
    CHECK(r["schema"] == 1);
    CHECK(r["smoothness"]["consolidated"] == "singular");
    CHECK(r["smoothness"]["agreement"] == true);
    CHECK(r["surjectivity"][0]["verdict"] == "not_surjective");
    CHECK(r["surjectivity"][0]["witness_degrees"] == nlohmann::json::array({2}));
    CHECK(r["canonical"]["status"] == "equal");
    CHECK_FALSE(r.contains("timings_ms"));
}

TEST_CASE("reports are byte-deterministic") {
    AnalyzeOptions opt;
    opt.max_degree = 8;
    for (const auto& a : {cyclic_action(3, {1, 2}), torus_action({{1, 1, -1}})}) {
        const std::string first = render_json(analyze(a, opt).report);
        const std::string second = render_json(analyze(a, opt).report);
        CHECK(first == second);
        CHECK(first.back() == '\n');
    }
}

TEST_CASE("pseudo-reflection report") {
    const Analysis a = analyze(cyclic_action(2, {1, 0}), {});
    CHECK_FALSE(a.inconclusive);
    CHECK(a.report["smoothness"]["consolidated"] == "smooth");
    for (const auto& s : a.report["surjectivity"]) CHECK(s["verdict"] == "surjective");
    CHECK(a.report["canonical"]["status"] == "not_applicable");
}

TEST_CASE("a bound below the certificate is reported inconclusive") {
    AnalyzeOptions opt;
    opt.max_degree = 3;
    const Analysis a = analyze(cyclic_action(7, {1, 3}), opt);
    CHECK(a.inconclusive);
    CHECK_FALSE(a.report["inconclusive"].empty());
}

TEST_CASE("default degree bound") {
    CHECK(default_max_degree(cyclic_action(2, {1, 1})) == 12);
    CHECK(default_max_degree(cyclic_action(8, {1, 1})) == 16);
    CHECK(default_max_degree(torus_action({{1, -1}})) == 12);
}

TEST_CASE("euler table") {
    EulerHomologyOptions opt;
    const auto rows = euler_table(torus_action({{1, 1}}), 3, std::nullopt, opt);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].piece_dimensions == std::vector<std::size_t>{4, 6, 2});
    CHECK(rows[0].homology == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("corpus runner exit codes") {
    SUBCASE("empty corpus") {
        TempDir dir("empty");
        CHECK(run_corpus(dir.path).exit_code == 1);
    }
    SUBCASE("goldens: write, match, corrupt") {
        TempDir dir("goldens");
        dir.write("a1.json", R"({"n":2,"torus_rank":0,"finite_orders":[2],"weight_matrix":[[1,1]]})");
        dir.write("line.json", R"({"n":2,"torus_rank":1,"finite_orders":[],"weight_matrix":[[1,-1]]})");
        CorpusOptions opt;
        opt.max_degree = 6;
        opt.jobs = 2;
        CHECK(run_corpus(dir.path, opt).exit_code == 0); // no goldens yet: nothing to compare
        opt.write_goldens = true;
        CHECK(run_corpus(dir.path, opt).exit_code == 0);
        opt.write_goldens = false;
        const CorpusResult ok = run_corpus(dir.path, opt);
        CHECK(ok.exit_code == 0);
        CHECK(ok.instances.size() == 2);
        dir.write("a1.golden.json", dir.read("a1.golden.json") + " ");
        CHECK(run_corpus(dir.path, opt).exit_code == 3);
    }
    SUBCASE("insufficient bound") {
        TempDir dir("bound");
        dir.write("z7.json", R"({"n":2,"torus_rank":0,"finite_orders":[7],"weight_matrix":[[1,3]]})");
        CorpusOptions opt;
        opt.max_degree = 3;
        opt.write_goldens = true;
        const CorpusResult r = run_corpus(dir.path, opt);
        CHECK(r.exit_code == 2);
        CHECK(r.instances[0].status == "inconclusive");
    }
    SUBCASE("malformed spec") {
        TempDir dir("bad");
        dir.write("bad.json", R"({"n":2,"torus_rank":0,"finite_orders":[1],"weight_matrix":[[1,1]]})");
        CHECK(run_corpus(dir.path).exit_code == 1);
    }
}
