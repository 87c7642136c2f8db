#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest_printers.hpp"
#include "shadowkit/family.hpp"
#include "shadowkit_tools/cli.hpp"
#include "shadowkit_tools/json_io.hpp"

using namespace shadowkit;
using shadowkit::io::Json;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
    [[nodiscard]] Json json() const { return Json::parse(out); }
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// A scratch file removed when the test ends.
class TempFile {
public:
    explicit TempFile(const std::string& name)
        : path_(std::filesystem::temp_directory_path() / ("shadowkit_cli_test_" + name)) {}
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    [[nodiscard]] std::string str() const { return path_.string(); }
    void write(const std::string& text) const { std::ofstream(path_) << text; }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("decompose and bound") {
    const Result d = invoke({"decompose", "14", "4"});
    CHECK(d.code == cli::kSuccess);
    CHECK(d.out == "{\"seq\":[5,4,3,2]}\n");
    const Result b = invoke({"bound", "11", "3"});
    CHECK(b.code == cli::kSuccess);
    CHECK(b.out == "{\"bound\":12}\n");
    CHECK(invoke({"bound", "14", "4", "--iter", "2"}).json()["bound"] == 15);
}

TEST_CASE("exit codes") {
    CHECK(invoke({}).code == cli::kUsage);
    CHECK(invoke({"no-such-command"}).code == cli::kUsage);
    CHECK(invoke({"decompose", "-3", "2"}).code == cli::kUsage);
    CHECK(invoke({"decompose", "x", "2"}).code == cli::kUsage);
    CHECK(invoke({"bound", "5", "3", "--iter", "7"}).code == cli::kUsage);
    CHECK(invoke({"decompose", "999999999999999999999999999999999999999999", "3"}).code == cli::kResource);
    CHECK(invoke({"oracle", "min-shadow", "6", "3", "10", "--budget", "5"}).code == cli::kResource);
    CHECK(invoke({"check", "--in", "/nonexistent/family.json"}).code == cli::kUsage);
}

TEST_CASE("check verdicts") {
    TempFile seg("seg.json");
    io::write_family(seg.str(), initial_segment(6, 3, 12));
    const Result both = invoke({"check", "--in", seg.str(), "--mode", "both"});
    CHECK(both.code == cli::kSuccess);
    const Json j = both.json();
    CHECK(j["extremal"] == true);
    CHECK(j["characterization"]["verdict"] == true);

    TempFile apart("apart.json");
    apart.write(R"({"n":6,"k":3,"sets":[[1,2,3],[4,5,6]]})");
    CHECK(invoke({"check", "--in", apart.str()}).code == cli::kVerdictFalse);

    TempFile broken("broken.json");
    broken.write(R"({"n":4,"k":2,"sets":[[2,1]]})");
    CHECK(invoke({"check", "--in", broken.str()}).code == cli::kUsage);
    broken.write(R"({"n":4,"k":2,"sets":[[1,2],[1,2]]})");
    CHECK(invoke({"check", "--in", broken.str()}).code == cli::kUsage);
    broken.write(R"({"n":4,"k":2,"sets":[[1,5]]})");
    CHECK(invoke({"check", "--in", broken.str()}).code == cli::kUsage);
}

TEST_CASE("family JSON round trip") {
    TempFile file("round.json");
    for (const KFamily& f : {initial_segment(6, 3, 12), full_layer(5, 2), KFamily(7, 3, {}),
                             initial_segment(40, 4, 100)}) {
        io::write_family(file.str(), f);
        CHECK(io::read_family(file.str()) == f);
        CHECK(io::family_from_json(io::to_json(f)) == f);
    }
}

TEST_CASE("construct output feeds check and shadow") {
    const Result made = invoke({"construct", "forbidden-pairs", "--k", "3", "--n", "6", "--pairs", "1-2,3-4"});
    REQUIRE(made.code == cli::kSuccess);
    TempFile file("pairs.json");
    file.write(made.json()["family"].dump());
    const KFamily f = io::read_family(file.str());
    CHECK(f.size() == 12);
    const Result checked = invoke({"check", "--in", file.str(), "--mode", "both"});
    CHECK(checked.code == cli::kSuccess);
    const Result sh = invoke({"shadow", "--in", file.str()});
    CHECK(sh.code == cli::kSuccess);
    CHECK(io::family_from_json(sh.json()["family"]) == shadow(f));
}

TEST_CASE("output is deterministic and independent of threads") {
    const std::vector<std::vector<std::string>> commands{
        {"enumerate", "6", "3", "12", "--up-to-iso"},
        {"verify", "uniqueness", "5", "3"},
        {"verify", "lemma-abc", "--kmax", "3", "--amax", "6"},
        {"construct", "example32", "5", "3", "--variant", "c"},
        {"construct", "forbidden-pairs", "--k", "4", "--m", "4", "--t", "29", "--r", "2", "--arithmetic-only"},
    };
    for (const auto& cmd : commands) {
        CAPTURE(cmd.front());
        const Result first = invoke(cmd);
        const Result again = invoke(cmd);
        auto threaded_cmd = cmd;
        threaded_cmd.insert(threaded_cmd.begin(), {"--threads", "3"});
        const Result threaded = invoke(threaded_cmd);
        CHECK(first.out == again.out);
        CHECK(first.out == threaded.out);
        CHECK(first.code == threaded.code);
    }
}

TEST_CASE("large-instance arithmetic through the CLI") {
    const Result r =
        invoke({"construct", "forbidden-pairs", "--k", "4", "--m", "4", "--t", "29", "--r", "2", "--arithmetic-only"});
    REQUIRE(r.code == cli::kSuccess);
    const Json j = r.json();
    CHECK(j.dump().find("[119,112,104,58]") != std::string::npos);
}

TEST_CASE("text format") {
    const Result r = invoke({"--format", "text", "decompose", "14", "4"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.find("seq") != std::string::npos);
    CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("identity and reduction commands") {
    CHECK(invoke({"identity", "check", "--sum", "C(1,0) - C(0,0) - C(0,-1)"}).code == cli::kSuccess);
    CHECK(invoke({"identity", "check", "--sum", "C(1,0) - C(0,0)"}).code == cli::kVerdictFalse);
    const Result red = invoke({"reduce", "--wall", "1:2", "--b", "2", "--c", "", "--k", "1"});
    CHECK(red.code == cli::kSuccess);
}

TEST_CASE("verification commands") {
    CHECK(invoke({"verify", "conjecture", "--k", "3", "--xmax", "6", "--step", "0.5"}).code == cli::kSuccess);
    CHECK(invoke({"verify", "splits", "--a", "5,3", "--k", "3"}).json()["agree"] == true);
    CHECK(invoke({"verify", "min-degree", "5", "3"}).code == cli::kSuccess);
    CHECK(invoke({"verify", "characterization", "5", "3"}).code == cli::kSuccess);
    CHECK(invoke({"oracle", "min-shadow", "5", "3", "4"}).json()["min_shadow"] == 6);
}

}  // TEST_SUITE
