#include "doctest.h"
#include "cli_harness.hpp"
#include "golden.hpp"
#include "json.hpp"

#include <fstream>
#include <regex>

using geoseries::testing::run_cli;
using geoseries::testing::ScratchDir;
using nlohmann::json;

namespace {

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    return lines;
}

// Every "p/q" string value in a JSON document.
void collect_rationals(const json& j, std::vector<std::string>& out)
{
    static const std::regex rational(R"re(-?[0-9]+/[0-9]+)re");
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (std::regex_match(s, rational))
            out.push_back(s);
    } else if (j.is_structured()) {
        for (const auto& item : j)
            collect_rationals(item, out);
    }
}

void check_same_numbers(const std::string& table, const std::string& json_text)
{
    std::vector<std::string> rationals;
    collect_rationals(json::parse(json_text), rationals);
    CHECK_FALSE(rationals.empty());
    for (const auto& r : rationals) {
        CAPTURE(r);
        CHECK(table.find(r) != std::string::npos);
    }
}

} // namespace

TEST_CASE("feasible table")
{
    const auto res = run_cli({"feasible", "--max-m", "10", "--format", "table"});
    REQUIRE(res.status == 0);
    const auto lines = lines_of(res.out);
    // Header, rule, nine candidates, summary.
    REQUIRE(lines.size() == 12);
    CHECK(lines[2].rfind("2 ", 0) == 0);
    CHECK(lines[2].find("1/3") != std::string::npos);
    CHECK(std::regex_search(lines[2], std::regex(R"re(^2\s+1/2\s+yes\s+3\s+1\s+yes\s+yes\s+yes\s+yes\s+1/3\s+-$)re")));
    CHECK(std::regex_search(lines[3], std::regex(R"re(^3\s+1/3\s+yes\s+5\s+4\s+yes\s+yes\s+yes\s+yes\s+4/5\s+-$)re")));
    int infeasible = 0;
    for (std::size_t i = 4; i < 11; ++i) {
        CHECK(lines[i].find("bound,a<n") != std::string::npos);
        infeasible += lines[i].find(" no ") != std::string::npos;
    }
    CHECK(infeasible == 7);
    CHECK(lines.back() == "feasible: m=2, m=3 of 9 candidates");
}

TEST_CASE("feasible json")
{
    const auto res = run_cli({"feasible", "--max-m", "10", "--format", "json"});
    REQUIRE(res.status == 0);
    const auto doc = json::parse(res.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["candidates"].size() == 9);
    CHECK(doc["feasible_m"] == json::array({2, 3}));
    CHECK(doc["candidates"][0]["sum"] == "1/3");
    CHECK(doc["candidates"][1]["sum"] == "4/5");
    CHECK(doc["candidates"][2]["sum"].is_null());
    CHECK(doc["candidates"][2]["failed"] == json::array({"bound", "a<n"}));
    check_same_numbers(run_cli({"feasible", "--max-m", "10"}).out, res.out);
}

TEST_CASE("table subcommand")
{
    const auto res = run_cli({"table", "--ratio", "1/4", "--first-term", "1/4", "--terms", "5"});
    REQUIRE(res.status == 0);
    const auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 8);
    const std::vector<std::string> partials{"1/4", "5/16", "21/64", "85/256", "341/1024"};
    for (std::size_t i = 0; i < partials.size(); ++i) {
        CAPTURE(lines[i + 2]);
        const std::regex row("^" + std::to_string(i + 1) + R"re(\s+\S+\s+)re" + partials[i] + R"re(\s+)re" +
                             partials[i] + R"re(\s+1/3$)re");
        CHECK(std::regex_search(lines[i + 2], row));
    }
    CHECK(lines.back() == "limit: 1/3");

    const auto js = run_cli({"table", "--ratio", "1/4", "--first-term", "1/4", "--terms", "5", "--format", "json"});
    REQUIRE(js.status == 0);
    const auto doc = json::parse(js.out);
    CHECK(doc["limit"] == "1/3");
    CHECK(doc["rows"][4]["partial_sum"] == "341/1024");
    CHECK(doc["rows"][4]["agree"] == true);
    check_same_numbers(res.out, js.out);
}

TEST_CASE("verify staircase json")
{
    const auto res = run_cli({"verify", "--construction", "staircase", "--s", "1/2", "--layers", "8", "--format", "json"});
    REQUIRE(res.status == 0);
    const auto doc = json::parse(res.out);
    CHECK(doc["check"] == "pass");
    CHECK(doc["colored_fraction_formula"] == "1/(1+s)");
    CHECK(doc["expected_colored_fraction"] == "2/3");
    REQUIRE(doc["audit"]["layers"].size() == 8);
    for (const auto& layer : doc["audit"]["layers"])
        CHECK(layer["colored_fraction"] == "2/3");
    for (const auto& id : doc["identities"])
        CHECK(id["holds"] == true);
    check_same_numbers(run_cli({"verify", "--construction", "staircase", "--s", "1/2", "--layers", "8"}).out, res.out);
}

TEST_CASE("verify layered")
{
    for (const char* m : {"2", "3"}) {
        const auto res = run_cli({"verify", "--construction", "layered", "--m", m, "--layers", "6"});
        CHECK(res.status == 0);
        CHECK(res.out.find("check: pass") != std::string::npos);
        CHECK(res.out.find("square constraint: holds") != std::string::npos);
    }
    const auto js = run_cli({"verify", "--construction", "layered", "--m", "3", "--layers", "2", "--format", "json"});
    const auto doc = json::parse(js.out);
    CHECK(doc["expected_colored_fraction"] == "4/5");
    CHECK(doc["audit"]["layers"][0]["colored_area"] == "4/9");
    CHECK(doc["audit"]["layers"][1]["colored_area"] == "16/81");

    const auto bad = run_cli({"verify", "--construction", "layered", "--m", "4"});
    CHECK(bad.status == 2);
    CHECK(bad.err.find("only m=2 and m=3") != std::string::npos);

    const auto clamped = run_cli({"verify", "--construction", "layered", "--m", "4", "--allow-infeasible"});
    CHECK(clamped.status == 0);
    CHECK(clamped.err.find("warning") != std::string::npos);
    CHECK(clamped.out.find("square constraint: fails") != std::string::npos);
}

TEST_CASE("render writes SVG and scene; verify --from-scene matches")
{
    ScratchDir dir;
    const auto svg_path = dir.file("fig.svg");
    for (std::vector<std::string> construction :
         {std::vector<std::string>{"--construction", "layered", "--m", "3"},
          std::vector<std::string>{"--construction", "staircase", "--s", "2/3"}}) {
        std::vector<std::string> render{"render", "--layers", "5", "--out", svg_path, "--emit-scene"};
        render.insert(render.end(), construction.begin(), construction.end());
        const auto res = run_cli(render);
        REQUIRE(res.status == 0);
        CHECK(std::filesystem::exists(svg_path));
        REQUIRE(std::filesystem::exists(dir.file("fig.json")));

        for (const char* format : {"json", "table"}) {
            std::vector<std::string> direct{"verify", "--layers", "5", "--format", format};
            direct.insert(direct.end(), construction.begin(), construction.end());
            const auto a = run_cli(direct);
            const auto b = run_cli({"verify", "--from-scene", dir.file("fig.json"), "--format", format});
            CHECK(a.status == 0);
            CHECK(b.status == 0);
            CHECK(a.out == b.out);
        }
    }
}

TEST_CASE("render matches the golden files")
{
    ScratchDir dir;
    const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
        {"mabry_L4.svg", {"--construction", "layered", "--m", "2", "--layers", "4"}},
        {"edgar_L3.svg", {"--construction", "layered", "--m", "3", "--layers", "3"}},
        {"staircase_3_5_L3.svg", {"--construction", "staircase", "--s", "3/5", "--layers", "3"}},
    };
    for (const auto& [file, flags] : cases) {
        std::vector<std::string> args{"render", "--out", dir.file(file)};
        args.insert(args.end(), flags.begin(), flags.end());
        REQUIRE(run_cli(args).status == 0);
        CHECK(geoseries::golden::read_file(dir.file(file)) ==
              geoseries::golden::read_file(geoseries::golden::fixtures_dir() / file));
    }
}

TEST_CASE("render refuses infeasible layered parameters")
{
    ScratchDir dir;
    const auto res = run_cli({"render", "--construction", "layered", "--m", "4", "--out", dir.file("x.svg")});
    CHECK(res.status == 2);
    CHECK(res.err.find("feasible") != std::string::npos);
    CHECK_FALSE(std::filesystem::exists(dir.file("x.svg")));

    const auto forced = run_cli(
        {"render", "--construction", "layered", "--m", "4", "--out", dir.file("x.svg"), "--allow-infeasible"});
    CHECK(forced.status == 0);
    CHECK(forced.err.find("warning") != std::string::npos);
    CHECK(std::filesystem::exists(dir.file("x.svg")));
}

TEST_CASE("tampered scene is a verification mismatch")
{
    ScratchDir dir;
    REQUIRE(run_cli({"render", "--construction", "layered", "--m", "2", "--layers", "2", "--out", dir.file("s.svg"),
                     "--emit-scene"})
                .status == 0);
    json scene;
    {
        std::ifstream in(dir.file("s.json"));
        scene = json::parse(in);
    }
    scene["polygons"][1]["vertices"][0][1] = "1/10";
    {
        std::ofstream out(dir.file("s.json"));
        out << scene.dump();
    }
    const auto res = run_cli({"verify", "--from-scene", dir.file("s.json"), "--format", "json"});
    CHECK(res.status == 1);
    const auto diag = json::parse(res.err);
    CHECK(diag["error"] == "verification mismatch");
    CHECK_FALSE(diag["mismatches"].empty());
    CHECK(json::parse(res.out)["check"] == "fail");
}

TEST_CASE("usage errors exit with status 2")
{
    CHECK(run_cli({}).status == 2);
    CHECK(run_cli({"bogus"}).status == 2);
    CHECK(run_cli({"feasible", "--max-m", "1"}).status == 2);
    CHECK(run_cli({"feasible", "--wat"}).status == 2);
    CHECK(run_cli({"feasible", "--format", "xml"}).status == 2);
    CHECK(run_cli({"table", "--ratio", "1/0"}).status == 2);
    CHECK(run_cli({"table", "--ratio", "1/-4"}).status == 2);
    CHECK(run_cli({"table", "--ratio", "1"}).status == 2);
    CHECK(run_cli({"table", "--ratio", "1/2", "--first-term", "-1"}).status == 2);
    CHECK(run_cli({"table", "--ratio", "1/2", "--terms", "0"}).status == 2);
    CHECK(run_cli({"verify", "--construction", "staircase"}).status == 2);
    CHECK(run_cli({"verify", "--construction", "staircase", "--s", "3/2"}).status == 2);
    CHECK(run_cli({"verify", "--construction", "staircase", "--s", "x"}).status == 2);
    CHECK(run_cli({"verify", "--construction", "layered"}).status == 2);
    CHECK(run_cli({"verify", "--construction", "layered", "--m", "2", "--s", "1/2"}).status == 2);
    CHECK(run_cli({"verify", "--construction", "layered", "--m", "1"}).status == 2);
    CHECK(run_cli({"verify", "--construction", "layered", "--m", "2", "--layers", "0"}).status == 2);
    CHECK(run_cli({"verify"}).status == 2);
    CHECK(run_cli({"verify", "--from-scene", "/nonexistent/scene.json"}).status == 2);
    CHECK(run_cli({"render", "--construction", "layered", "--m", "2"}).status == 2);
    CHECK(run_cli({"render", "--construction", "layered", "--m", "2", "--out", "x.svg", "--decimals", "0"}).status == 2);

    const auto res = run_cli({"table", "--ratio", "1/0"});
    CHECK(res.err.find("malformed rational") != std::string::npos);
}

TEST_CASE("help exits cleanly")
{
    const auto res = run_cli({"--help"});
    CHECK(res.status == 0);
    CHECK(res.out.find("feasible") != std::string::npos);
}
