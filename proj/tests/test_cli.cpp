#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = qs::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

std::string error_code(const Result& r) { return parse(r.err)["error"].get<std::string>(); }

}  // namespace

TEST_CASE("positive-subexpr golden output") {
    Result r = call({"positive-subexpr", "--side", "right", "--word", "1,2,1", "--u", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\n  \"D\": [\n    3\n  ],\n  \"product_ok\": true\n}\n");
    Result l = call({"positive-subexpr", "--side", "left", "--word", "1,2,1", "--u", "1"});
    CHECK(parse(l.out)["D"] == nlohmann::json::array({1}));
}

TEST_CASE("cartan sources") {
    Result r = call({"--cartan", "{\"gcm\":[[2,-1],[-3,2]]}", "cartan"});
    CHECK(r.code == 0);
    CHECK(parse(r.out)["d"] == nlohmann::json::array({3, 1}));
    CHECK(parse(call({"--cartan", "{\"type\":\"B\",\"rank\":3}", "cartan"}).out)["rank"] == 3);
    CHECK(parse(call({"--cartan", "G2", "cartan"}).out)["gcm"] == parse(call({"--cartan", "{\"type\":\"G\",\"rank\":2}", "cartan"}).out)["gcm"]);

    auto path = std::filesystem::temp_directory_path() / "qschubert_cli_cartan.json";
    std::ofstream(path) << "{\"gcm\": [[2, -2], [-1, 2]]}";
    CHECK(parse(call({"--cartan", path.string(), "cartan"}).out)["d"] == nlohmann::json::array({1, 2}));
    std::filesystem::remove(path);
}

TEST_CASE("input errors exit with 2") {
    Result bad = call({"--cartan", "{\"gcm\":[[2,-1,-1],[-2,2,-1],[-1,-1,2]]}", "cartan"});
    CHECK(bad.code == 2);
    CHECK(error_code(bad) == "NotSymmetrizable");
    CHECK(bad.out.empty());
    CHECK(error_code(call({"--cartan", "{\"gcm\":[[2,-1],", "cartan"})) == "SchemaError");
    CHECK(error_code(call({"--cartan", "{\"rank\":2}", "cartan"})) == "SchemaError");
    CHECK(call({"positive-subexpr", "--word", "1,2", "--u", "2,1"}).code == 2);
    CHECK(error_code(call({"positive-subexpr", "--word", "1,2", "--u", "2,1"})) == "NotBelow");
    CHECK(error_code(call({"word", "--word", "1,x"})) == "SchemaError");
    CHECK(error_code(call({"verify", "--suite", "nope"})) == "UnknownSuite");
    CHECK(call({"frobnicate"}).code == 2);
}

TEST_CASE("verify reports") {
    Result empty = call({"verify", "--suite", ""});
    CHECK(empty.code == 0);
    CHECK(parse(empty.out)["suites"].empty());

    Result ids = call({"--cartan", "A2", "verify", "--suite", "identities", "--max-length", "6"});
    CHECK(ids.code == 0);
    auto j = parse(ids.out);
    CHECK(j["passed"] == true);
    CHECK(j["suites"]["deg-identities"]["failures"] == 0);
    CHECK(j["suites"]["deg-identities"]["instances"].get<long>() > 0);
    CHECK_FALSE(j["suites"]["deg-identities"].contains("seconds"));

    Result qm = call({"verify", "--suite", "qmatrix"});
    CHECK(qm.code == 0);
    CHECK(parse(qm.out)["suites"]["qmatrix"]["failures"] == 0);
}

TEST_CASE("reruns are byte-identical and independent of the thread count") {
    std::vector<std::string> args{"verify", "--suite", "subexpr-oracle,twist,frames", "--max-length", "4"};
    Result a = call(args);
    Result b = call(args);
    std::vector<std::string> par{"--jobs", "4"};
    par.insert(par.end(), args.begin(), args.end());
    Result c = call(par);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);

    std::vector<std::string> f{"--cartan", "A3", "frame", "--word", "1,2,3,1,2,1", "--u", "2,1", "--all"};
    CHECK(call(f).out == call(f).out);
}

TEST_CASE("out flag") {
    auto path = std::filesystem::temp_directory_path() / "qschubert_cli_out.json";
    Result r = call({"--out", path.string(), "xi-enumerate", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == call({"xi-enumerate", "--n", "4"}).out);
    CHECK(parse(ss.str())["count"] == 8);
    std::filesystem::remove(path);
}

TEST_CASE("frame bundle") {
    auto j = parse(call({"frame", "--word", "1,2,1", "--u", "1", "--all"}).out);
    CHECK(j["count"] == 4);
    CHECK(j["frames"].size() == 4);
    for (const auto& f : parse(call({"frame", "--word", "1,2,1", "--u", "e", "--all"}).out)["frames"])
        CHECK(f["generators"].size() == 3);
    for (const auto& f : parse(call({"frame", "--word", "1,2,1", "--u", "1,2,1", "--all"}).out)["frames"])
        CHECK(f["generators"].empty());
    auto single = parse(call({"frame", "--word", "1,2,1", "--u", "1", "--pi", "2,3,1"}).out);
    CHECK(single["pi"] == nlohmann::json::array({2, 3, 1}));
    CHECK(single.contains("D_pi"));
    CHECK(single.contains("u_sequence"));
    CHECK(single.contains("bicharacter"));
    CHECK(error_code(call({"frame", "--word", "1,2,1", "--u", "1", "--pi", "1,3,2"})) == "NotInXi");

    // the longest element of A5 has length 15
    std::string w0 = "1,2,1,3,2,1,4,3,2,1,5,4,3,2,1";
    Result big = call({"--cartan", "A5", "frame", "--word", w0, "--u", "e", "--all"});
    CHECK(big.code == 2);
    CHECK(error_code(big) == "BoundExceeded");
    CHECK(call({"--cartan", "A5", "frame", "--word", w0, "--u", "e"}).code == 0);
}

TEST_CASE("other commands") {
    auto w = parse(call({"word", "--word", "1,2,1"}).out);
    CHECK(w["reduced"] == true);
    CHECK(w["roots"] == nlohmann::json::parse("[[1,0],[1,1],[0,1]]"));
    CHECK(parse(call({"word", "--word", "1,1"}).out)["reduced"] == false);
    auto b = parse(call({"bruhat", "--u", "1,2", "--w", "2,1"}).out);
    CHECK(b["leq"] == false);
    CHECK(b["geq"] == false);
    auto a = parse(call({"exponent-matrix", "--which", "a", "--word", "1,2,1", "--u", "1"}).out);
    CHECK(a["entries"] == nlohmann::json::parse("[[1,0,-1],[0,1,1]]"));
    CHECK(a["positive"] == nlohmann::json::array({3}));
    auto bm = parse(call({"exponent-matrix", "--which", "b", "--word", "1,2,1", "--u", "1"}).out);
    CHECK(bm["positive"] == nlohmann::json::array({1}));
    Result t = call({"--cartan", "B2", "twist-check", "--word", "1,2,1,2", "--u", "2"});
    CHECK(t.code == 0);
    CHECK(parse(t.out)["matrix_correspondence"] == true);
    Result q = call({"qmatrix", "verify", "--m", "2", "--n", "2", "--all-u"});
    CHECK(q.code == 0);
    CHECK(parse(q.out)["results"].size() == 14);
    Result q1 = call({"qmatrix", "verify", "--m", "2", "--n", "2", "--u", "1,2"});
    CHECK(q1.code == 0);
    CHECK(parse(q1.out)["pass"] == true);
}

TEST_CASE("job files") {
    auto path = std::filesystem::temp_directory_path() / "qschubert_job.json";
    std::ofstream(path) << R"({"command": "positive-subexpr", "cartan": {"type": "A", "rank": 2},
                               "params": {"side": "right", "word": [1, 2, 1], "u": [1]}})";
    Result r = call({"run", "--job", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out == call({"positive-subexpr", "--side", "right", "--word", "1,2,1", "--u", "1"}).out);
    std::ofstream(path) << R"({"command": "cartan", "colour": 1})";
    CHECK(error_code(call({"run", "--job", path.string()})) == "SchemaError");
    std::filesystem::remove(path);
}
