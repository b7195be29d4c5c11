#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "common.hpp"
#include "toric/io.hpp"

using namespace toric;
using namespace toric::io;

namespace {

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json run(const std::string& command, const std::string& payload)
{
    return execute(command, Json::parse(payload));
}

std::string schema_pointer(const std::string& command, const std::string& payload)
{
    try {
        run(command, payload);
    } catch (const SchemaError& e) {
        return e.pointer();
    }
    return "<none>";
}

struct Process
{
    int status;
    std::string out;
};

Process kernel(const std::string& args, const std::string& input)
{
    static int calls = 0;
    std::filesystem::path tmp = std::filesystem::temp_directory_path() /
                                ("toric_cli_" + std::to_string(getpid()) + "_" + std::to_string(calls++) + ".json");
    std::ofstream(tmp) << input;
    std::string cmd = std::string(TORIC_KERNEL) + " " + args + " < " + tmp.string();
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        out.append(buf, n);
    int st = pclose(p);
    std::filesystem::remove(tmp);
    return {WEXITSTATUS(st), out};
}

} // namespace

TEST(Encoding, Integers)
{
    EXPECT_EQ(to_json(Integer(-7)), Json(-7));
    Integer big = Integer(1) << 60;
    EXPECT_EQ(to_json(big), Json("1152921504606846976"));
    EXPECT_EQ(to_json(Integer((1LL << 53) - 1)), Json((1LL << 53) - 1));
}

TEST(Encoding, Rationals)
{
    EXPECT_EQ(to_json(Rational(5, 2)), Json("5/2"));
    EXPECT_EQ(to_json(Rational(-1, 3)), Json("-1/3"));
    EXPECT_EQ(to_json(Rational(1)), Json("1"));
}

TEST(Encoding, Structures)
{
    EXPECT_EQ(columns_to_json(columns({{1, 0}, {-1, 2}})), Json::parse("[[1,0],[-1,2]]"));
    AbelianGroup g{2, {Integer(2)}};
    EXPECT_EQ(to_json(g)["text"], "Z^2 + Z/2");
    Fan f = *toric::testing::fan_p2();
    EXPECT_EQ(to_json(f)["max_cones"], Json::parse("[[1,2],[1,3],[2,3]]"));
}

TEST(Commands, Listed)
{
    const auto& c = commands();
    EXPECT_EQ(c.size(), 47u);
    EXPECT_NE(std::find(c.begin(), c.end(), "count bkk"), c.end());
    EXPECT_NE(std::find(c.begin(), c.end(), "cone hilbert-basis"), c.end());
}

TEST(Commands, HilbertBasisOfDual)
{
    Json out = run("cone hilbert-basis", R"({"rays":[[0,1],[1,2],[2,1]],"dual":true})");
    EXPECT_EQ(out["elements"], Json::parse("[[1,0],[-1,2],[0,1]]"));
}

TEST(Commands, Ehrhart)
{
    Json out = run("polytope ehrhart", R"({"points":[[0,0],[1,0],[0,1],[2,1],[1,2]]})");
    EXPECT_EQ(out["coeffs"], Json::parse(R"(["1","5/2","5/2"])"));
}

TEST(Commands, Bkk)
{
    Json out = run("count bkk", R"({"equations":[
        {"terms":[{"exp":[0,0]},{"exp":[1,0]},{"exp":[0,1]},{"exp":[1,1]},{"exp":[2,1]},{"exp":[3,1]}]},
        {"terms":[{"exp":[0,0]},{"exp":[0,1]},{"exp":[1,1]},{"exp":[2,1]}]}]})");
    EXPECT_EQ(out["bkk"], 3);
}

TEST(Commands, DivisorQueries)
{
    const std::string fan = R"("fan":{"rays":[[1,2],[1,0],[-3,-2],[0,1]],"max_cones":[[1,2],[2,3],[3,4],[1,4]]})";
    EXPECT_EQ(run("divisor min-cartier-multiple", "{" + fan + R"(,"divisor":[0,0,1,0]})")["multiple"], 6);
    Json c = run("divisor is-cartier", "{" + fan + R"(,"divisor":[0,0,1,0]})");
    EXPECT_EQ(c["cartier"], false);
    EXPECT_EQ(run("divisor class-group", "{" + fan + "}")["group"]["text"], "Z^2");
}

TEST(Commands, ToricIdeal)
{
    Json out = run("ideal toric", R"({"matrix":[[1,-1,0],[0,2,1]]})");
    EXPECT_EQ(out["count"], 1);
    EXPECT_EQ(out["generators"][0], "x1*x2 - x3^2");
}

TEST(Errors, SchemaPointers)
{
    EXPECT_EQ(schema_pointer("polytope volume", R"({"point":[[0,0]]})"), "/points");
    EXPECT_EQ(schema_pointer("polytope volume", R"({"points":[[0,0],[1,"a"]]})"), "/points/1/1");
    EXPECT_EQ(schema_pointer("fan is-smooth", R"({"rays":[[1,0]],"max_cones":[[0]]})"), "/max_cones/0/0");
    EXPECT_EQ(schema_pointer("nope nope", "{}"), "/");
}

TEST(Errors, RequestEnvelope)
{
    EXPECT_THROW(execute_request(Json::parse(R"({"schema":2,"command":"count bezout","payload":{"degrees":[2]}})")),
                 SchemaError);
    Json ok = execute_request(Json::parse(R"({"schema":1,"command":"count bezout","payload":{"degrees":[2,3]}})"));
    EXPECT_EQ(ok["bezout"], 6);
    EXPECT_EQ(ok["schema"], 1);
}

TEST(Errors, DomainFailure)
{
    EXPECT_THROW(run("fan normal-fan", R"({"points":[[0,0],[1,0]]})"), DomainError);
}

TEST(Process, ExitCodes)
{
    Process ok = kernel("polytope ehrhart", R"({"points":[[0,0],[1,0],[0,1],[2,1],[1,2]]})");
    EXPECT_EQ(ok.status, 0);
    EXPECT_EQ(Json::parse(ok.out)["text"], "5/2*x^2 + 5/2*x + 1");
    Process domain = kernel("fan normal-fan", R"({"points":[[0,0],[1,0]]})");
    EXPECT_EQ(domain.status, 1);
    EXPECT_EQ(Json::parse(domain.out)["error"]["kind"], "domain");
    Process schema = kernel("polytope volume", R"({"point":[]})");
    EXPECT_EQ(schema.status, 2);
    EXPECT_EQ(Json::parse(schema.out)["error"]["pointer"], "/points");
    EXPECT_EQ(kernel("cone frobnicate", "{}").status, 2);
    EXPECT_EQ(kernel("cone dual", "{oops").status, 2);
}

TEST(Process, PrettyOutputParsesTheSame)
{
    const std::string in = R"({"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[1,2],[1,3],[2,3]]})";
    Process a = kernel("fan orbits", in), b = kernel("fan orbits --pretty", in);
    EXPECT_EQ(Json::parse(a.out), Json::parse(b.out));
    EXPECT_NE(a.out, b.out);
}

TEST(Fixtures, GoldenOutputs)
{
    std::filesystem::path dir(TORIC_FIXTURE_DIR);
    int seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".json")
            continue;
        Json request = Json::parse(slurp(entry.path()));
        Json out = execute_request(request);
        std::string golden = slurp(dir / "golden" / entry.path().filename());
        EXPECT_EQ(out.dump() + "\n", golden) << entry.path().filename();
        // outputs re-parse and are stable across runs
        EXPECT_EQ(Json::parse(out.dump()), out);
        EXPECT_EQ(execute_request(request), out);
        ++seen;
    }
    EXPECT_GE(seen, 27);
}
