#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "mints/json_io.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mints::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

// Temp directory with the fixture scheme files, created once per binary run.
const fs::path& fixture_dir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "mints_cli_fixtures";
    fs::create_directories(d);
    std::ofstream(d / "worked3.json")
        << "{\"mints\": 3, \"weighings\": [[0,1,2],[1,1,0]]}\n";
    std::ofstream(d / "collinear.json")
        << "{\"mints\": 3, \"weighings\": [[1,0,1],[0,1,1]]}\n";
    std::ofstream(d / "zero_column.json")
        << "{\"mints\": 2, \"weighings\": [[1,0],[1,0]]}\n";
    std::ofstream(d / "garbage.json") << "{not json\n";
    return d;
  }();
  return dir;
}

std::string fixture(const std::string& name) { return (fixture_dir() / name).string(); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify reports feasibility with exit 0") {
  const auto ok = run_cli({"verify", "--scheme", fixture("worked3.json")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"feasible\": true") != std::string::npos);

  const auto bad = run_cli({"verify", "--scheme", fixture("collinear.json")});
  CHECK(bad.code == 0);
  CHECK(bad.out.find("\"feasible\": false") != std::string::npos);
  CHECK(bad.out.find("\"witness\"") != std::string::npos);

  const auto human = run_cli({"verify", "--scheme", fixture("collinear.json"), "--format", "table"});
  CHECK(human.out == "feasible: no\nwitness: {1,2} vs {3}\n");
}

TEST_CASE("usage errors exit 2, domain errors exit 1") {
  CHECK(run_cli({"verify", "--scheme", fixture("missing.json")}).code == 2);
  CHECK(run_cli({"verify", "--scheme", fixture("garbage.json")}).code == 2);
  CHECK(run_cli({"nonsense"}).code == 2);
  CHECK(run_cli({"search"}).code == 2);  // --mints or --resume required
  CHECK(run_cli({"search", "--mints", "3", "--cost", "weird"}).code == 2);
  CHECK(run_cli({}).code == 2);

  // Structurally valid JSON with an invalid scheme is a domain error.
  CHECK(run_cli({"verify", "--scheme", fixture("zero_column.json")}).code == 1);
}

TEST_CASE("search emits a result document") {
  const auto r = run_cli({"search", "--mints", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"status\": \"optimal\"") != std::string::npos);
  CHECK(r.out.find("\"best_cost\": 4") != std::string::npos);
  CHECK(r.out.find("\"nodes\"") != std::string::npos);

  const auto human = run_cli({"search", "--mints", "3", "--format", "table"});
  CHECK(human.out.find("status: optimal\n") != std::string::npos);
  CHECK(human.out.find("best cost: 4\n") != std::string::npos);
}

TEST_CASE("schemes emitted by search round-trip into verify and decode") {
  const auto r = run_cli({"search", "--mints", "4"});
  REQUIRE(r.code == 0);
  // Extract the scheme object by re-parsing the whole document.
  const auto pos = r.out.find("\"scheme\": {");
  REQUIRE(pos != std::string::npos);
  int depth = 0;
  std::size_t start = r.out.find('{', pos), end = start;
  for (std::size_t i = start; i < r.out.size(); ++i) {
    if (r.out[i] == '{') ++depth;
    if (r.out[i] == '}' && --depth == 0) {
      end = i + 1;
      break;
    }
  }
  const std::string scheme_json = r.out.substr(start, end - start);
  const fs::path path = fixture_dir() / "search4.json";
  std::ofstream(path) << scheme_json;

  const auto v = run_cli({"verify", "--scheme", path.string()});
  CHECK(v.code == 0);
  CHECK(v.out.find("\"feasible\": true") != std::string::npos);

  const auto sim = run_cli({"simulate", "--scheme", path.string(), "--genuine-weight", "1",
                            "--epsilon", "1/2", "--fake", "1,3"});
  CHECK(sim.code == 0);
}

TEST_CASE("table output is stable across invocations") {
  const auto a = run_cli({"table", "--max-mints", "4"});
  const auto b = run_cli({"table", "--max-mints", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"costs\": [1,2,4,8]") != std::string::npos);

  const auto human = run_cli({"table", "--max-mints", "3", "--format", "table"});
  CHECK(human.out == "mints cost\n1 1\n2 2\n3 4\n");
}

TEST_CASE("capacity and bounds") {
  const auto cap = run_cli({"capacity", "--cap", "1"});
  CHECK(cap.code == 0);
  CHECK(cap.out.find("\"max_mints\": 2") != std::string::npos);
  CHECK(cap.out.find("\"proven\": true") != std::string::npos);

  const auto b = run_cli({"bounds", "--mints", "3"});
  CHECK(b.out.find("\"lower\": 3") != std::string::npos);
  CHECK(b.out.find("\"upper\": 9") != std::string::npos);

  const auto bw = run_cli({"bounds", "--mints", "3", "--capacity-witness", "2,3"});
  CHECK(bw.out.find("\"upper\": 6") != std::string::npos);
  CHECK(run_cli({"bounds", "--mints", "3", "--capacity-witness", "nope"}).code == 2);
}

TEST_CASE("simulate and decode round-trip through the wire format") {
  const auto sim = run_cli({"simulate", "--scheme", fixture("worked3.json"), "--genuine-weight",
                            "1", "--epsilon", "1/2", "--fake", "3"});
  CHECK(sim.code == 0);
  CHECK(sim.out.find("\"weighings\": [\n    \"4\",\n    \"2\"\n  ]") != std::string::npos);

  const auto dec = run_cli({"decode", "--scheme", fixture("worked3.json"), "--genuine-weight",
                            "1", "--observed", "4,2"});
  CHECK(dec.code == 0);
  CHECK(dec.out.find("\"outcome\": \"fake-set\"") != std::string::npos);
  CHECK(dec.out.find("\"fake_mints\": [\n    3\n  ]") != std::string::npos);

  const auto genuine = run_cli({"decode", "--scheme", fixture("worked3.json"), "--genuine-weight",
                                "1", "--observed", "3,2"});
  CHECK(genuine.code == 0);
  CHECK(genuine.out.find("\"outcome\": \"all-genuine\"") != std::string::npos);

  // Deviations that match no subset direction are a domain error.
  const auto bad = run_cli({"decode", "--scheme", fixture("worked3.json"), "--genuine-weight",
                            "1", "--observed", "4,7"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("\"outcome\": \"inconsistent\"") != std::string::npos);

  CHECK(run_cli({"decode", "--scheme", fixture("worked3.json"), "--genuine-weight", "1",
                 "--observed", "4"})
            .code == 2);
  CHECK(run_cli({"simulate", "--scheme", fixture("worked3.json"), "--genuine-weight", "1",
                 "--epsilon", "0", "--fake", "3"})
            .code == 2);
}

TEST_CASE("known-eps subcommands") {
  const auto v = run_cli({"known-eps", "verify", "--scheme", fixture("worked3.json")});
  CHECK(v.code == 0);
  CHECK(v.out.find("\"feasible\": true") != std::string::npos);

  const auto s = run_cli({"known-eps", "search", "--mints", "3", "--weighings", "2"});
  CHECK(s.code == 0);
  CHECK(s.out.find("\"best_cost\": 4") != std::string::npos);

  CHECK(run_cli({"known-eps"}).code == 2);
}

TEST_CASE("checkpoint round trip through the CLI") {
  const fs::path path = fixture_dir() / "cli_search.ckpt";
  const auto partial = run_cli({"search", "--mints", "5", "--node-limit", "300", "--checkpoint",
                                path.string()});
  CHECK(partial.code == 0);
  CHECK(partial.out.find("\"status\": \"best-so-far\"") != std::string::npos);
  REQUIRE(fs::exists(path));

  const auto resumed = run_cli({"search", "--resume", path.string()});
  CHECK(resumed.code == 0);
  CHECK(resumed.out.find("\"status\": \"optimal\"") != std::string::npos);
  CHECK(resumed.out.find("\"best_cost\": 15") != std::string::npos);

  CHECK(run_cli({"search", "--resume", path.string(), "--mints", "4"}).code == 2);
}

TEST_CASE("help is available") {
  const auto h = run_cli({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("verify") != std::string::npos);
  CHECK(h.out.find("decode") != std::string::npos);
}

}  // TEST_SUITE
