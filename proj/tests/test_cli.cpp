#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include <cychom/app.hpp>

using namespace cychom;
using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out, err;
  json doc; // filled only for machine format runs
};

RunResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = app::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  bool machine = false;
  for (const auto& a : args)
    if (a == "machine" || a == "json") machine = true;
  if (machine && r.code != 1) r.doc = json::parse(r.out);
  return r;
}

std::string fix(const std::string& name) {
  return std::string(CYCHOM_SOURCE_DIR) + "/fixtures/" + name;
}

std::string joined(const json& arr) {
  std::ostringstream s;
  for (size_t i = 0; i < arr.size(); ++i)
    s << (i ? ", " : "") << arr[i].get<long long>();
  return s.str();
}

// runs the same invocation in both formats and hands back (text, document)
std::pair<std::string, json> both(std::vector<std::string> args) {
  auto text = cli(args);
  REQUIRE(text.code == 0);
  args.push_back("--format");
  args.push_back("machine");
  auto machine = cli(args);
  REQUIRE(machine.code == 0);
  return {text.out, machine.doc};
}

} // namespace

TEST_CASE("the ground field's cyclic dimensions print as the period pattern") {
  auto r = cli({"hc", "--algebra", "Q", "--max-degree", "4"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("1, 0, 1, 0, 1") != std::string::npos);
  REQUIRE(r.err.empty());
}

TEST_CASE("machine documents carry a schema version and the command name") {
  auto r = cli({"hh", "--algebra", "dual_numbers", "--max-degree", "4",
                "--format", "machine"});
  REQUIRE(r.code == 0);
  REQUIRE(r.doc["schema_version"].get<int>() == app::kSchemaVersion);
  REQUIRE(r.doc["command"].get<std::string>() == "hh");
  REQUIRE(r.doc["dims"] == json::array({2, 1, 1, 1, 1}));
  REQUIRE(r.doc.contains("seed"));
  REQUIRE(r.doc.contains("threads"));
}

TEST_CASE("text and machine output carry identical numbers") {
  SECTION("dimension tables") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"hh", "--algebra", "qx3", "--max-degree", "3"},
             {"hc", "--algebra", "dual_numbers", "--max-degree", "4"},
             {"derham", "--algebra", "qx3", "--max-degree", "3"}}) {
      auto [text, doc] = both(args);
      REQUIRE(text.find(joined(doc["dims"])) != std::string::npos);
    }
  }
  SECTION("eigenspace pieces") {
    auto [text, doc] = both({"hodge-decomp", "--algebra", "qx3", "--degree",
                             "2", "--theory", "hh"});
    for (size_t i = 0; i < doc["piece_dims"].size(); ++i) {
      std::ostringstream line;
      line << "piece " << i << ": " << doc["piece_dims"][i].get<int>();
      REQUIRE(text.find(line.str()) != std::string::npos);
    }
    std::ostringstream sum;
    sum << "sum: " << doc["total"].get<int>();
    REQUIRE(text.find(sum.str()) != std::string::npos);
  }
  SECTION("relative splitting") {
    auto [text, doc] = both({"relative", "--base", "Q", "--artin",
                             "dual_numbers", "--degree", "2", "--theory",
                             "hc"});
    std::ostringstream line;
    line << "relative " << doc["relative_dim"].get<int>() << ", total "
         << doc["total_dim"].get<int>() << ", base "
         << doc["base_dim"].get<int>();
    REQUIRE(text.find(line.str()) != std::string::npos);
    REQUIRE(doc["split"].get<bool>());
  }
  SECTION("three-term splitting") {
    auto [text, doc] = both(
        {"goodwillie", "--base", "Q", "--artin", "qx3", "--degree", "1"});
    std::ostringstream line;
    line << doc["hc_below"].get<int>() << " -> " << doc["hh_top"].get<int>()
         << " -> " << doc["hc_top"].get<int>();
    REQUIRE(text.find(line.str()) != std::string::npos);
  }
  SECTION("chains against forms") {
    auto [text, doc] = both({"hkr", "--degree", "2", "--weight", "3"});
    std::ostringstream line;
    line << "chain side " << doc["chain_side"].get<int>() << ", form side "
         << doc["form_side"].get<int>();
    REQUIRE(text.find(line.str()) != std::string::npos);
    REQUIRE(doc["match"].get<bool>());
  }
  SECTION("filtration ladder") {
    auto [text, doc] = both({"filtration", "--base", "qx3", "--artin",
                             "dual_numbers", "--form-degree", "1"});
    REQUIRE(text.find(joined(doc["filtration_dims"])) != std::string::npos);
    REQUIRE(text.find(joined(doc["graded_piece_dims"])) != std::string::npos);
  }
  SECTION("node table of the connecting sequence") {
    auto [text, doc] = both(
        {"sbi", "--algebra", "dual_numbers", "--max-degree", "2"});
    for (const auto& n : doc["nodes"]) {
      std::ostringstream line;
      line << n["label"].get<std::string>() << ": dim " << n["dim"].get<int>()
           << ", in " << n["rank_in"].get<int>() << ", out "
           << n["rank_out"].get<int>();
      REQUIRE(text.find(line.str()) != std::string::npos);
    }
    REQUIRE(doc["exact"].get<bool>());
  }
  SECTION("deformation dimension") {
    auto [text, doc] = both({"chow", "--table", fix("surface_pg0.hodge"),
                             "--p", "2", "--dim-ma", "3", "--graded"});
    std::ostringstream line;
    line << "dimension: " << doc["dim_formal_chow"].get<long long>();
    REQUIRE(text.find(line.str()) != std::string::npos);
    REQUIRE(doc["dim_formal_chow"].get<long long>() == 3);
  }
}

TEST_CASE("builtin tables and table files give the same document") {
  auto a = cli({"chow", "--table", "projective_space(3)", "--p", "2",
                "--dim-ma", "1", "--graded", "--format", "machine"});
  auto b = cli({"chow", "--table", fix("p3.hodge"), "--p", "2", "--dim-ma",
                "1", "--graded", "--format", "machine"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  REQUIRE(a.doc["vanishing_entries"] == b.doc["vanishing_entries"]);
  REQUIRE(a.doc["dim_formal_chow"] == b.doc["dim_formal_chow"]);
  REQUIRE(a.doc["satisfied"] == b.doc["satisfied"]);
}

TEST_CASE("algebra files from disk match the builtin registry") {
  auto file = cli({"hh", "--algebra", fix("qxy_m3.alg"), "--max-degree", "1",
                   "--format", "machine"});
  auto name = cli({"hh", "--algebra", "qxy_m3", "--max-degree", "1",
                   "--format", "machine"});
  REQUIRE(file.code == 0);
  REQUIRE(file.doc["dims"] == name.doc["dims"]);
}

TEST_CASE("the function field ladder runs end to end") {
  auto r = cli({"filtration", "--base", fix("qt_scalar.alg"), "--artin",
                "qt_dual", "--form-degree", "1", "--format", "machine"});
  REQUIRE(r.code == 0);
  REQUIRE(r.doc["graded_piece_dims"] == json::array({0, 3}));
  REQUIRE(r.doc["match"].get<bool>());
}

TEST_CASE("a violated vanishing scan is an answer, not a failure") {
  auto r = cli({"chow", "--table", fix("quintic.hodge"), "--p", "2",
                "--dim-ma", "2", "--graded"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("violated") != std::string::npos);
  REQUIRE(r.out.find("not determined") != std::string::npos);
  auto m = cli({"chow", "--table", fix("quintic.hodge"), "--p", "2",
                "--dim-ma", "2", "--graded", "--format", "machine"});
  REQUIRE_FALSE(m.doc["satisfied"].get<bool>());
  REQUIRE_FALSE(m.doc.contains("dim_formal_chow"));
}

TEST_CASE("unusable requests exit with code one") {
  REQUIRE(cli({"hh", "--algebra", "no_such_algebra_anywhere"}).code == 1);
  REQUIRE(cli({"hodge-decomp", "--algebra", "qx3", "--degree", "-1"}).code == 1);
  REQUIRE(cli({"hh", "--algebra", "qt_dual"}).code == 1); // wrong ground field
  REQUIRE(cli({"chow", "--table", "weighted_flag", "--p", "2"}).code == 1);
  REQUIRE(cli({"hkr", "--degree", "1", "--weight", "5", "--truncation", "2"})
              .code == 1);
  REQUIRE(cli({"hh"}).code == 1);          // missing required option
  REQUIRE(cli({"frobnicate"}).code == 1);  // no such subcommand
  auto r = cli({"hh", "--algebra", "no_such_algebra_anywhere"});
  REQUIRE(r.err.find("input error") != std::string::npos);
}

TEST_CASE("help is not an error") {
  REQUIRE(cli({"--help"}).code == 0);
  auto r = cli({"hh", "--help"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("--algebra") != std::string::npos);
}

TEST_CASE("thread and seed flags are accepted and echoed") {
  auto r = cli({"hh", "--algebra", "dual_numbers", "--max-degree", "2",
                "--threads", "2", "--seed", "7", "--format", "machine"});
  REQUIRE(r.code == 0);
  REQUIRE(r.doc["threads"].get<int>() == 2);
  REQUIRE(r.doc["seed"].get<unsigned>() == 7);
  REQUIRE(r.doc["dims"] == json::array({2, 1, 1}));
  set_thread_count(1);
}
