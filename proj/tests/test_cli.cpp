#include "doctest.h"
#include "config.hpp"
#include "report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace liespec;
using namespace liespec::cli;

namespace {

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kConfigs = LIESPEC_CONFIG_DIR;

}  // namespace

TEST_CASE("every shipped config parses and round-trips") {
  int n = 0;
  for (const auto& e : std::filesystem::directory_iterator(kConfigs)) {
    if (e.path().extension() != ".toml") continue;
    CAPTURE(e.path().string());
    auto cfg = load_space_config(e.path().string());
    auto again = parse_space_config(cfg.to_toml());
    CHECK(again.to_toml() == cfg.to_toml());
    auto a = cfg.space(), b = again.space();
    CHECK(a.integral_lattice() == b.integral_lattice());
    CHECK(cfg.metric().scales == again.metric().scales);
    ++n;
  }
  CHECK(n >= 10);
}

TEST_CASE("su2xso3 config builds the example space") {
  auto cfg = load_space_config(kConfigs + "/su2xso3.toml");
  auto sp = cfg.space();
  auto mt = cfg.metric();
  CHECK(sp.factors.size() == 2);
  CHECK(mt.scales == std::vector<Q>{Q(1, 4), Q(1)});
  auto rep = symspec::enumerate_spectrum(sp, mt, Q(5, 2));
  CHECK(rep.classes[Q(5, 2)].size() == 2);
}

TEST_CASE("config errors are line anchored") {
  try {
    parse_space_config("[[factor]]\ntype = \"A\"\nrank = 1\nscale = 0.5\n");
    FAIL("float accepted");
  } catch (const ConfigError& e) {
    CHECK(e.line == 4);
  }
  try {
    parse_space_config("[[factor]]\ntype = \"A\"\nrank = 1\ncolour = \"red\"\n");
    FAIL("unknown key accepted");
  } catch (const ConfigError& e) {
    CHECK(e.line == 4);
  }
  CHECK_THROWS_AS(parse_space_config("[[factor]]\ntype = \"Q\"\nrank = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_space_config("[[factor]]\ntype = \"A\"\n"), ConfigError);
  CHECK_THROWS_AS(parse_space_config("[[factor\n"), ConfigError);
  auto g2 = parse_space_config("[[factor]]\ntype = \"G2\"\n");
  CHECK(g2.factors[0].rank == 2);
}

TEST_CASE("exact serialization") {
  CHECK(exact(Q(3, 2)).get<std::string>() == "3/2");
  auto s = exact(Surd(1, 2, 3));
  CHECK(s["q"] == "1");
  CHECK(s["r"] == "2");
  CHECK(s["d"] == 3);
  CHECK(rendering(1.0 / 3).dump() == "0.333333333333");
  auto env = envelope("x", Json::object(), Json{{"a", 1}});
  std::vector<std::string> keys;
  for (auto it = env.begin(); it != env.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"tool", "version", "command", "input", "result", "notes"});
  CHECK(to_csv(envelope("x", Json::object(), Json{{"table", Json::array({Json{{"r", "1"}, {"n", 2}}})}})) ==
        "r,n\n1,2\n");
}
