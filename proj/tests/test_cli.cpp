#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhyper/blocks.hpp"
#include "qhyper/suites.hpp"

using namespace qhyper;

namespace {

CheckReport make(std::string suite, std::string id, Status s) {
  CheckReport r;
  r.suite = std::move(suite);
  r.id = std::move(id);
  r.ell = 3;
  r.status = s;
  r.details = {{"dim", 4}};
  if (s == Status::fail) r.witness = {{"vector", {{0, "1"}}}};
  return r;
}

}  // namespace

TEST_CASE("rendering") {
  std::vector<CheckReport> none;
  CHECK(render_json(none) == "[]\n");
  const std::string table = render_text(none);
  CHECK(table.find("status") != std::string::npos);
  CHECK(std::count(table.begin(), table.end(), '\n') == 1);
  CHECK(exit_status(none) == 0);

  std::vector<CheckReport> rs{make("ideals", "b", Status::pass), make("arith", "z", Status::inconclusive),
                              make("ideals", "a", Status::fail), make("arith", "c", Status::pass)};
  sort_reports(rs);
  CHECK(rs[0].id == "c");
  CHECK(rs[1].id == "z");
  CHECK(rs[2].id == "a");
  CHECK(rs[3].id == "b");
  CHECK(exit_status(rs) == 1);
  const nlohmann::json j = to_json(rs);
  REQUIRE(j.is_array());
  CHECK(j[2]["status"] == "fail");
  CHECK_FALSE(j[2]["witness"].is_null());
  // text and JSON carry the same data
  const std::string text = render_text(rs);
  for (const auto& r : rs) {
    CHECK(text.find(r.id) != std::string::npos);
    CHECK(report_from_json(to_json(r)).details == r.details);
  }
  CHECK(text.find("witness=") != std::string::npos);
  CHECK(exit_status({make("arith", "x", Status::inconclusive)}) == 0);
}

TEST_CASE("configuration errors") {
  RunConfig cfg;
  cfg.ell = 4;
  CHECK_THROWS_AS(run(cfg), ConfigError);
  cfg.ell = 1;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.ell = 3;
  cfg.suites = {"nonsense"};
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.suites = {};
  cfg.weight_bound = 0;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.weight_bound.reset();
  cfg.window = 0;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
}

TEST_CASE("suite runs") {
  RunConfig cfg;
  cfg.ell = 3;
  cfg.suites = {"algebra", "arith", "torus"};
  const auto a = run(cfg);
  REQUIRE_FALSE(a.empty());
  CHECK(a.front().suite == "arith");
  CHECK(a.back().suite == "torus");
  for (const auto& r : a) CHECK(r.status == Status::pass);
  // deterministic given the seed, and the seed is recorded
  CHECK(render_json(run(cfg)) == render_json(a));
  bool seeded = false;
  for (const auto& r : a)
    if (r.details.contains("seed") && r.details["seed"] == 1) seeded = true;
  CHECK(seeded);
  cfg.seed = 7;
  for (const auto& r : run(cfg))
    if (r.details.contains("seed")) CHECK(r.details["seed"] != 1);

  RunConfig b;
  b.ell = 5;
  b.suites = {"blocks"};
  int per_block = 0;
  for (const auto& r : run(b)) {
    CHECK(r.status == Status::pass);
    if (r.id.rfind("block.", 0) == 0) ++per_block;
  }
  CHECK(per_block == static_cast<int>(block_labels(5).size()));

  // every suite emits at least one report
  RunConfig all;
  all.ell = 3;
  all.suites = {"frobenius", "modules", "center"};
  const auto rs = run(all);
  for (const std::string s : {"frobenius", "modules", "center"})
    CHECK(std::any_of(rs.begin(), rs.end(), [&](const CheckReport& r) { return r.suite == s; }));
}
