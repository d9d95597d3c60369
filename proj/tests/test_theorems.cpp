#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "doctest.h"
#include "localelab/io.hpp"
#include "localelab/theorems.hpp"

using namespace localelab;

namespace {

CorpusConfig tiny_config() {
  CorpusConfig cfg;
  cfg.max_poset = 2;
  cfg.max_points = 2;
  cfg.max_map_size = 4;
  return cfg;
}

}  // namespace

TEST_CASE("registry ids are unique and findable") {
  const auto& reg = check_registry();
  CHECK(reg.size() >= 50);
  std::set<std::string> ids;
  for (const auto& c : reg) {
    CHECK(ids.insert(c.id).second);
    CHECK(!c.anchor.empty());
    CHECK(!c.domain.empty());
    CHECK(find_check(c.id) == &c);
  }
  CHECK(find_check("no-such-check") == nullptr);
  try {
    (void)run_check("no-such-check");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_check);
  }
}

TEST_CASE("docs table and registry agree") {
  std::ifstream in(std::string(LOCALELAB_SOURCE_DIR) + "/docs/checks.md");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();

  std::set<std::string> documented;
  std::regex row("\\|\\s*`([a-z0-9-]+)`\\s*\\|");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), row); it != std::sregex_iterator();
       ++it)
    documented.insert((*it)[1]);

  std::set<std::string> registered;
  for (const auto& c : check_registry()) registered.insert(c.id);

  CHECK(documented == registered);
  CHECK(text.find("## Not checked at this scale") != std::string::npos);
}

TEST_CASE("single checks run and pass") {
  CorpusConfig cfg = tiny_config();
  cfg.max_poset = 3;
  auto r = run_check("prop-mndcmnd", cfg);
  CHECK(r.passed());
  CHECK(r.hypothesis_satisfied > 0);
  CHECK(r.instances >= r.hypothesis_satisfied);

  auto r3 = run_check("ex-three-chain", tiny_config());
  CHECK(r3.passed());
}

TEST_CASE("run_all at tiny caps") {
  auto reports = run_all(tiny_config());
  CHECK(reports.size() == check_registry().size());
  for (const auto& r : reports) {
    CAPTURE(r.id);
    CHECK(r.passed());
    CHECK(r.hypothesis_satisfied <= r.instances);
  }
  // sorted by id
  for (std::size_t i = 1; i < reports.size(); ++i) CHECK(reports[i - 1].id < reports[i].id);
}

TEST_CASE("reports are deterministic across runs") {
  CorpusConfig cfg = tiny_config();
  auto a = run_check("prop-inacccharact", cfg);
  auto b = run_check("prop-inacccharact", cfg);
  CHECK(a.instances == b.instances);
  CHECK(a.hypothesis_satisfied == b.hypothesis_satisfied);
  CHECK(a.failures == b.failures);
}

TEST_CASE("parallel and serial runs merge to the same reports") {
  CorpusConfig serial = tiny_config();
  CorpusConfig parallel = tiny_config();
  parallel.jobs = 4;
  auto a = run_all(serial);
  auto b = run_all(parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i].elapsed_ms = b[i].elapsed_ms = 0;
    CAPTURE(a[i].id);
    CHECK(a[i] == b[i]);
  }
}

TEST_CASE("vacuous hypothesis classes are visible") {
  CorpusConfig cfg = tiny_config();
  cfg.frames_override = {chain_frame(2)};
  auto r = run_check("prop-hmndcharac", cfg);
  CHECK(r.passed());
  CHECK(r.hypothesis_satisfied == 0);  // the two-element frame has no dense x != 1
}

TEST_CASE("json report round-trip") {
  CorpusConfig cfg = tiny_config();
  std::vector<CheckReport> reports = {run_check("ex-three-chain", cfg),
                                      run_check("thm-thmmnd", cfg)};
  reports[0].failures.push_back({"synthetic instance", "synthetic witness"});
  auto text = reports_to_json(reports);
  auto back = reports_from_json(text);
  REQUIRE(back.size() == reports.size());
  CHECK(back[0] == reports[0]);
  CHECK(back[1] == reports[1]);
  CHECK(report_from_json(report_to_json(reports[0])) == reports[0]);
}

TEST_CASE("mutation sanity: a corrupted heyting entry is caught") {
  CorpusConfig cfg = tiny_config();
  cfg.frames_override = {chain_frame(4)->with_corrupted_heyting(1, 0, 2)};  // a -> 0 := b
  Corpus corpus = Corpus::build(cfg);
  std::int64_t failures = 0;
  std::string first;
  for (const auto& chk : check_registry()) {
    auto r = run_check_on(chk, corpus);
    if (!r.passed()) {
      failures += static_cast<std::int64_t>(r.failures.size());
      if (first.empty())
        first = r.id + ": " + r.failures[0].instance + " / " + r.failures[0].witness;
      CHECK(!r.failures[0].instance.empty());
      CHECK(!r.failures[0].witness.empty());
    }
  }
  CAPTURE(first);
  CHECK(failures > 0);
}

TEST_CASE("io parse errors carry context") {
  try {
    (void)parse_frame_text("{\"elements\": [\"a\"]}", "doc.json");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("doc.json") != std::string::npos);
  }
  try {
    (void)parse_frame_text("{\"elements\": [\"a\",\"b\"], \"leq\": [[0,5]]}", "doc.json");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("out of range") != std::string::npos);
  }
  try {
    (void)parse_space_text("{\"points\": 2, \"opens\": [[0]]}", "sp.json");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_topology);
  }
}

TEST_CASE("frame documents round-trip through the text format") {
  auto f = chain_frame(4);
  auto g = parse_frame_text(frame_to_json(*f));
  CHECK(g->size() == f->size());
  CHECK(frames_isomorphic(*f, *g));
  // covers are enough; the closure is taken
  auto h = parse_frame_text("{\"elements\": [\"0\",\"a\",\"1\"], \"leq\": [[0,1],[1,2]]}");
  CHECK(frames_isomorphic(*h, *chain_frame(3)));
}
