// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <iostream>
#include <set>
#include <vector>

#include "localelab/io.hpp"
#include "localelab/theorems.hpp"

using namespace localelab;

namespace {

struct Criterion {
  int number;
  std::string title;
  bool ok = true;
  std::vector<std::string> notes;
  double seconds = 0.0;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

CheckReport run_on(const Corpus& corpus, const std::string& id) {
  const TheoremCheck* chk = find_check(id);
  if (!chk) fail(Errc::unknown_check, id);
  return run_check_on(*chk, corpus);
}

CheckReport expect_pass(Criterion& c, const Corpus& corpus, const std::string& id,
                        bool require_hypothesis = true) {
  CheckReport r = run_on(corpus, id);
  if (!r.passed()) {
    c.ok = false;
    std::string note = id + ": " + std::to_string(r.failures.size()) + " counterexample(s), first at " +
                       r.failures[0].instance + " [" + r.failures[0].witness + "]";
    c.notes.push_back(note);
  }
  if (require_hypothesis && r.hypothesis_satisfied == 0)
    c.require(false, id + ": hypothesis class empty at default caps");
  return r;
}

void report(const Criterion& c) {
  std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title << " ("
            << c.seconds << " s)\n";
  for (const auto& n : c.notes) std::cout << "        " << n << "\n";
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  CorpusConfig cfg;  // defaults: posets <= 4, spaces <= 4 points, maps <= 6 elements

  // ---------------------------------------------------------------- 1
  {
    Criterion c{1, "three-chain ground truth (exact, < 1 s)"};
    Timer t;
    auto f = chain_frame(3);
    Universe u = Universe::build(f, 16);
    const Elem a = 1;
    c.require(u.count() == 4, "S(3) must have exactly 4 sublocales");
    int closed_nwd_nonvoid = 0;
    bool that_one_is_ca = false;
    for (int i = 0; i < u.count(); ++i) {
      const SubInfo& si = u.info_at(i);
      if (si.closed && si.nwd && !si.is_void) {
        ++closed_nwd_nonvoid;
        that_one_is_ca = si.members == f->upset(a);
      }
    }
    c.require(closed_nwd_nonvoid == 1 && that_one_is_ca,
              "c(a) must be the unique non-void closed nowhere dense sublocale");
    c.require(is_maximal_nwd(closed_sublocale(f, a)).value, "c(a) must be maximal nowhere dense");
    c.require(booleanization(f).members() == (elem_bit(0) | elem_bit(2)), "B(3) must be {0,1}");
    c.require(supplement(booleanization(f)).members() == f->upset(a),
              "supplement(B3) must be c(a)");
    c.seconds = t.seconds();
    c.require(c.seconds < 1.0, "budget exceeded");
    results.push_back(c);
    report(c);
  }

  // ---------------------------------------------------------------- 2
  {
    Criterion c{2, "boolean frames 2^k, k <= 3 (exact, < 1 s)"};
    Timer t;
    for (int k = 0; k <= 3; ++k) {
      auto f = boolean_frame(k);
      Universe u = Universe::build(f, 16);
      for (int i = 0; i < u.count(); ++i) {
        const SubInfo& si = u.info_at(i);
        c.require(!(si.nwd && !si.is_void), "2^" + std::to_string(k) + ": non-void nwd sublocale");
        c.require(!si.mnd, "2^" + std::to_string(k) + ": m.n.d sublocale");
        c.require(si.remote && si.remote_def, "2^" + std::to_string(k) + ": non-remote sublocale");
      }
      c.require(f->booleanization_mask() == f->full(), "BL must be all of 2^" + std::to_string(k));
    }
    c.seconds = t.seconds();
    c.require(c.seconds < 1.0, "budget exceeded");
    results.push_back(c);
    report(c);
  }

  Timer corpus_timer;
  Corpus corpus = Corpus::build(cfg);
  const double corpus_seconds = corpus_timer.seconds();
  std::cout << "corpus: " << corpus.frames.size() << " frames, " << corpus.spaces.size()
            << " spaces, " << corpus.maps.size() << " localic maps ("
            << corpus_seconds << " s to build)\n";

  // ---------------------------------------------------------------- 3
  {
    Criterion c{3, "equivalence suites over posets <= 4 (< 5 min)"};
    Timer t;
    c.require(corpus.frames.size() >= 16, "need at least 16 non-isomorphic frames");
    std::int64_t suite_instances = 0;
    for (const char* id :
         {"prop-mndcmnd", "prop-hmndcharac", "prop-inacccharact", "prop-complementedremote",
          "thm-thmmnd"})
      suite_instances += expect_pass(c, corpus, id).instances;
    c.require(suite_instances >= 1000, "the suites must quantify over thousands of instances");
    c.seconds = t.seconds() + corpus_seconds;
    c.require(c.seconds < 300.0, "budget exceeded");
    results.push_back(c);
    report(c);
  }

  // ---------------------------------------------------------------- 4
  {
    Criterion c{4, "implication suites, non-vacuous hypotheses"};
    Timer t;
    for (const char* id :
         {"prop-smndandmnd", "prop-mndprop-1", "obs-mnd-join", "prop-mndprop-2",
          "prop-almostinaccesprop", "thm-maximal", "prop-hmndclopen", "prop-hmnd-heredity",
          "prop-hmnd-regularclosed", "prop-inaccrem", "prop-inaccessibilityandremoteness",
          "prop-almostinaccesprop1", "prop-remoteandmaximal", "prop-strongly-mnd",
          "ex-mndexample", "lemma-mndcmndlemma", "obs-ndsubspace", "obs-regularclosed",
          "obs-obsinacc", "lemma-complalmost", "cor-mndcmnd-closed", "obs-remote-vs-inacc",
          "ex-three-chain"})
      expect_pass(c, corpus, id);
    c.seconds = t.seconds();
    results.push_back(c);
    report(c);
  }

  // ---------------------------------------------------------------- 5
  {
    Criterion c{5, "conservativity over T0 spaces <= 4 points (< 2 min)"};
    Timer t;
    for (const char* id :
         {"lemma-binaryintersection", "lemma-n1", "lemma-lembinaryintersection", "lemma-knd",
          "cor-regularclosedf", "prop-mnd", "prop-hmnd-conservative", "id-induced-supplement"})
      expect_pass(c, corpus, id);
    c.seconds = t.seconds();
    c.require(c.seconds < 120.0, "budget exceeded");
    results.push_back(c);
    report(c);
  }

  // ---------------------------------------------------------------- 6
  {
    Criterion c{6, "map suites over frames <= 6 elements"};
    Timer t;
    for (const char* id :
         {"prop-mapmnd", "prop-smndmap", "cor-smndmap", "prop-hmndpresereflec", "prop-inaccmap",
          "prop-inacclocalicmap", "id-preimage-closed-open", "id-image-closure",
          "id-open-preimage-closure"})
      expect_pass(c, corpus, id);
    // the open-but-not-dense-to-dense witness must be found
    CheckReport obs = run_on(corpus, "obs-obsopen");
    c.require(obs.passed() && obs.hypothesis_satisfied > 0,
              "obs-obsopen witness not found by the classifier");
    if (!c.ok)
      c.notes.push_back(
          "prop-mapmnd is a documented falsification: see docs/checks.md, 'Known failure'");
    c.seconds = t.seconds();
    results.push_back(c);
    report(c);
  }

  // ---------------------------------------------------------------- 7
  {
    Criterion c{7, "oracle equivalences: fast paths agree with definitions"};
    Timer t;
    for (const char* id : {"oracle-mnd", "oracle-remote", "oracle-nd", "oracle-supplement",
                           "oracle-preimage", "oracle-openness"})
      expect_pass(c, corpus, id);
    c.seconds = t.seconds();
    results.push_back(c);
    report(c);
  }

  // ---------------------------------------------------------------- 8
  {
    Criterion c{8, "mutation sanity: corrupted heyting entry must be caught"};
    Timer t;
    CorpusConfig mcfg = cfg;
    mcfg.max_points = 1;
    mcfg.max_map_size = 2;
    mcfg.frames_override = {chain_frame(4)->with_corrupted_heyting(1, 0, 2)};
    Corpus mutated = Corpus::build(mcfg);
    std::int64_t failures = 0;
    std::string sample;
    for (const auto& chk : check_registry()) {
      CheckReport r = run_check_on(chk, mutated);
      if (!r.passed()) {
        failures += static_cast<std::int64_t>(r.failures.size());
        if (sample.empty())
          sample = r.id + " at " + r.failures[0].instance + " [" + r.failures[0].witness + "]";
        bool serialized = !r.failures[0].instance.empty() && !r.failures[0].witness.empty() &&
                          !report_to_json(r).empty();
        c.require(serialized, "counterexample must serialize");
      }
    }
    c.require(failures > 0, "no check fails on the corrupted frame");
    if (failures > 0) c.notes.push_back("caught: " + sample);
    c.seconds = t.seconds();
    results.push_back(c);
    report(c);
  }

  int passed = 0;
  for (const auto& c : results) passed += c.ok ? 1 : 0;
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}
