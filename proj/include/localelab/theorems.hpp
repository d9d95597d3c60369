#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "localelab/classify.hpp"
#include "localelab/maps.hpp"
#include "localelab/space.hpp"

namespace localelab {

struct CorpusConfig {
  int max_poset = 4;        // frame corpus: downset frames of posets up to this size
  int max_points = 4;       // space corpus
  int max_map_size = 6;     // map corpus: frames with at most this many elements
  int sublocale_cap = 16;   // enumeration guard
  int max_counterexamples = 5;
  int jobs = 1;
  std::vector<FramePtr> frames_override;  // replaces the frame corpus when non-empty
};

struct Counterexample {
  std::string instance;
  std::string witness;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CheckReport {
  std::string id;
  std::string anchor;
  std::int64_t instances = 0;
  std::int64_t hypothesis_satisfied = 0;
  std::vector<Counterexample> failures;
  std::int64_t elapsed_ms = 0;
  bool passed() const { return failures.empty(); }
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct SpaceCtx {
  FiniteSpace space;
  FramePtr frame;
  Universe uni;
  std::vector<Mask> induced;      // member mask of the induced sublocale, per point subset
  std::vector<int> induced_idx;   // its index in uni
};

struct MapCtx {
  LocalicMap map;
  int src = -1, tgt = -1;  // indices into Corpus::map_frames
  bool open = false, frobenius_open = false;
  bool d2d = false, star_d2d = false, injective = false;
};

// Everything a check quantifies over, built once per run.
struct Corpus {
  CorpusConfig cfg;
  std::vector<Universe> frames;
  std::vector<SpaceCtx> spaces;
  std::vector<Universe> map_frames;
  std::vector<MapCtx> maps;
  static Corpus build(const CorpusConfig& cfg);
};

class CheckSink {
public:
  explicit CheckSink(int max_failures) : max_failures_(max_failures) {}

  void instance() { ++instances_; }
  void hypothesis() { ++hypothesis_; }

  template <class MakeInstance, class MakeWitness>
  bool expect(bool ok, MakeInstance&& inst, MakeWitness&& wit) {
    if (!ok) {
      ++failure_count_;
      if (static_cast<int>(failures_.size()) < max_failures_)
        failures_.push_back({inst(), wit()});
    }
    return ok;
  }

  std::int64_t instance_count() const { return instances_; }
  std::int64_t hypothesis_count() const { return hypothesis_; }
  std::int64_t failure_count() const { return failure_count_; }
  const std::vector<Counterexample>& failures() const { return failures_; }

private:
  int max_failures_;
  std::int64_t instances_ = 0, hypothesis_ = 0, failure_count_ = 0;
  std::vector<Counterexample> failures_;
};

struct TheoremCheck {
  std::string id;
  std::string anchor;  // the statement exercised, in words
  std::string domain;  // what one instance ranges over
  std::function<void(const Corpus&, CheckSink&)> run;
};

const std::vector<TheoremCheck>& check_registry();
const TheoremCheck* find_check(const std::string& id);

CheckReport run_check_on(const TheoremCheck& chk, const Corpus& corpus);
CheckReport run_check(const std::string& id, const CorpusConfig& cfg = {});  // UnknownCheck
std::vector<CheckReport> run_all_on(const Corpus& corpus);
std::vector<CheckReport> run_all(const CorpusConfig& cfg = {});

}  // namespace localelab
