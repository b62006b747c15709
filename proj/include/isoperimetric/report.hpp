#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "isoperimetric/element_set.hpp"

namespace isoperimetric {

struct Counterexample {
  std::string group;
  nlohmann::json sets;
  nlohmann::json observed;
};

// Outcome of one checker. Instances failing a hypothesis are counted as
// skipped, never as tested.
struct CheckReport {
  static constexpr std::size_t kMaxStoredCounterexamples = 20;

  std::string theorem_id;
  std::int64_t instances_tested = 0;
  std::int64_t instances_passing = 0;
  std::int64_t instances_skipped = 0;
  std::int64_t counterexamples_found = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
  std::chrono::milliseconds elapsed{0};

  CheckReport() = default;
  explicit CheckReport(std::string id) : theorem_id(std::move(id)) {}

  bool passed() const noexcept {
    return counterexamples_found == 0 && instances_passing == instances_tested;
  }

  void pass() {
    ++instances_tested;
    ++instances_passing;
  }
  void skip(std::int64_t n = 1) { instances_skipped += n; }
  void fail(Counterexample c) {
    ++instances_tested;
    ++counterexamples_found;
    if (counterexamples.size() < kMaxStoredCounterexamples) counterexamples.push_back(std::move(c));
  }
  template <class MakeCounterexample>
  void expect(bool ok, MakeCounterexample&& make) {
    if (ok)
      pass();
    else
      fail(make());
  }
  void note(std::string text) { notes.push_back(std::move(text)); }

  // Folds `other` in after this report's own instances.
  void merge(const CheckReport& other) {
    instances_tested += other.instances_tested;
    instances_passing += other.instances_passing;
    instances_skipped += other.instances_skipped;
    counterexamples_found += other.counterexamples_found;
    for (const auto& c : other.counterexamples)
      if (counterexamples.size() < kMaxStoredCounterexamples) counterexamples.push_back(c);
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    elapsed += other.elapsed;
  }
};

inline nlohmann::json set_json(const ElementSet& s) { return s.indices(); }

inline nlohmann::json sets_json(const std::vector<ElementSet>& sets) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : sets) out.push_back(set_json(s));
  return out;
}

// elapsed is wall-clock and therefore only emitted on request, so that
// reports stay byte-identical across runs.
inline nlohmann::json to_json(const CheckReport& r, bool with_timing = false) {
  nlohmann::json cex = nlohmann::json::array();
  for (const auto& c : r.counterexamples)
    cex.push_back({{"group", c.group}, {"sets", c.sets}, {"observed", c.observed}});
  nlohmann::json j = {{"theorem_id", r.theorem_id},
                      {"passed", r.passed()},
                      {"instances_tested", r.instances_tested},
                      {"instances_passing", r.instances_passing},
                      {"instances_skipped", r.instances_skipped},
                      {"counterexamples_found", r.counterexamples_found},
                      {"counterexamples", std::move(cex)},
                      {"notes", r.notes}};
  if (with_timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

}  // namespace isoperimetric
