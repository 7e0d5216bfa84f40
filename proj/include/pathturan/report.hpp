// Copyright 2026 The pathturan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace pathturan {

using Json = nlohmann::ordered_json;

enum class Verdict { kPass, kViolated, kSkipped };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kViolated: return "violated";
    case Verdict::kSkipped: return "capability-skipped";
  }
  return "?";
}

/// Outcome of one check or suite. A violated report always carries a
/// counterexample; graph counterexamples embed graph6 so they re-verify on
/// their own.
struct CheckReport {
  std::string suite;
  Json params = Json::object();
  Verdict verdict = Verdict::kPass;
  std::int64_t samples = 0;
  std::int64_t skipped = 0;
  std::optional<Json> counterexample;
  std::vector<std::string> notes;
  Json details = Json::object();

  bool passed() const { return verdict == Verdict::kPass; }

  /// Records a violation; only the first counterexample is kept.
  void violate(Json certificate) {
    if (verdict != Verdict::kViolated) {
      verdict = Verdict::kViolated;
      counterexample = std::move(certificate);
    }
  }

  void skip(const std::string& why) {
    ++skipped;
    if (verdict == Verdict::kPass) verdict = Verdict::kSkipped;
    notes.push_back(why);
  }

  /// Folds a sub-report in: violation wins over skip, skip over pass.
  void merge(const CheckReport& other) {
    samples += other.samples;
    skipped += other.skipped;
    if (other.verdict == Verdict::kViolated && verdict != Verdict::kViolated) {
      verdict = Verdict::kViolated;
      counterexample = other.counterexample;
    } else if (other.verdict == Verdict::kSkipped && verdict == Verdict::kPass) {
      verdict = Verdict::kSkipped;
    }
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }

  Json to_json() const {
    Json j;
    j["suite"] = suite;
    j["params"] = params;
    j["verdict"] = verdict_name(verdict);
    j["samples"] = samples;
    if (skipped) j["skipped"] = skipped;
    if (counterexample) j["counterexample"] = *counterexample;
    if (!notes.empty()) j["notes"] = notes;
    if (!details.empty()) j["details"] = details;
    return j;
  }
};

}  // namespace pathturan
