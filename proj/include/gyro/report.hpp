#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace gyro {

/// Structured pass/fail record. On failure, `check` names the violated
/// identity or criterion and `witness` holds the offending tuple.
struct Report {
  bool pass = true;
  bool vacuous = false;
  std::size_t checks_run = 0;
  double max_deviation = 0.0;
  std::string check;
  std::string witness;
  std::vector<std::pair<std::string, std::string>> notes;

  void count() { ++checks_run; }

  void note(const std::string& key, const std::string& value) {
    notes.emplace_back(key, value);
  }

  // first failure wins; later checks still contribute to the counters
  void fail(const std::string& name, const std::string& witness_text) {
    if (pass) {
      pass = false;
      check = name;
      witness = witness_text;
    }
  }

  void observe(double deviation) {
    if (deviation > max_deviation) max_deviation = deviation;
  }

  void absorb(const Report& sub) {
    checks_run += sub.checks_run;
    observe(sub.max_deviation);
    if (!sub.pass) fail(sub.check, sub.witness);
  }

  explicit operator bool() const { return pass; }
};

// permutation rendering in cycle notation: identity -> "I", else "(4,6)(5,7)"
std::string cycle_notation(const std::vector<int>& perm);

}  // namespace gyro
