#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gyro/finite.hpp"
#include "gyro/topology.hpp"

namespace gyro {

struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " +
                           message),
        line(line_number) {}
  int line;
};

// .gyro format: first a line with n, then n rows of n space-separated
// indices in 0..n-1; '#' starts a comment line
std::vector<std::vector<int>> parse_gyro_table(const std::string& text);

// parse + validate in one step; validation failures surface in the outcome
ValidationOutcome parse_gyro(const std::string& text);

std::string serialize_gyro(const FiniteGyrogroup& g);

// .topo format: first a line with n, then one open set per line as
// space-separated indices; '-' is the empty set, '*' the full carrier
struct ParsedTopology {
  FiniteTopology topology;
  std::size_t given_opens = 0;
  std::size_t completed_opens = 0;  // 0 when the family is too large to list
  bool completion_added_sets() const {
    return completed_opens > given_opens;
  }
};

ParsedTopology parse_topo(const std::string& text, int expected_carrier = -1);

std::string serialize_topo(const FiniteTopology& t);

// comma-separated element list from the command line; neighborhood arguments
// get the identity adjoined (with notice) since every neighborhood of the
// identity contains it
Mask parse_index_set(const std::string& csv, int carrier, bool implicit_zero,
                     bool* zero_added = nullptr);

}  // namespace gyro
