#include "gyro/io.hpp"

#include <sstream>

namespace gyro {

namespace {

struct Line {
  int number;
  std::string text;
};

// content lines with their 1-based positions; comments and blanks dropped
std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

std::vector<int> parse_ints(const Line& line) {
  std::istringstream in(line.text);
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    if (token[0] == '#') break;
    try {
      std::size_t used = 0;
      const int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(value);
    } catch (const std::exception&) {
      throw ParseError(line.number, "malformed integer '" + token + "'");
    }
  }
  return out;
}

int parse_carrier(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(1, "empty file");
  const auto header = parse_ints(lines[0]);
  if (header.size() != 1)
    throw ParseError(lines[0].number,
                     "expected a single carrier size on the first line");
  const int n = header[0];
  if (n < 1 || n > kMaxCarrier)
    throw ParseError(lines[0].number,
                     "carrier size must lie in 1.." +
                         std::to_string(kMaxCarrier));
  return n;
}

}  // namespace

std::vector<std::vector<int>> parse_gyro_table(const std::string& text) {
  const auto lines = content_lines(text);
  const int n = parse_carrier(lines);
  if (static_cast<int>(lines.size()) != n + 1)
    throw ParseError(lines.empty() ? 1 : lines.back().number,
                     "expected " + std::to_string(n) + " table rows, found " +
                         std::to_string(lines.size() - 1));
  std::vector<std::vector<int>> table;
  for (int a = 0; a < n; ++a) {
    auto row = parse_ints(lines[a + 1]);
    if (static_cast<int>(row.size()) != n)
      throw ParseError(lines[a + 1].number,
                       "expected " + std::to_string(n) + " entries, found " +
                           std::to_string(row.size()));
    for (int v : row)
      if (v < 0 || v >= n)
        throw ParseError(lines[a + 1].number,
                         "entry " + std::to_string(v) + " outside 0.." +
                             std::to_string(n - 1));
    table.push_back(std::move(row));
  }
  return table;
}

ValidationOutcome parse_gyro(const std::string& text) {
  return validate(parse_gyro_table(text));
}

std::string serialize_gyro(const FiniteGyrogroup& g) {
  std::ostringstream out;
  const int n = g.size();
  out << n << "\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out << (b ? " " : "") << g.add(a, b);
    out << "\n";
  }
  return out.str();
}

ParsedTopology parse_topo(const std::string& text, int expected_carrier) {
  const auto lines = content_lines(text);
  const int n = parse_carrier(lines);
  if (expected_carrier >= 0 && n != expected_carrier)
    throw ParseError(lines[0].number,
                     "carrier size " + std::to_string(n) +
                         " does not match the companion table's " +
                         std::to_string(expected_carrier));
  std::vector<Mask> opens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string& body = lines[i].text;
    const std::size_t start = body.find_first_not_of(" \t");
    if (body[start] == '-') {
      opens.push_back(0);
      continue;
    }
    if (body[start] == '*') {
      opens.push_back(full_mask(n));
      continue;
    }
    Mask m = 0;
    for (int v : parse_ints(lines[i])) {
      if (v < 0 || v >= n)
        throw ParseError(lines[i].number,
                         "index " + std::to_string(v) + " outside 0.." +
                             std::to_string(n - 1));
      m |= singleton(v);
    }
    opens.push_back(m);
  }
  ParsedTopology out{FiniteTopology(n, opens), opens.size(), 0};
  if (out.topology.opens_enumerable())
    out.completed_opens = out.topology.open_count();
  return out;
}

std::string serialize_topo(const FiniteTopology& t) {
  std::ostringstream out;
  out << t.carrier_size() << "\n";
  for (Mask o : t.opens()) {
    if (o == 0) {
      out << "-\n";
    } else if (o == t.carrier_mask()) {
      out << "*\n";
    } else {
      bool first = true;
      for_each_element(o, [&](int i) {
        out << (first ? "" : " ") << i;
        first = false;
      });
      out << "\n";
    }
  }
  return out.str();
}

Mask parse_index_set(const std::string& csv, int carrier, bool implicit_zero,
                     bool* zero_added) {
  Mask m = 0;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed index '" + token + "'");
    }
    if (value < 0 || value >= carrier)
      throw std::invalid_argument("index " + std::to_string(value) +
                                  " outside 0.." + std::to_string(carrier - 1));
    m |= singleton(value);
  }
  if (zero_added) *zero_added = false;
  if (implicit_zero && !contains(m, 0)) {
    m |= singleton(0);
    if (zero_added) *zero_added = true;
  }
  return m;
}

}  // namespace gyro
