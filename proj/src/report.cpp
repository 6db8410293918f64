#include "gyro/report.hpp"

#include <vector>

namespace gyro {

std::string cycle_notation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) continue;
    std::string cycle = "(" + std::to_string(i);
    seen[i] = true;
    for (int j = perm[i]; j != i; j = perm[j]) {
      seen[j] = true;
      cycle += "," + std::to_string(j);
    }
    out += cycle + ")";
  }
  return out.empty() ? "I" : out;
}

}  // namespace gyro
