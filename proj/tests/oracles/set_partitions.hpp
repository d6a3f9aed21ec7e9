#pragma once

#include <cstdint>
#include <vector>

namespace oracle {

// Counts set partitions of {1..n} by walking every restricted growth string
// a_1 = 0, a_{i+1} <= 1 + max(a_1..a_i).
inline std::uint64_t count_set_partitions(int n) {
  if (n == 0) return 1;
  std::vector<int> a(n, 0), m(n, 0);  // m[i] = max(a_0..a_i)
  std::uint64_t count = 0;
  while (true) {
    ++count;
    int i = n - 1;
    while (i > 0 && a[i] == m[i - 1] + 1) --i;
    if (i == 0) return count;
    ++a[i];
    m[i] = std::max(m[i - 1], a[i]);
    for (int j = i + 1; j < n; ++j) {
      a[j] = 0;
      m[j] = m[i];
    }
  }
}

}  // namespace oracle
