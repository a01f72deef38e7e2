#pragma once

#include <algorithm>
#include <cstddef>
#include <span>

namespace bpeel {

/// Lists at or below this length are probed into the other list by binary
/// search instead of being merged.
inline constexpr std::size_t kProbeThreshold = 32;

/// Calls `on_common(i, j)` for every position pair with a[i] == b[j], in
/// ascending value order. Both inputs must be sorted and duplicate free.
template <class T, class F>
void intersect_sorted(std::span<const T> a, std::span<const T> b, F&& on_common) {
  const bool a_short = a.size() <= kProbeThreshold;
  const bool b_short = b.size() <= kProbeThreshold;
  if (a_short != b_short) {
    // short list probes the long one; the search window only moves forward
    const bool probe_a = a_short;
    const auto& shorter = probe_a ? a : b;
    const auto& longer = probe_a ? b : a;
    auto lo = longer.begin();
    for (std::size_t i = 0; i < shorter.size() && lo != longer.end(); ++i) {
      lo = std::lower_bound(lo, longer.end(), shorter[i]);
      if (lo != longer.end() && *lo == shorter[i]) {
        const auto j = static_cast<std::size_t>(lo - longer.begin());
        if (probe_a) {
          on_common(i, j);
        } else {
          on_common(j, i);
        }
        ++lo;
      }
    }
    return;
  }
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      on_common(i, j);
      ++i;
      ++j;
    }
  }
}

}  // namespace bpeel
