#pragma once

#include <cstddef>
#include <vector>

namespace lcc::detail {

/// Shrinks an odd closed walk (first vertex not repeated at the end) to an
/// induced odd cycle. Repeats and chords split the walk in two closed walks of
/// which exactly one is odd; that one is kept. Pairs are tried in
/// lexicographic order, so the result is deterministic.
template <class T, class Adjacent>
std::vector<T> induced_odd_cycle(std::vector<T> walk, Adjacent&& adjacent) {
    for (;;) {
        const std::size_t len = walk.size();
        bool changed = false;
        for (std::size_t i = 0; i < len && !changed; ++i) {
            for (std::size_t j = i + 1; j < len && !changed; ++j) {
                const std::size_t gap = j - i;
                const bool repeat = walk[i] == walk[j];
                const bool chord = !repeat && gap >= 2 && len - gap >= 2 && adjacent(walk[i], walk[j]);
                if (!repeat && !chord) continue;
                // Inner piece walk[i..j] closes through the chord (or the repeat).
                const std::size_t inner = repeat ? gap : gap + 1;
                std::vector<T> next;
                if (inner % 2 == 1) {
                    next.assign(walk.begin() + i, walk.begin() + j + (repeat ? 0 : 1));
                } else {
                    next.assign(walk.begin() + j, walk.end());
                    next.insert(next.end(), walk.begin(), walk.begin() + i + (repeat ? 0 : 1));
                }
                walk = std::move(next);
                changed = true;
            }
        }
        if (!changed) return walk;
    }
}

}  // namespace lcc::detail
