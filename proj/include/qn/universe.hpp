#pragma once

#include <atomic>
#include <functional>

#include "qn/lifting.hpp"

namespace qn {

// Exhaustive desk-scale universe: every monotone map between canonical
// spaces of size <= max_n, deterministic order (spaces by (size, matrix
// key); maps grouped by (dom, cod) pair, lexicographic inside a pair).
class Universe {
public:
    static Universe build(int max_n, bool discrete_only = false, const LiftingCaps& caps = {});
    // process-wide cache of full universes, keyed by max_n only; the caps of
    // the first builder win, so callers with special caps should use build()
    static const Universe& shared(int max_n, const LiftingCaps& caps = {});

    int max_n() const { return max_n_; }
    const std::vector<SpacePtr>& spaces() const { return spaces_; }
    const std::vector<MapF>& maps() const { return maps_; }
    // size of the larger end of map i
    int map_size(size_t i) const { return sizes_[i]; }
    const LiftingCaps& caps() const { return caps_; }

    // map indices whose two ends both have <= n points, ascending
    std::vector<size_t> maps_up_to(int n) const;

    // memoized lifting relation; pairs outside the memo block (ends larger
    // than memo_n) are recomputed on the fly
    bool lifts_cached(size_t fi, size_t gi) const;

private:
    int max_n_ = 0;
    int memo_n_ = 0;
    LiftingCaps caps_;
    std::vector<SpacePtr> spaces_;
    std::vector<MapF> maps_;
    std::vector<int> sizes_;
    std::vector<int> memo_id_; // dense index inside the memo block, or -1
    size_t memo_count_ = 0;
    mutable std::unique_ptr<std::atomic<uint8_t>[]> lift_memo_; // 0 unset, 1 false, 2 true
};

// Deterministic parallel map: applies fn to 0..count-1 on `threads` workers.
void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn);

} // namespace qn
