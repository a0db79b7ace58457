#include "qn/universe.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

namespace qn {

Universe Universe::build(int max_n, bool discrete_only, const LiftingCaps& caps) {
    Universe u;
    u.max_n_ = max_n;
    u.caps_ = caps;
    EnumerationCaps ecaps = caps.enumeration;
    ecaps.up_to_iso_max_n = std::max(ecaps.up_to_iso_max_n, max_n);
    for (int n = 0; n <= max_n; ++n) {
        if (discrete_only) {
            u.spaces_.push_back(std::make_shared<Space>(discrete_space(n)));
            continue;
        }
        for (Space& s : enumerate_spaces(n, SpaceMode::UpToIso, ecaps))
            u.spaces_.push_back(std::make_shared<Space>(std::move(s)));
    }
    for (const SpacePtr& a : u.spaces_)
        for (const SpacePtr& b : u.spaces_)
            for (MapF& f : enumerate_maps(a, b, ecaps)) {
                u.sizes_.push_back(std::max(a->n(), b->n()));
                u.maps_.push_back(std::move(f));
            }
    // memo only over the small block; a full table over 4-point maps would
    // need gigabytes
    u.memo_n_ = std::min(max_n, 3);
    u.memo_id_.assign(u.maps_.size(), -1);
    for (size_t i = 0; i < u.maps_.size(); ++i)
        if (u.sizes_[i] <= u.memo_n_) u.memo_id_[i] = int(u.memo_count_++);
    u.lift_memo_ = std::make_unique<std::atomic<uint8_t>[]>(u.memo_count_ * u.memo_count_);
    for (size_t i = 0; i < u.memo_count_ * u.memo_count_; ++i)
        u.lift_memo_[i].store(0, std::memory_order_relaxed);
    return u;
}

const Universe& Universe::shared(int max_n, const LiftingCaps& caps) {
    static std::mutex mu;
    static std::map<std::pair<int, bool>, std::unique_ptr<Universe>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(max_n, false);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<Universe>(build(max_n, false, caps))).first;
    return *it->second;
}

std::vector<size_t> Universe::maps_up_to(int n) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < maps_.size(); ++i)
        if (sizes_[i] <= n) out.push_back(i);
    return out;
}

bool Universe::lifts_cached(size_t fi, size_t gi) const {
    int a = memo_id_[fi], b = memo_id_[gi];
    if (a < 0 || b < 0) return lifts(maps_[fi], maps_[gi], caps_);
    auto& cell = lift_memo_[size_t(a) * memo_count_ + b];
    uint8_t v = cell.load(std::memory_order_relaxed);
    if (v == 0) {
        v = lifts(maps_[fi], maps_[gi], caps_) ? 2 : 1;
        cell.store(v, std::memory_order_relaxed);
    }
    return v == 2;
}

void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn) {
    if (threads <= 1 || count < 2) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int nt = std::min<size_t>(threads, count);
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace qn
