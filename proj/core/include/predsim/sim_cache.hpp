#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace predsim {

/// Concurrent memo table for symmetric pairwise scores.
///
/// Keys are order-independent: (a, b) and (b, a) share one entry. Lookups on
/// different shards never contend. Two threads missing on the same key may
/// both compute it; the scores are deterministic so either store is correct.
class SimCache {
public:
    SimCache() = default;
    SimCache(const SimCache&) = delete;
    SimCache& operator=(const SimCache&) = delete;

    /// Canonical key: the two ids in ascending order joined by a tab. Ids
    /// never contain tabs, so the key is unambiguous.
    static std::string canonical_key(std::string_view a, std::string_view b);

    std::optional<double> find(std::string_view a, std::string_view b) const;
    void store(std::string_view a, std::string_view b, double score);

    template <class Compute>
    double lookup_or_compute(std::string_view a, std::string_view b, Compute&& compute) {
        const auto key = canonical_key(a, b);
        auto& shard = shard_for(key);
        {
            std::lock_guard lock(shard.mutex);
            if (auto it = shard.entries.find(key); it != shard.entries.end()) {
                hits_.fetch_add(1, std::memory_order_relaxed);
                return it->second;
            }
        }
        misses_.fetch_add(1, std::memory_order_relaxed);
        const double score = compute();
        std::lock_guard lock(shard.mutex);
        shard.entries.try_emplace(key, score);
        return score;
    }

    std::size_t size() const;
    std::size_t hits() const noexcept { return hits_.load(std::memory_order_relaxed); }
    std::size_t misses() const noexcept { return misses_.load(std::memory_order_relaxed); }
    void clear();

    /// Writes one `key<TAB>hexfloat-score` record per line, sorted by key.
    void save(const std::filesystem::path& path) const;

    /// Merges records written by save(). Returns the number of records read.
    /// Throws LoadError on a malformed record.
    std::size_t load(const std::filesystem::path& path);

private:
    static constexpr std::size_t kShards = 16;

    struct Shard {
        mutable std::mutex mutex;
        std::unordered_map<std::string, double> entries;
    };

    Shard& shard_for(const std::string& key) {
        return shards_[std::hash<std::string>{}(key) % kShards];
    }
    const Shard& shard_for(const std::string& key) const {
        return shards_[std::hash<std::string>{}(key) % kShards];
    }

    std::array<Shard, kShards> shards_;
    std::atomic<std::size_t> hits_{0};
    std::atomic<std::size_t> misses_{0};
};

} // namespace predsim
