#include "predsim/sim_cache.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "predsim/errors.hpp"
#include "predsim/tsv.hpp"

namespace predsim {

std::string SimCache::canonical_key(std::string_view a, std::string_view b) {
    if (b < a) std::swap(a, b);
    std::string key;
    key.reserve(a.size() + b.size() + 1);
    key.append(a).push_back('\t');
    key.append(b);
    return key;
}

std::optional<double> SimCache::find(std::string_view a, std::string_view b) const {
    const auto key = canonical_key(a, b);
    const auto& shard = shard_for(key);
    std::lock_guard lock(shard.mutex);
    if (auto it = shard.entries.find(key); it != shard.entries.end()) return it->second;
    return std::nullopt;
}

void SimCache::store(std::string_view a, std::string_view b, double score) {
    auto key = canonical_key(a, b);
    auto& shard = shard_for(key);
    std::lock_guard lock(shard.mutex);
    shard.entries.insert_or_assign(std::move(key), score);
}

std::size_t SimCache::size() const {
    std::size_t n = 0;
    for (const auto& shard : shards_) {
        std::lock_guard lock(shard.mutex);
        n += shard.entries.size();
    }
    return n;
}

void SimCache::clear() {
    for (auto& shard : shards_) {
        std::lock_guard lock(shard.mutex);
        shard.entries.clear();
    }
    hits_ = 0;
    misses_ = 0;
}

void SimCache::save(const std::filesystem::path& path) const {
    std::vector<std::pair<std::string, double>> records;
    for (const auto& shard : shards_) {
        std::lock_guard lock(shard.mutex);
        records.insert(records.end(), shard.entries.begin(), shard.entries.end());
    }
    std::sort(records.begin(), records.end());

    std::ofstream out(path);
    if (!out) throw LoadError("cannot write cache file '" + path.string() + "'");
    out << std::hexfloat;
    for (const auto& [key, score] : records) out << key << '\t' << score << '\n';
}

std::size_t SimCache::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open cache file '" + path.string() + "'");
    std::size_t count = 0;
    for_each_tsv_record(in, [&](std::size_t line, const std::vector<std::string_view>& fields) {
        if (fields.size() != 3) throw LoadError("expected 3 fields in cache record", line);
        // Hexfloat text as written by operator<< carries a "0x" prefix that
        // from_chars does not accept.
        std::string_view text = fields[2];
        bool negative = false;
        if (!text.empty() && text.front() == '-') {
            negative = true;
            text.remove_prefix(1);
        }
        if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
        double score = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), score,
                                               std::chars_format::hex);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            throw LoadError("bad score '" + std::string(fields[2]) + "'", line);
        }
        store(fields[0], fields[1], negative ? -score : score);
        ++count;
    });
    return count;
}

} // namespace predsim
