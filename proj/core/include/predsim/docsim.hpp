#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "predsim/parallel.hpp"
#include "predsim/predication.hpp"

namespace predsim {

/// Sorted, duplicate-free collection of predications.
class PredicationSet {
public:
    PredicationSet() = default;
    explicit PredicationSet(std::vector<Predication> members);
    PredicationSet(std::initializer_list<Predication> members);

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(const Predication& p) const;
    std::span<const Predication> members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    friend bool operator==(const PredicationSet&, const PredicationSet&) = default;

private:
    std::vector<Predication> members_;
};

/// Which similarity layers are memoized.
struct CachePolicy {
    bool concept_pairs = true;
    bool relation_pairs = true;
    bool predication_pairs = false;
    bool document_pairs = false;

    static CachePolicy none() { return {false, false, false, false}; }
    static CachePolicy all() { return {true, true, true, true}; }
};

/// Weights, the per-predication match threshold, and the cache policy.
struct SimConfig {
    SimWeights weights;
    /// Best-match scores strictly below this are counted as 0. Must be in [0, 1].
    double pair_threshold = 0.0;
    CachePolicy cache;

    /// Throws std::invalid_argument when pair_threshold is outside [0, 1].
    void validate() const;
};

/// Best-match average of two predication sets:
///
///   (sum_k max_p sim(k, p) + sum_p max_k sim(k, p)) / (m + n)
///
/// where each max below `threshold` is replaced by 0. The m x n matrix of pair
/// scores is filled once (rows split across `workers`) and both directional
/// maxima are reduced from it sequentially, so the result does not depend on
/// `workers`. Throws DegenerateInput if either side is empty.
template <class PairScore>
double best_match_average(std::span<const Predication> a, std::span<const Predication> b,
                          double threshold, PairScore&& pair_score, std::size_t workers = 1);

double set_similarity(const PredicationSet& s1, const PredicationSet& s2, const SimConfig& cfg,
                      const SimilaritySource& source, std::size_t workers = 1);

double set_similarity(const PredicationSet& s1, const PredicationSet& s2, const SimConfig& cfg,
                      const Hierarchy& concepts, const Hierarchy& relations,
                      std::size_t workers = 1);

void throw_if_empty_sets(std::size_t m, std::size_t n);

template <class PairScore>
double best_match_average(std::span<const Predication> a, std::span<const Predication> b,
                          double threshold, PairScore&& pair_score, std::size_t workers) {
    throw_if_empty_sets(a.size(), b.size());
    const std::size_t m = a.size();
    const std::size_t n = b.size();
    std::vector<double> matrix(m * n);
    parallel_for(m, workers, [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) matrix[i * n + j] = pair_score(a[i], b[j]);
    });

    auto gate = [threshold](double best) { return best < threshold ? 0.0 : best; };
    double rows = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double best = matrix[i * n];
        for (std::size_t j = 1; j < n; ++j) best = std::max(best, matrix[i * n + j]);
        rows += gate(best);
    }
    double cols = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double best = matrix[j];
        for (std::size_t i = 1; i < m; ++i) best = std::max(best, matrix[i * n + j]);
        cols += gate(best);
    }
    return (rows + cols) / static_cast<double>(m + n);
}

} // namespace predsim
