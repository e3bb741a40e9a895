#include "predsim/scorer.hpp"

#include <algorithm>

namespace predsim {

CachingSource::CachingSource(const SimilaritySource& inner, bool cache_concepts,
                             bool cache_relations)
    : inner_(inner), cache_concepts_(cache_concepts), cache_relations_(cache_relations) {}

double CachingSource::concept_similarity(const ConceptId& a, const ConceptId& b) const {
    if (!cache_concepts_ || a == b) return inner_.concept_similarity(a, b);
    return concepts_.lookup_or_compute(a.view(), b.view(),
                                       [&] { return inner_.concept_similarity(a, b); });
}

double CachingSource::relation_similarity(const RelationId& a, const RelationId& b) const {
    if (!cache_relations_ || a == b) return inner_.relation_similarity(a, b);
    return relations_.lookup_or_compute(a.view(), b.view(),
                                        [&] { return inner_.relation_similarity(a, b); });
}

Scorer::Scorer(const SimilaritySource& source, SimConfig config, std::size_t workers)
    : base_(source), source_(&source), config_(config), workers_(std::max<std::size_t>(workers, 1)) {
    config_.validate();
    if (config_.cache.concept_pairs || config_.cache.relation_pairs) {
        caching_ = std::make_unique<CachingSource>(base_, config_.cache.concept_pairs,
                                                   config_.cache.relation_pairs);
        source_ = caching_.get();
    }
    if (config_.cache.predication_pairs) predications_ = std::make_unique<SimCache>();
    if (config_.cache.document_pairs) documents_ = std::make_unique<SimCache>();
}

Scorer::~Scorer() = default;

double Scorer::concept_similarity(const ConceptId& a, const ConceptId& b) const {
    return source_->concept_similarity(a, b);
}

double Scorer::relation_similarity(const RelationId& a, const RelationId& b) const {
    return source_->relation_similarity(a, b);
}

double Scorer::predication(const Predication& a, const Predication& b) const {
    if (!predications_ || a == b) return predication_similarity(a, b, config_.weights, *source_);
    return predications_->lookup_or_compute(a.literal(), b.literal(), [&] {
        return predication_similarity(a, b, config_.weights, *source_);
    });
}

double Scorer::pattern(const PredicationPattern& pattern, const Predication& p) const {
    return pattern_similarity(pattern, p, config_.weights, *source_);
}

double Scorer::sets(const PredicationSet& a, const PredicationSet& b, std::size_t workers) const {
    return best_match_average(
        a.members(), b.members(), config_.pair_threshold,
        [this](const Predication& x, const Predication& y) { return predication(x, y); }, workers);
}

double Scorer::documents(const DocumentId& a, const PredicationSet& sa, const DocumentId& b,
                         const PredicationSet& sb) const {
    if (!documents_) return sets(sa, sb);
    return documents_->lookup_or_compute(a.view(), b.view(), [&] { return sets(sa, sb); });
}

CacheStats Scorer::cache_stats() const {
    CacheStats stats;
    if (caching_) {
        stats.concept_entries = caching_->concept_cache().size();
        stats.relation_entries = caching_->relation_cache().size();
    }
    if (predications_) stats.predication_entries = predications_->size();
    if (documents_) stats.document_entries = documents_->size();
    return stats;
}

} // namespace predsim
