#pragma once

#include <cstddef>
#include <memory>

#include "predsim/docsim.hpp"
#include "predsim/identifier.hpp"
#include "predsim/predication.hpp"
#include "predsim/sim_cache.hpp"

namespace predsim {

/// Decorates a SimilaritySource with concept-pair and relation-pair memo
/// tables. Either table can be switched off.
class CachingSource final : public SimilaritySource {
public:
    CachingSource(const SimilaritySource& inner, bool cache_concepts, bool cache_relations);

    double concept_similarity(const ConceptId& a, const ConceptId& b) const override;
    double relation_similarity(const RelationId& a, const RelationId& b) const override;

    const SimCache& concept_cache() const noexcept { return concepts_; }
    const SimCache& relation_cache() const noexcept { return relations_; }

private:
    const SimilaritySource& inner_;
    bool cache_concepts_;
    bool cache_relations_;
    mutable SimCache concepts_;
    mutable SimCache relations_;
};

struct CacheStats {
    std::size_t concept_entries = 0;
    std::size_t relation_entries = 0;
    std::size_t predication_entries = 0;
    std::size_t document_entries = 0;
};

/// Binds a similarity source to a SimConfig and owns the memo tables the
/// config asks for. Retrieval and evaluation score everything through one
/// Scorer. Thread-safe for concurrent scoring calls.
class Scorer {
public:
    Scorer(const SimilaritySource& source, SimConfig config, std::size_t workers = 1);
    ~Scorer();
    Scorer(const Scorer&) = delete;
    Scorer& operator=(const Scorer&) = delete;

    const SimConfig& config() const noexcept { return config_; }
    std::size_t workers() const noexcept { return workers_; }

    double concept_similarity(const ConceptId& a, const ConceptId& b) const;
    double relation_similarity(const RelationId& a, const RelationId& b) const;
    double predication(const Predication& a, const Predication& b) const;
    double pattern(const PredicationPattern& pattern, const Predication& p) const;
    double sets(const PredicationSet& a, const PredicationSet& b, std::size_t workers = 1) const;

    /// set similarity of two named documents; memoized under the document ids
    /// when the policy enables document-pair caching.
    double documents(const DocumentId& a, const PredicationSet& sa, const DocumentId& b,
                     const PredicationSet& sb) const;

    CacheStats cache_stats() const;

private:
    const SimilaritySource& base_;
    std::unique_ptr<CachingSource> caching_;
    const SimilaritySource* source_;
    SimConfig config_;
    std::size_t workers_;
    std::unique_ptr<SimCache> predications_;
    std::unique_ptr<SimCache> documents_;
};

} // namespace predsim
