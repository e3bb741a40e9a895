#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "predsim/corpus.hpp"
#include "predsim/docsim.hpp"
#include "predsim/predication.hpp"
#include "predsim/scorer.hpp"

namespace predsim {

/// A ranked document. Ranks start at 1 and scores never increase with rank.
struct RankedDocument {
    DocumentId id;
    double score = 0.0;
    std::size_t rank = 0;

    friend bool operator==(const RankedDocument&, const RankedDocument&) = default;
};

/// A ranked corpus predication together with the documents that contain it.
struct RankedPredication {
    Predication predication;
    double score = 0.0;
    std::size_t rank = 0;
    std::vector<DocumentId> documents;

    friend bool operator==(const RankedPredication&, const RankedPredication&) = default;
};

/// Ranks every other document in the corpus against `seed`. Ties go to the
/// smaller document id. Throws UnknownDocument if the seed is not in the
/// corpus, DegenerateInput if it has no predications, and
/// std::invalid_argument if top_n is 0. Candidates are scored on `workers`
/// threads, defaulting to scorer.workers().
std::vector<RankedDocument> related_documents(const Corpus& corpus, const DocumentId& seed,
                                              std::size_t top_n, const Scorer& scorer,
                                              std::optional<std::size_t> workers = std::nullopt);

/// Ranks all corpus documents against an ad-hoc predication set.
std::vector<RankedDocument> query_documents(const Corpus& corpus, const PredicationSet& query,
                                            std::size_t top_n, const Scorer& scorer);

/// Ranks the distinct predications of the corpus against a pattern. Ties go
/// to the smaller `s|r|o` literal.
std::vector<RankedPredication> related_predications(const Corpus& corpus,
                                                    const PredicationPattern& pattern,
                                                    std::size_t top_k, const Scorer& scorer);

/// `rank<TAB>id<TAB>score` with six decimals.
void write_ranked(std::ostream& out, const std::vector<RankedDocument>& results);

/// `rank<TAB>literal<TAB>score<TAB>doc,doc,...` with six decimals.
void write_ranked(std::ostream& out, const std::vector<RankedPredication>& results);

} // namespace predsim
