#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "predsim/docsim.hpp"
#include "predsim/identifier.hpp"

namespace predsim {

/// One `doc_id<TAB>subject<TAB>relation<TAB>object` row.
struct CorpusRecord {
    std::string document;
    std::string subject;
    std::string relation;
    std::string object;
    std::size_t line = 0;
};

struct CorpusStats {
    std::size_t documents = 0;
    std::size_t predications = 0;
    std::size_t duplicates_dropped = 0;
};

/// Immutable map from document id to its predication set. Documents that end
/// up with no predications are not stored; their ids are kept in skipped().
class Corpus {
public:
    using DocumentMap = std::map<DocumentId, PredicationSet>;

    /// Groups predications per document and drops duplicates. Throws
    /// LoadError if no document has a predication.
    static Corpus from_documents(std::vector<std::pair<DocumentId, std::vector<Predication>>> docs,
                                 std::string source = {});

    const DocumentMap& documents() const noexcept { return docs_; }
    const std::vector<DocumentId>& skipped() const noexcept { return skipped_; }
    std::size_t size() const noexcept { return docs_.size(); }
    bool contains(const DocumentId& id) const { return docs_.contains(id); }
    bool is_skipped(const DocumentId& id) const;
    /// nullptr when the id is not stored.
    const PredicationSet* find(const DocumentId& id) const;

    const CorpusStats& stats() const noexcept { return stats_; }
    const std::string& source() const noexcept { return source_; }
    std::chrono::system_clock::time_point loaded_at() const noexcept { return loaded_at_; }

    /// Compares content only, not provenance.
    friend bool operator==(const Corpus& a, const Corpus& b) {
        return a.docs_ == b.docs_ && a.skipped_ == b.skipped_;
    }

private:
    DocumentMap docs_;
    std::vector<DocumentId> skipped_;
    CorpusStats stats_;
    std::string source_;
    std::chrono::system_clock::time_point loaded_at_{};
};

/// Throws LoadError naming the record's line on an invalid token. Concept and
/// relation ids may not contain '|', which delimits predication literals.
Corpus load_corpus(std::span<const CorpusRecord> records, std::string source = {});
Corpus read_corpus(std::istream& in, std::string source = "<stream>");
Corpus read_corpus_file(const std::filesystem::path& path);

/// Writes every predication as a corpus record, ordered by document then
/// predication.
void write_corpus(std::ostream& out, const Corpus& corpus);

/// One `seed_id<TAB>related_id<TAB>rank` row.
struct GoldRecord {
    std::string seed;
    std::string related;
    std::size_t rank = 0;
    std::size_t line = 0;
};

/// Per-seed related-document lists in rank order.
class GoldStandard {
public:
    using Map = std::map<DocumentId, std::vector<DocumentId>>;

    explicit GoldStandard(Map related) : related_(std::move(related)) {}

    const Map& seeds() const noexcept { return related_; }
    std::size_t size() const noexcept { return related_.size(); }
    /// Empty span for an unknown seed.
    std::span<const DocumentId> related(const DocumentId& seed) const;

private:
    Map related_;
};

struct GoldLoad {
    GoldStandard gold;
    std::vector<std::string> warnings;
};

/// Throws LoadError on a non-positive rank, a repeated (seed, rank), a seed
/// listed as related to itself, or an empty record set. A document repeated
/// under one seed keeps its best rank and yields a warning.
GoldLoad load_gold(std::span<const GoldRecord> records);
GoldLoad read_gold(std::istream& in);
GoldLoad read_gold_file(const std::filesystem::path& path);

} // namespace predsim
