#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "brute_force.hpp"
#include "predsim/corpus.hpp"
#include "predsim/ontology.hpp"
#include "predsim/predication.hpp"

namespace predsim::testing {

/// Fixed-table similarity source. Identical ids score 1, listed pairs score
/// their table value in either order, everything else scores 0.
class StubSource final : public SimilaritySource {
public:
    StubSource& concepts(const std::string& a, const std::string& b, double score) {
        concept_table_[key(a, b)] = score;
        return *this;
    }
    StubSource& relations(const std::string& a, const std::string& b, double score) {
        relation_table_[key(a, b)] = score;
        return *this;
    }

    double concept_similarity(const ConceptId& a, const ConceptId& b) const override {
        return lookup(concept_table_, a.value(), b.value());
    }
    double relation_similarity(const RelationId& a, const RelationId& b) const override {
        return lookup(relation_table_, a.value(), b.value());
    }

private:
    using Table = std::map<std::pair<std::string, std::string>, double>;

    static std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
        return a < b ? std::pair{a, b} : std::pair{b, a};
    }
    static double lookup(const Table& t, const std::string& a, const std::string& b) {
        if (a == b) return 1.0;
        const auto it = t.find(key(a, b));
        return it == t.end() ? 0.0 : it->second;
    }

    Table concept_table_;
    Table relation_table_;
};

inline Predication pred(const std::string& s, const std::string& r, const std::string& o) {
    return Predication{ConceptId(s), RelationId(r), ConceptId(o)};
}

inline Hierarchy hierarchy(const oracle::Edges& edges) {
    std::vector<EdgeRecord> records;
    for (const auto& [child, parent] : edges) records.push_back({child, parent, 0});
    return Hierarchy::from_edges(records);
}

inline Corpus corpus(const oracle::Docs& docs) {
    std::vector<std::pair<DocumentId, std::vector<Predication>>> input;
    for (const auto& [id, triples] : docs) {
        std::vector<Predication> preds;
        for (const auto& [s, r, o] : triples) preds.push_back(pred(s, r, o));
        input.emplace_back(DocumentId(id), std::move(preds));
    }
    return Corpus::from_documents(std::move(input));
}

inline oracle::Weights weights(const SimWeights& w) {
    return {w.subject(), w.relation(), w.object()};
}

} // namespace predsim::testing
