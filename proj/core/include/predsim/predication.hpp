#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "predsim/identifier.hpp"
#include "predsim/ontology.hpp"

namespace predsim {

/// A subject-relation-object triple.
struct Predication {
    ConceptId subject;
    RelationId relation;
    ConceptId object;

    /// `subject|relation|object`
    std::string literal() const;

    /// Parses `subject|relation|object`. Throws std::invalid_argument when the
    /// literal does not have exactly three non-empty slots or a slot is `?`.
    static Predication parse(std::string_view literal);

    friend bool operator==(const Predication&, const Predication&) = default;
    friend auto operator<=>(const Predication&, const Predication&) = default;
};

/// A predication with some slots left open. At least one slot is bound.
class PredicationPattern {
public:
    PredicationPattern(std::optional<ConceptId> subject, std::optional<RelationId> relation,
                       std::optional<ConceptId> object);
    explicit PredicationPattern(const Predication& p);

    /// Parses `s|r|o` where any slot may be the wildcard `?`.
    static PredicationPattern parse(std::string_view literal);

    const std::optional<ConceptId>& subject() const noexcept { return subject_; }
    const std::optional<RelationId>& relation() const noexcept { return relation_; }
    const std::optional<ConceptId>& object() const noexcept { return object_; }

    bool fully_bound() const noexcept { return subject_ && relation_ && object_; }
    std::string literal() const;

private:
    std::optional<ConceptId> subject_;
    std::optional<RelationId> relation_;
    std::optional<ConceptId> object_;
};

/// Subject, relation and object weights. Each is finite and non-negative and
/// their sum is positive.
class SimWeights {
public:
    SimWeights() = default;
    SimWeights(double ws, double wr, double wo);

    double subject() const noexcept { return ws_; }
    double relation() const noexcept { return wr_; }
    double object() const noexcept { return wo_; }

private:
    double ws_ = 1.0;
    double wr_ = 1.0;
    double wo_ = 1.0;
};

/// Where concept-concept and relation-relation scores come from. Real runs use
/// OntologySimilarity; tests can inject fixed tables. Implementations must be
/// safe to call concurrently, symmetric, and return values in [0, 1].
class SimilaritySource {
public:
    virtual ~SimilaritySource() = default;
    virtual double concept_similarity(const ConceptId& a, const ConceptId& b) const = 0;
    virtual double relation_similarity(const RelationId& a, const RelationId& b) const = 0;
};

/// Scores from a concept hierarchy and a relationship hierarchy.
class OntologySimilarity final : public SimilaritySource {
public:
    OntologySimilarity(const Hierarchy& concepts, const Hierarchy& relations)
        : concepts_(concepts), relations_(relations) {}

    double concept_similarity(const ConceptId& a, const ConceptId& b) const override;
    double relation_similarity(const RelationId& a, const RelationId& b) const override;

private:
    const Hierarchy& concepts_;
    const Hierarchy& relations_;
};

/// Weighted mean of the subject, relation and object similarities.
double predication_similarity(const Predication& p1, const Predication& p2, const SimWeights& w,
                              const SimilaritySource& source);

double predication_similarity(const Predication& p1, const Predication& p2, const SimWeights& w,
                              const Hierarchy& concepts, const Hierarchy& relations);

/// Weighted mean over the bound slots of `pattern` only; wildcard slots and
/// their weights drop out of both numerator and denominator. If every bound
/// slot carries weight zero the score is 0.
double pattern_similarity(const PredicationPattern& pattern, const Predication& p,
                          const SimWeights& w, const SimilaritySource& source);

} // namespace predsim
