#include "predsim/predication.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace predsim {
namespace {

constexpr std::string_view kWildcard = "?";

std::array<std::string_view, 3> split_literal(std::string_view literal) {
    std::array<std::string_view, 3> slots;
    std::size_t start = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto bar = literal.find('|', start);
        if (i < 2) {
            if (bar == std::string_view::npos) {
                throw std::invalid_argument("predication literal '" + std::string(literal) +
                                            "' must have the form subject|relation|object");
            }
            slots[i] = literal.substr(start, bar - start);
            start = bar + 1;
        } else {
            if (bar != std::string_view::npos) {
                throw std::invalid_argument("predication literal '" + std::string(literal) +
                                            "' has more than three slots");
            }
            slots[i] = literal.substr(start);
        }
    }
    for (auto slot : slots) {
        if (!is_valid_token(slot)) {
            throw std::invalid_argument("predication literal '" + std::string(literal) +
                                        "' has an empty or invalid slot");
        }
    }
    return slots;
}

template <class Id>
std::optional<Id> bind(std::string_view slot) {
    if (slot == kWildcard) return std::nullopt;
    return Id(std::string(slot));
}

template <class Id>
std::string_view show(const std::optional<Id>& slot) {
    return slot ? slot->view() : kWildcard;
}

} // namespace

std::string Predication::literal() const {
    std::string out;
    out.reserve(subject.view().size() + relation.view().size() + object.view().size() + 2);
    out.append(subject.view()).append("|").append(relation.view()).append("|").append(object.view());
    return out;
}

Predication Predication::parse(std::string_view literal) {
    const auto slots = split_literal(literal);
    for (auto slot : slots) {
        if (slot == kWildcard) {
            throw std::invalid_argument("predication literal '" + std::string(literal) +
                                        "' contains a wildcard; all slots must be bound");
        }
    }
    return Predication{ConceptId(std::string(slots[0])), RelationId(std::string(slots[1])),
                       ConceptId(std::string(slots[2]))};
}

PredicationPattern::PredicationPattern(std::optional<ConceptId> subject,
                                       std::optional<RelationId> relation,
                                       std::optional<ConceptId> object)
    : subject_(std::move(subject)), relation_(std::move(relation)), object_(std::move(object)) {
    if (!subject_ && !relation_ && !object_) {
        throw std::invalid_argument("pattern must bind at least one slot");
    }
}

PredicationPattern::PredicationPattern(const Predication& p)
    : subject_(p.subject), relation_(p.relation), object_(p.object) {}

PredicationPattern PredicationPattern::parse(std::string_view literal) {
    const auto slots = split_literal(literal);
    return PredicationPattern(bind<ConceptId>(slots[0]), bind<RelationId>(slots[1]),
                              bind<ConceptId>(slots[2]));
}

std::string PredicationPattern::literal() const {
    std::string out;
    out.append(show(subject_)).append("|").append(show(relation_)).append("|").append(show(object_));
    return out;
}

SimWeights::SimWeights(double ws, double wr, double wo) : ws_(ws), wr_(wr), wo_(wo) {
    for (double w : {ws, wr, wo}) {
        if (!std::isfinite(w) || w < 0.0) {
            throw std::invalid_argument("weights must be finite and non-negative");
        }
    }
    if (!(ws + wr + wo > 0.0)) throw std::invalid_argument("weights must not all be zero");
}

double OntologySimilarity::concept_similarity(const ConceptId& a, const ConceptId& b) const {
    return concepts_.similarity(a.view(), b.view());
}

double OntologySimilarity::relation_similarity(const RelationId& a, const RelationId& b) const {
    return relations_.similarity(a.view(), b.view());
}

double predication_similarity(const Predication& p1, const Predication& p2, const SimWeights& w,
                              const SimilaritySource& source) {
    const double s = source.concept_similarity(p1.subject, p2.subject);
    const double r = source.relation_similarity(p1.relation, p2.relation);
    const double o = source.concept_similarity(p1.object, p2.object);
    return (w.subject() * s + w.relation() * r + w.object() * o) /
           (w.subject() + w.relation() + w.object());
}

double predication_similarity(const Predication& p1, const Predication& p2, const SimWeights& w,
                              const Hierarchy& concepts, const Hierarchy& relations) {
    return predication_similarity(p1, p2, w, OntologySimilarity(concepts, relations));
}

double pattern_similarity(const PredicationPattern& pattern, const Predication& p,
                          const SimWeights& w, const SimilaritySource& source) {
    double numerator = 0.0;
    double denominator = 0.0;
    if (pattern.subject()) {
        numerator += w.subject() * source.concept_similarity(*pattern.subject(), p.subject);
        denominator += w.subject();
    }
    if (pattern.relation()) {
        numerator += w.relation() * source.relation_similarity(*pattern.relation(), p.relation);
        denominator += w.relation();
    }
    if (pattern.object()) {
        numerator += w.object() * source.concept_similarity(*pattern.object(), p.object);
        denominator += w.object();
    }
    return denominator > 0.0 ? numerator / denominator : 0.0;
}

} // namespace predsim
