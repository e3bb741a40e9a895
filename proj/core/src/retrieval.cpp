#include "predsim/retrieval.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "predsim/errors.hpp"
#include "predsim/parallel.hpp"

namespace predsim {
namespace {

void check_top(std::size_t top) {
    if (top == 0) throw std::invalid_argument("top-n must be positive");
}

template <class T, class Less>
std::vector<T> take_top(std::vector<T> items, std::size_t top, Less less) {
    const std::size_t keep = std::min(top, items.size());
    std::partial_sort(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(keep), items.end(),
                      less);
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(keep), items.end());
    for (std::size_t i = 0; i < items.size(); ++i) items[i].rank = i + 1;
    return items;
}

bool by_score_then_id(const RankedDocument& a, const RankedDocument& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.id < b.id;
}

// `literal` is precomputed so the comparator does not rebuild strings.
struct Candidate {
    const Predication* predication;
    std::string literal;
    double score = 0.0;
    std::size_t rank = 0;
};

} // namespace

std::vector<RankedDocument> related_documents(const Corpus& corpus, const DocumentId& seed,
                                              std::size_t top_n, const Scorer& scorer,
                                              std::optional<std::size_t> workers) {
    check_top(top_n);
    const auto* seed_set = corpus.find(seed);
    if (seed_set == nullptr) {
        if (corpus.is_skipped(seed)) {
            throw DegenerateInput("seed document '" + seed.value() + "' has no predications");
        }
        throw UnknownDocument(seed.value());
    }

    std::vector<std::pair<const DocumentId*, const PredicationSet*>> others;
    others.reserve(corpus.size());
    for (const auto& [id, set] : corpus.documents()) {
        if (id != seed) others.emplace_back(&id, &set);
    }
    std::vector<RankedDocument> scored(others.size(), RankedDocument{seed, 0.0, 0});
    parallel_for(others.size(), workers.value_or(scorer.workers()), [&](std::size_t i) {
        const auto& [id, set] = others[i];
        scored[i] = RankedDocument{*id, scorer.documents(seed, *seed_set, *id, *set), 0};
    });
    return take_top(std::move(scored), top_n, by_score_then_id);
}

std::vector<RankedDocument> query_documents(const Corpus& corpus, const PredicationSet& query,
                                            std::size_t top_n, const Scorer& scorer) {
    check_top(top_n);
    if (query.empty()) throw DegenerateInput("query predication set is empty");

    std::vector<std::pair<const DocumentId*, const PredicationSet*>> docs;
    docs.reserve(corpus.size());
    for (const auto& [id, set] : corpus.documents()) docs.emplace_back(&id, &set);
    std::vector<RankedDocument> scored(docs.size(), RankedDocument{*docs.front().first, 0.0, 0});
    parallel_for(docs.size(), scorer.workers(), [&](std::size_t i) {
        scored[i] = RankedDocument{*docs[i].first, scorer.sets(query, *docs[i].second), 0};
    });
    return take_top(std::move(scored), top_n, by_score_then_id);
}

std::vector<RankedPredication> related_predications(const Corpus& corpus,
                                                    const PredicationPattern& pattern,
                                                    std::size_t top_k, const Scorer& scorer) {
    check_top(top_k);
    std::map<Predication, std::vector<DocumentId>> containing;
    for (const auto& [id, set] : corpus.documents()) {
        for (const auto& p : set) containing[p].push_back(id);
    }

    std::vector<Candidate> candidates;
    candidates.reserve(containing.size());
    for (const auto& [p, docs] : containing) candidates.push_back({&p, p.literal(), 0.0, 0});

    std::optional<Predication> bound;
    if (pattern.fully_bound()) {
        bound = Predication{*pattern.subject(), *pattern.relation(), *pattern.object()};
    }
    parallel_for(candidates.size(), scorer.workers(), [&](std::size_t i) {
        const auto& p = *candidates[i].predication;
        candidates[i].score = bound ? scorer.predication(*bound, p) : scorer.pattern(pattern, p);
    });

    auto ranked = take_top(std::move(candidates), top_k, [](const Candidate& a, const Candidate& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.literal < b.literal;
    });
    std::vector<RankedPredication> out;
    out.reserve(ranked.size());
    for (const auto& c : ranked) {
        out.push_back({*c.predication, c.score, c.rank, containing.at(*c.predication)});
    }
    return out;
}

void write_ranked(std::ostream& out, const std::vector<RankedDocument>& results) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::fixed << std::setprecision(6);
    for (const auto& r : results) out << r.rank << '\t' << r.id.value() << '\t' << r.score << '\n';
    out.flags(flags);
    out.precision(precision);
}

void write_ranked(std::ostream& out, const std::vector<RankedPredication>& results) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::fixed << std::setprecision(6);
    for (const auto& r : results) {
        out << r.rank << '\t' << r.predication.literal() << '\t' << r.score << '\t';
        for (std::size_t i = 0; i < r.documents.size(); ++i) {
            if (i != 0) out << ',';
            out << r.documents[i].value();
        }
        out << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

} // namespace predsim
