#include "predsim/docsim.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "predsim/errors.hpp"

namespace predsim {

PredicationSet::PredicationSet(std::vector<Predication> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

PredicationSet::PredicationSet(std::initializer_list<Predication> members)
    : PredicationSet(std::vector<Predication>(members)) {}

bool PredicationSet::contains(const Predication& p) const {
    return std::binary_search(members_.begin(), members_.end(), p);
}

void SimConfig::validate() const {
    if (!(pair_threshold >= 0.0 && pair_threshold <= 1.0)) {
        throw std::invalid_argument("pair threshold must be in [0, 1], got " +
                                    std::to_string(pair_threshold));
    }
}

void throw_if_empty_sets(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) {
        throw DegenerateInput("set similarity is undefined for an empty predication set");
    }
}

double set_similarity(const PredicationSet& s1, const PredicationSet& s2, const SimConfig& cfg,
                      const SimilaritySource& source, std::size_t workers) {
    cfg.validate();
    return best_match_average(
        s1.members(), s2.members(), cfg.pair_threshold,
        [&](const Predication& a, const Predication& b) {
            return predication_similarity(a, b, cfg.weights, source);
        },
        workers);
}

double set_similarity(const PredicationSet& s1, const PredicationSet& s2, const SimConfig& cfg,
                      const Hierarchy& concepts, const Hierarchy& relations,
                      std::size_t workers) {
    return set_similarity(s1, s2, cfg, OntologySimilarity(concepts, relations), workers);
}

} // namespace predsim
