#include "brute_force.hpp"

#include <algorithm>
#include <iterator>

namespace oracle {

std::set<std::string> ancestors(const Edges& edges, const std::string& node) {
    std::set<std::string> found{node};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [child, parent] : edges) {
            if (found.count(child) && !found.count(parent)) {
                found.insert(parent);
                grew = true;
            }
        }
    }
    return found;
}

double jaccard(const Edges& edges, const std::string& a, const std::string& b) {
    const auto sa = ancestors(edges, a);
    const auto sb = ancestors(edges, b);
    std::vector<std::string> shared;
    std::vector<std::string> all;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(shared));
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(all));
    return static_cast<double>(shared.size()) / static_cast<double>(all.size());
}

double predication(const Edges& concepts, const Edges& relations, const Triple& a,
                   const Triple& b, const Weights& w) {
    const double s = jaccard(concepts, std::get<0>(a), std::get<0>(b));
    const double r = jaccard(relations, std::get<1>(a), std::get<1>(b));
    const double o = jaccard(concepts, std::get<2>(a), std::get<2>(b));
    return (w.ws * s + w.wr * r + w.wo * o) / (w.ws + w.wr + w.wo);
}

namespace {

std::vector<Triple> as_set(std::vector<Triple> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

double best_match_sum(const Edges& concepts, const Edges& relations,
                      const std::vector<Triple>& from, const std::vector<Triple>& to,
                      const Weights& w, double threshold) {
    double sum = 0.0;
    for (const auto& k : from) {
        double best = 0.0;
        for (const auto& p : to) best = std::max(best, predication(concepts, relations, k, p, w));
        sum += best < threshold ? 0.0 : best;
    }
    return sum;
}

} // namespace

double set_similarity(const Edges& concepts, const Edges& relations,
                      const std::vector<Triple>& s1, const std::vector<Triple>& s2,
                      const Weights& w, double threshold) {
    const auto a = as_set(s1);
    const auto b = as_set(s2);
    const double total = best_match_sum(concepts, relations, a, b, w, threshold) +
                         best_match_sum(concepts, relations, b, a, w, threshold);
    return total / static_cast<double>(a.size() + b.size());
}

std::vector<std::pair<std::string, double>> rank_related(const Edges& concepts,
                                                         const Edges& relations, const Docs& docs,
                                                         const std::string& seed,
                                                         const Weights& w, double threshold) {
    std::vector<std::pair<std::string, double>> out;
    for (const auto& [id, triples] : docs) {
        if (id == seed || triples.empty()) continue;
        out.emplace_back(id, set_similarity(concepts, relations, docs.at(seed), triples, w,
                                            threshold));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return out;
}

} // namespace oracle
