#include "predsim/ontology.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <string>
#include <utility>

#include "predsim/errors.hpp"
#include "predsim/tsv.hpp"

namespace predsim {

struct Hierarchy::Memo {
    explicit Memo(std::size_t n) : once(new std::once_flag[n]), sets(n) {}

    std::unique_ptr<std::once_flag[]> once;
    std::vector<std::vector<std::uint32_t>> sets;
};

bool AncestorSet::contains(std::string_view id) const {
    return std::binary_search(members.begin(), members.end(), id);
}

Hierarchy::Hierarchy() : memo_(std::make_unique<Memo>(0)) {}
Hierarchy::~Hierarchy() = default;
Hierarchy::Hierarchy(Hierarchy&&) noexcept = default;
Hierarchy& Hierarchy::operator=(Hierarchy&&) noexcept = default;

namespace {

// Kahn's algorithm over child->parent edges; any node left unprocessed lies
// on, or below, a cycle.
bool detect_cycle(const std::vector<std::vector<std::uint32_t>>& parents) {
    const std::size_t n = parents.size();
    std::vector<std::uint32_t> indegree(n, 0);
    for (const auto& ps : parents) {
        for (auto p : ps) ++indegree[p];
    }
    std::vector<std::uint32_t> ready;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (indegree[i] == 0) ready.push_back(i);
    }
    std::size_t processed = 0;
    while (!ready.empty()) {
        const auto node = ready.back();
        ready.pop_back();
        ++processed;
        for (auto p : parents[node]) {
            if (--indegree[p] == 0) ready.push_back(p);
        }
    }
    return processed != n;
}

void check_token(const std::string& token, std::size_t line, const char* what) {
    if (!is_valid_token(token)) {
        throw LoadError(std::string("invalid ") + what + " identifier '" + token + "'", line);
    }
}

} // namespace

Hierarchy Hierarchy::from_edges(std::span<const EdgeRecord> edges,
                                std::span<const std::string> isolated_nodes) {
    Hierarchy h;
    auto intern = [&h](const std::string& name) {
        auto [it, inserted] = h.index_.try_emplace(name, static_cast<std::uint32_t>(h.names_.size()));
        if (inserted) {
            h.names_.push_back(name);
            h.parents_.emplace_back();
        }
        return it->second;
    };

    for (const auto& e : edges) {
        check_token(e.child, e.line, "child");
        check_token(e.parent, e.line, "parent");
        if (e.child == e.parent) {
            throw LoadError("self-loop edge on '" + e.child + "'", e.line);
        }
        const auto c = intern(e.child);
        const auto p = intern(e.parent);
        h.parents_[c].push_back(p);
    }
    for (const auto& name : isolated_nodes) {
        check_token(name, 0, "node");
        intern(name);
    }
    for (auto& ps : h.parents_) {
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        h.edge_count_ += ps.size();
    }
    h.cyclic_ = detect_cycle(h.parents_);
    h.memo_ = std::make_unique<Memo>(h.names_.size());
    return h;
}

bool Hierarchy::contains(std::string_view id) const { return find_index(id) != nullptr; }

const std::uint32_t* Hierarchy::find_index(std::string_view id) const {
    const auto it = index_.find(id);
    return it == index_.end() ? nullptr : &it->second;
}

std::vector<std::pair<std::string, std::string>> Hierarchy::edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edge_count_);
    for (std::size_t c = 0; c < parents_.size(); ++c) {
        for (auto p : parents_[c]) out.emplace_back(names_[c], names_[p]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<std::uint32_t>& Hierarchy::ancestor_indices(std::uint32_t node) const {
    std::call_once(memo_->once[node], [this, node] {
        std::vector<std::uint32_t> found{node};
        std::vector<std::uint32_t> stack{node};
        // Ancestor sets are usually small, so a sorted "seen" vector beats a
        // node-count-sized bitmap here.
        std::vector<std::uint32_t> seen{node};
        while (!stack.empty()) {
            const auto current = stack.back();
            stack.pop_back();
            for (auto p : parents_[current]) {
                auto pos = std::lower_bound(seen.begin(), seen.end(), p);
                if (pos != seen.end() && *pos == p) continue;
                seen.insert(pos, p);
                found.push_back(p);
                stack.push_back(p);
            }
        }
        std::sort(found.begin(), found.end());
        memo_->sets[node] = std::move(found);
    });
    return memo_->sets[node];
}

AncestorSet Hierarchy::ancestors(std::string_view id) const {
    AncestorSet out{std::string(id), {}};
    if (const auto* idx = find_index(id)) {
        const auto& members = ancestor_indices(*idx);
        out.members.reserve(members.size());
        for (auto m : members) out.members.push_back(names_[m]);
        std::sort(out.members.begin(), out.members.end());
    } else {
        out.members.emplace_back(id);
    }
    return out;
}

double Hierarchy::similarity(std::string_view a, std::string_view b) const {
    if (a == b) return 1.0;
    const auto* ia = find_index(a);
    const auto* ib = find_index(b);
    // An unknown id has ancestor set {id}, which shares nothing with any
    // other id's set.
    if (ia == nullptr || ib == nullptr) return 0.0;
    return jaccard_index(ancestor_indices(*ia), ancestor_indices(*ib));
}

double jaccard_index(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) noexcept {
    if (a.empty() && b.empty()) return 1.0;
    std::size_t shared = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++shared;
            ++ia;
            ++ib;
        }
    }
    const std::size_t total = a.size() + b.size() - shared;
    return static_cast<double>(shared) / static_cast<double>(total);
}

HierarchyLoad load_hierarchy(std::span<const EdgeRecord> records) {
    HierarchyLoad out{Hierarchy::from_edges(records), {}};
    if (out.hierarchy.has_cycle()) {
        out.warnings.push_back("hierarchy contains a cycle; nodes on it are treated as mutual ancestors");
    }
    return out;
}

HierarchyLoad read_hierarchy(std::istream& in) {
    std::vector<EdgeRecord> records;
    for_each_tsv_record(in, [&](std::size_t line, const std::vector<std::string_view>& fields) {
        if (fields.size() != 2) {
            throw LoadError("expected 2 fields, got " + std::to_string(fields.size()), line);
        }
        if (fields[0].empty() || fields[1].empty()) throw LoadError("empty identifier", line);
        records.push_back({std::string(fields[0]), std::string(fields[1]), line});
    });
    return load_hierarchy(records);
}

HierarchyLoad read_hierarchy_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open hierarchy file '" + path.string() + "'");
    try {
        return read_hierarchy(in);
    } catch (const LoadError& e) {
        throw LoadError(path.string(), e);
    }
}

AncestorSet ancestors(const Hierarchy& h, std::string_view id) { return h.ancestors(id); }

double concept_similarity(const Hierarchy& h, const ConceptId& c1, const ConceptId& c2) {
    return h.similarity(c1.view(), c2.view());
}

double relation_similarity(const Hierarchy& h, const RelationId& r1, const RelationId& r2) {
    return h.similarity(r1.view(), r2.view());
}

} // namespace predsim
