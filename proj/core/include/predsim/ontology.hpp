#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "predsim/identifier.hpp"

namespace predsim {

/// One `child -> parent` edge as read from a hierarchy file. `line` is used
/// for error messages and may be 0 for programmatic input.
struct EdgeRecord {
    std::string child;
    std::string parent;
    std::size_t line = 0;
};

/// Self-inclusive ancestor set of one identifier. Members are sorted.
struct AncestorSet {
    std::string owner;
    std::vector<std::string> members;

    bool contains(std::string_view id) const;
};

/// Immutable parent graph over concept or relationship identifiers.
///
/// A node may have several parents and the graph may contain cycles; ancestors
/// are defined by reachability along child->parent edges, so every node on a
/// cycle is an ancestor of every other node on it. Ancestor sets are computed
/// on first use and memoized. All const member functions are safe to call
/// concurrently.
class Hierarchy {
public:
    Hierarchy();
    ~Hierarchy();
    Hierarchy(Hierarchy&&) noexcept;
    Hierarchy& operator=(Hierarchy&&) noexcept;
    Hierarchy(const Hierarchy&) = delete;
    Hierarchy& operator=(const Hierarchy&) = delete;

    /// Builds a hierarchy from edges plus optional isolated nodes. Duplicate
    /// edges are collapsed. Throws LoadError on an invalid token or a
    /// self-loop.
    static Hierarchy from_edges(std::span<const EdgeRecord> edges,
                                std::span<const std::string> isolated_nodes = {});

    std::size_t node_count() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool contains(std::string_view id) const;
    bool has_cycle() const noexcept { return cyclic_; }

    /// All distinct edges as (child, parent), sorted.
    std::vector<std::pair<std::string, std::string>> edges() const;

    /// `{id}` plus every node reachable from `id`. Unknown ids yield `{id}`.
    AncestorSet ancestors(std::string_view id) const;

    /// Jaccard index of the two self-inclusive ancestor sets.
    double similarity(std::string_view a, std::string_view b) const;

private:
    struct StringHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const noexcept {
            return std::hash<std::string_view>{}(s);
        }
    };
    struct Memo;

    const std::uint32_t* find_index(std::string_view id) const;
    const std::vector<std::uint32_t>& ancestor_indices(std::uint32_t node) const;

    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t, StringHash, std::equal_to<>> index_;
    std::vector<std::vector<std::uint32_t>> parents_;
    std::size_t edge_count_ = 0;
    bool cyclic_ = false;
    std::unique_ptr<Memo> memo_;
};

/// A loaded hierarchy together with non-fatal diagnostics (cycles).
struct HierarchyLoad {
    Hierarchy hierarchy;
    std::vector<std::string> warnings;
};

HierarchyLoad load_hierarchy(std::span<const EdgeRecord> records);

/// Reads `child<TAB>parent` lines. Throws LoadError naming the line on a
/// malformed record.
HierarchyLoad read_hierarchy(std::istream& in);
HierarchyLoad read_hierarchy_file(const std::filesystem::path& path);

AncestorSet ancestors(const Hierarchy& h, std::string_view id);

/// |A(c1) ∩ A(c2)| / |A(c1) ∪ A(c2)| over self-inclusive ancestor sets.
double concept_similarity(const Hierarchy& h, const ConceptId& c1, const ConceptId& c2);

/// Same measure as concept_similarity, over the relationship hierarchy.
double relation_similarity(const Hierarchy& h, const RelationId& r1, const RelationId& r2);

/// Jaccard index of two sorted, duplicate-free index sets. Both empty gives 1.
double jaccard_index(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) noexcept;

} // namespace predsim
