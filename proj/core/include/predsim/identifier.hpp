#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace predsim {

/// Returns true when `token` can be used as an identifier: non-empty, with no
/// tab, carriage return or newline.
inline bool is_valid_token(std::string_view token) noexcept {
    return !token.empty() && token.find_first_of("\t\r\n") == std::string_view::npos;
}

/// Opaque text identifier. The tag keeps concepts, relations and documents
/// from being mixed up; comparison is exact byte comparison.
template <class Tag>
class Identifier {
public:
    explicit Identifier(std::string value) : value_(std::move(value)) {
        if (!is_valid_token(value_)) {
            throw std::invalid_argument("invalid identifier '" + value_ +
                                        "': must be non-empty and contain no tab or newline");
        }
    }

    const std::string& value() const noexcept { return value_; }
    std::string_view view() const noexcept { return value_; }

    friend bool operator==(const Identifier&, const Identifier&) = default;
    friend std::strong_ordering operator<=>(const Identifier& a, const Identifier& b) noexcept {
        return a.value_.compare(b.value_) <=> 0;
    }

private:
    std::string value_;
};

using ConceptId = Identifier<struct ConceptTag>;
using RelationId = Identifier<struct RelationTag>;
using DocumentId = Identifier<struct DocumentTag>;

} // namespace predsim

template <class Tag>
struct std::hash<predsim::Identifier<Tag>> {
    std::size_t operator()(const predsim::Identifier<Tag>& id) const noexcept {
        return std::hash<std::string_view>{}(id.view());
    }
};
