#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace predsim {

/// Failure while reading a hierarchy, corpus or gold file. `line()` is the
/// 1-based line number of the offending record, or 0 when the error is not
/// tied to a single line.
class LoadError : public std::runtime_error {
public:
    explicit LoadError(const std::string& message, std::size_t line = 0)
        : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    /// Prefixes `inner`'s message with the file it came from, keeping the line.
    LoadError(const std::string& source, const LoadError& inner)
        : std::runtime_error(source + ": " + inner.what()), line_(inner.line()) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An input that a similarity formula is undefined on, such as an empty
/// predication set.
class DegenerateInput : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A document id that is not part of the corpus.
class UnknownDocument : public std::out_of_range {
public:
    explicit UnknownDocument(std::string id)
        : std::out_of_range("unknown document '" + id + "'"), id_(std::move(id)) {}

    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

/// Gold-standard seeds that are absent from the corpus.
class MissingSeeds : public std::out_of_range {
public:
    explicit MissingSeeds(std::vector<std::string> seeds)
        : std::out_of_range(describe(seeds)), seeds_(std::move(seeds)) {}

    const std::vector<std::string>& seeds() const noexcept { return seeds_; }

private:
    static std::string describe(const std::vector<std::string>& seeds) {
        std::string out = "gold seeds missing from corpus:";
        for (const auto& s : seeds) out += " " + s;
        return out;
    }

    std::vector<std::string> seeds_;
};

} // namespace predsim
