#include "predsim/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>

#include "predsim/errors.hpp"
#include "predsim/tsv.hpp"

namespace predsim {
namespace {

void check_id(const std::string& token, std::size_t line, const char* what, bool literal_slot) {
    if (!is_valid_token(token)) {
        throw LoadError(std::string("invalid ") + what + " '" + token + "'", line);
    }
    if (literal_slot && token.find('|') != std::string::npos) {
        throw LoadError(std::string(what) + " '" + token + "' contains '|'", line);
    }
}

template <class T>
T with_source(const std::filesystem::path& path, T (*read)(std::istream&, std::string)) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open '" + path.string() + "'");
    try {
        return read(in, path.string());
    } catch (const LoadError& e) {
        throw LoadError(path.string(), e);
    }
}

} // namespace

Corpus Corpus::from_documents(std::vector<std::pair<DocumentId, std::vector<Predication>>> docs,
                              std::string source) {
    std::map<DocumentId, std::vector<Predication>> grouped;
    for (auto& [id, preds] : docs) {
        auto& bucket = grouped[id];
        bucket.insert(bucket.end(), std::make_move_iterator(preds.begin()),
                      std::make_move_iterator(preds.end()));
    }

    Corpus corpus;
    corpus.source_ = std::move(source);
    corpus.loaded_at_ = std::chrono::system_clock::now();
    for (auto& [id, preds] : grouped) {
        const std::size_t raw = preds.size();
        PredicationSet set(std::move(preds));
        corpus.stats_.duplicates_dropped += raw - set.size();
        if (set.empty()) {
            corpus.skipped_.push_back(id);
            continue;
        }
        corpus.stats_.predications += set.size();
        corpus.docs_.emplace(id, std::move(set));
    }
    corpus.stats_.documents = corpus.docs_.size();
    if (corpus.docs_.empty()) throw LoadError("corpus has no documents with predications");
    return corpus;
}

bool Corpus::is_skipped(const DocumentId& id) const {
    return std::binary_search(skipped_.begin(), skipped_.end(), id);
}

const PredicationSet* Corpus::find(const DocumentId& id) const {
    const auto it = docs_.find(id);
    return it == docs_.end() ? nullptr : &it->second;
}

Corpus load_corpus(std::span<const CorpusRecord> records, std::string source) {
    std::vector<std::pair<DocumentId, std::vector<Predication>>> docs;
    docs.reserve(records.size());
    for (const auto& r : records) {
        check_id(r.document, r.line, "document id", false);
        check_id(r.subject, r.line, "subject", true);
        check_id(r.relation, r.line, "relation", true);
        check_id(r.object, r.line, "object", true);
        docs.emplace_back(DocumentId(r.document),
                          std::vector<Predication>{Predication{
                              ConceptId(r.subject), RelationId(r.relation), ConceptId(r.object)}});
    }
    return Corpus::from_documents(std::move(docs), std::move(source));
}

Corpus read_corpus(std::istream& in, std::string source) {
    std::vector<CorpusRecord> records;
    for_each_tsv_record(in, [&](std::size_t line, const std::vector<std::string_view>& f) {
        if (f.size() != 4) throw LoadError("expected 4 fields", line);
        records.push_back({std::string(f[0]), std::string(f[1]), std::string(f[2]),
                           std::string(f[3]), line});
    });
    return load_corpus(records, std::move(source));
}

Corpus read_corpus_file(const std::filesystem::path& path) {
    return with_source<Corpus>(path, &read_corpus);
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
    for (const auto& [id, set] : corpus.documents()) {
        for (const auto& p : set) {
            out << id.value() << '\t' << p.subject.value() << '\t' << p.relation.value() << '\t'
                << p.object.value() << '\n';
        }
    }
}

std::span<const DocumentId> GoldStandard::related(const DocumentId& seed) const {
    const auto it = related_.find(seed);
    if (it == related_.end()) return {};
    return it->second;
}

GoldLoad load_gold(std::span<const GoldRecord> records) {
    if (records.empty()) throw LoadError("no gold records");

    struct Entry {
        std::size_t rank;
        std::string related;
    };
    std::map<std::string, std::vector<Entry>> by_seed;
    for (const auto& r : records) {
        check_id(r.seed, r.line, "seed id", false);
        check_id(r.related, r.line, "related id", false);
        if (r.rank == 0) throw LoadError("rank must be a positive integer", r.line);
        if (r.seed == r.related) {
            throw LoadError("seed in own related list: '" + r.seed + "'", r.line);
        }
        by_seed[r.seed].push_back({r.rank, r.related});
    }

    GoldLoad out{GoldStandard({}), {}};
    GoldStandard::Map map;
    for (auto& [seed, entries] : by_seed) {
        std::stable_sort(entries.begin(), entries.end(),
                         [](const Entry& a, const Entry& b) { return a.rank < b.rank; });
        for (std::size_t i = 1; i < entries.size(); ++i) {
            if (entries[i].rank == entries[i - 1].rank) {
                throw LoadError("duplicate rank " + std::to_string(entries[i].rank) +
                                " for seed '" + seed + "'");
            }
        }
        std::vector<DocumentId> related;
        std::set<std::string> seen;
        for (const auto& e : entries) {
            if (!seen.insert(e.related).second) {
                out.warnings.push_back("seed '" + seed + "' lists '" + e.related +
                                       "' more than once; keeping its best rank");
                continue;
            }
            related.emplace_back(e.related);
        }
        map.emplace(DocumentId(seed), std::move(related));
    }
    out.gold = GoldStandard(std::move(map));
    return out;
}

GoldLoad read_gold(std::istream& in) {
    std::vector<GoldRecord> records;
    for_each_tsv_record(in, [&](std::size_t line, const std::vector<std::string_view>& f) {
        if (f.size() != 3) throw LoadError("expected 3 fields", line);
        std::size_t rank = 0;
        const auto [ptr, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), rank);
        if (ec != std::errc{} || ptr != f[2].data() + f[2].size() || rank == 0) {
            throw LoadError("rank must be a positive integer, got '" + std::string(f[2]) + "'", line);
        }
        records.push_back({std::string(f[0]), std::string(f[1]), rank, line});
    });
    return load_gold(records);
}

GoldLoad read_gold_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open '" + path.string() + "'");
    try {
        return read_gold(in);
    } catch (const LoadError& e) {
        throw LoadError(path.string(), e);
    }
}

} // namespace predsim
