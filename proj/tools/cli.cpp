#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "predsim/corpus.hpp"
#include "predsim/errors.hpp"
#include "predsim/eval.hpp"
#include "predsim/ontology.hpp"
#include "predsim/retrieval.hpp"
#include "predsim/scorer.hpp"

namespace predsim::cli {
namespace {

struct CommonOptions {
    std::string concepts;
    std::string relations;
    std::string predications;
    double ws = 1.0;
    double wr = 1.0;
    double wo = 1.0;
    double threshold = 0.0;
    std::size_t workers = 1;
    std::string output;
    bool no_cache = false;
};

const CLI::Validator kPositive(
    [](std::string& value) -> std::string {
        if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos ||
            value.find_first_not_of('0') == std::string::npos) {
            return "must be a positive integer, got '" + value + "'";
        }
        return {};
    },
    "POSITIVE");

void add_common(CLI::App& cmd, CommonOptions& o) {
    cmd.add_option("--concepts", o.concepts, "Concept hierarchy TSV (child<TAB>parent)")->required();
    cmd.add_option("--relations", o.relations, "Relation hierarchy TSV (child<TAB>parent)")->required();
    cmd.add_option("--predications", o.predications,
                   "Corpus TSV (doc<TAB>subject<TAB>relation<TAB>object)")
        ->required();
    cmd.add_option("--ws", o.ws, "Subject weight")->capture_default_str();
    cmd.add_option("--wr", o.wr, "Relation weight")->capture_default_str();
    cmd.add_option("--wo", o.wo, "Object weight")->capture_default_str();
    cmd.add_option("--threshold", o.threshold, "Best-match threshold in [0,1]")
        ->capture_default_str();
    cmd.add_option("--workers", o.workers, "Worker threads")
        ->check(kPositive)
        ->capture_default_str();
    cmd.add_option("-o,--output", o.output, "Write results here instead of stdout");
    cmd.add_flag("--no-cache", o.no_cache, "Disable concept/relation pair memoization");
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

SimConfig make_config(const CommonOptions& o) {
    SimConfig cfg;
    try {
        cfg.weights = SimWeights(o.ws, o.wr, o.wo);
        cfg.pair_threshold = o.threshold;
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (o.no_cache) cfg.cache = CachePolicy::none();
    return cfg;
}

/// Everything a command needs once the input files are read.
struct Loaded {
    HierarchyLoad concepts;
    HierarchyLoad relations;
    Corpus corpus;
};

Loaded load_inputs(const CommonOptions& o, std::ostream& err) {
    Loaded in{read_hierarchy_file(o.concepts), read_hierarchy_file(o.relations),
              read_corpus_file(o.predications)};
    for (const auto& w : in.concepts.warnings) err << "warning: " << o.concepts << ": " << w << '\n';
    for (const auto& w : in.relations.warnings) err << "warning: " << o.relations << ": " << w << '\n';
    const auto& s = in.corpus.stats();
    err << "loaded " << s.documents << " documents, " << s.predications << " predications ("
        << s.duplicates_dropped << " duplicates dropped); " << in.concepts.hierarchy.node_count()
        << " concepts, " << in.relations.hierarchy.node_count() << " relations\n";
    for (const auto& id : in.corpus.skipped()) {
        err << "warning: document '" << id.value() << "' has no predications; skipped\n";
    }
    return in;
}

/// Runs `emit` against stdout or the --output file.
int with_output(const CommonOptions& o, std::ostream& out, std::ostream& err,
                const std::function<void(std::ostream&)>& emit) {
    if (o.output.empty()) {
        emit(out);
        return kOk;
    }
    std::ofstream file(o.output);
    if (!file) {
        err << "error: cannot write '" << o.output << "'\n";
        return kLoadError;
    }
    emit(file);
    return kOk;
}

std::vector<Predication> parse_query(const std::vector<std::string>& literals) {
    std::vector<Predication> preds;
    for (const auto& lit : literals) {
        try {
            preds.push_back(Predication::parse(lit));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return preds;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Predication-based semantic document retrieval"};
    app.require_subcommand(1);

    CommonOptions common;
    std::size_t top = 10;

    auto* related = app.add_subcommand("related", "Rank documents related to a seed document");
    std::string seed;
    add_common(*related, common);
    related->add_option("--seed", seed, "Seed document id")->required();
    related->add_option("--top", top, "Number of results")->check(kPositive)->capture_default_str();

    auto* query = app.add_subcommand("query", "Rank documents against query predications");
    std::vector<std::string> pred_literals;
    add_common(*query, common);
    query->add_option("--pred", pred_literals, "Query predication subject|relation|object (repeatable)")
        ->required();
    query->add_option("--top", top, "Number of results")->check(kPositive)->capture_default_str();

    auto* find = app.add_subcommand("find", "Rank corpus predications against a pattern ('?' = any)");
    std::string pattern_literal;
    add_common(*find, common);
    find->add_option("--pattern", pattern_literal, "Pattern subject|relation|object")->required();
    find->add_option("--top", top, "Number of results")->check(kPositive)->capture_default_str();

    auto* eval = app.add_subcommand("eval", "Precision/recall/F-measure sweep against a gold standard");
    std::string gold_path;
    std::string per_seed_path;
    std::vector<std::size_t> cutoffs{5, 10, 15, 20};
    add_common(*eval, common);
    eval->add_option("--gold", gold_path, "Gold TSV (seed<TAB>related<TAB>rank)")->required();
    eval->add_option("--at", cutoffs, "Comma-separated top-n cutoffs")
        ->delimiter(',')
        ->check(kPositive)
        ->capture_default_str();
    eval->add_option("--per-seed", per_seed_path, "Also write per-seed CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        const auto cfg = make_config(common);

        if (*related) {
            auto in = load_inputs(common, err);
            OntologySimilarity source(in.concepts.hierarchy, in.relations.hierarchy);
            Scorer scorer(source, cfg, common.workers);
            const auto results = related_documents(in.corpus, DocumentId(seed), top, scorer);
            return with_output(common, out, err, [&](std::ostream& s) { write_ranked(s, results); });
        }
        if (*query) {
            const PredicationSet query_set(parse_query(pred_literals));
            auto in = load_inputs(common, err);
            OntologySimilarity source(in.concepts.hierarchy, in.relations.hierarchy);
            Scorer scorer(source, cfg, common.workers);
            const auto results = query_documents(in.corpus, query_set, top, scorer);
            return with_output(common, out, err, [&](std::ostream& s) { write_ranked(s, results); });
        }
        if (*find) {
            std::optional<PredicationPattern> pattern;
            try {
                pattern = PredicationPattern::parse(pattern_literal);
            } catch (const std::invalid_argument& e) {
                throw UsageError("pattern '" + pattern_literal + "': " + e.what());
            }
            auto in = load_inputs(common, err);
            OntologySimilarity source(in.concepts.hierarchy, in.relations.hierarchy);
            Scorer scorer(source, cfg, common.workers);
            const auto results = related_predications(in.corpus, *pattern, top, scorer);
            return with_output(common, out, err, [&](std::ostream& s) { write_ranked(s, results); });
        }
        if (*eval) {
            auto in = load_inputs(common, err);
            const auto gold = read_gold_file(gold_path);
            for (const auto& w : gold.warnings) err << "warning: " << gold_path << ": " << w << '\n';
            OntologySimilarity source(in.concepts.hierarchy, in.relations.hierarchy);
            Scorer scorer(source, cfg, common.workers);
            const auto report = run_eval(in.corpus, gold.gold, cutoffs, scorer);
            for (const auto& w : report.warnings) err << "warning: " << w << '\n';
            err << "evaluated " << report.per_seed.size() << " of " << gold.gold.size()
                << " seeds; metrics are macro-averaged over evaluated seeds\n";
            if (!per_seed_path.empty()) {
                std::ofstream file(per_seed_path);
                if (!file) {
                    err << "error: cannot write '" << per_seed_path << "'\n";
                    return kLoadError;
                }
                write_per_seed_csv(file, report);
            }
            return with_output(common, out, err,
                               [&](std::ostream& s) { write_sweep_csv(s, report); });
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const LoadError& e) {
        err << "load error: " << e.what() << '\n';
        return kLoadError;
    } catch (const UnknownDocument& e) {
        err << "error: " << e.what() << '\n';
        return kLookupError;
    } catch (const MissingSeeds& e) {
        err << "error: " << e.what() << '\n';
        return kLookupError;
    } catch (const DegenerateInput& e) {
        err << "error: " << e.what() << '\n';
        return kLookupError;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kLoadError;
    }
    return kUsageError;
}

} // namespace predsim::cli
