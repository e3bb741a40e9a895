#include "predsim/eval.hpp"

#include <algorithm>
#include <iomanip>
#include <stdexcept>

#include "predsim/errors.hpp"
#include "predsim/parallel.hpp"
#include "predsim/retrieval.hpp"

namespace predsim {
namespace {

std::size_t hits_in_prefix(std::span<const DocumentId> retrieved,
                           const std::set<DocumentId>& relevant, std::size_t n) {
    const auto prefix = retrieved.first(std::min(n, retrieved.size()));
    return static_cast<std::size_t>(std::count_if(
        prefix.begin(), prefix.end(), [&](const DocumentId& d) { return relevant.contains(d); }));
}

void write_row(std::ostream& out, const Metrics& m) {
    out << m.precision << ',' << m.recall << ',' << m.f_measure << '\n';
}

} // namespace

double precision_at(std::span<const DocumentId> retrieved, const std::set<DocumentId>& relevant,
                    std::size_t n) {
    const std::size_t considered = std::min(n, retrieved.size());
    if (considered == 0) return 0.0;
    return static_cast<double>(hits_in_prefix(retrieved, relevant, n)) /
           static_cast<double>(considered);
}

double recall_at(std::span<const DocumentId> retrieved, const std::set<DocumentId>& relevant,
                 std::size_t n) {
    if (relevant.empty()) throw DegenerateInput("recall is undefined for an empty relevant set");
    return static_cast<double>(hits_in_prefix(retrieved, relevant, n)) /
           static_cast<double>(relevant.size());
}

double f_measure(double precision, double recall) {
    const double sum = precision + recall;
    if (sum == 0.0) return 0.0;
    return 2.0 * precision * recall / sum;
}

EvalReport run_eval(const Corpus& corpus, const GoldStandard& gold,
                    std::vector<std::size_t> n_values, const Scorer& scorer) {
    std::sort(n_values.begin(), n_values.end());
    n_values.erase(std::unique(n_values.begin(), n_values.end()), n_values.end());
    if (n_values.empty() || n_values.front() == 0) {
        throw std::invalid_argument("cutoffs must be a non-empty list of positive integers");
    }

    std::vector<std::string> missing;
    for (const auto& [seed, related] : gold.seeds()) {
        if (!corpus.contains(seed) && !corpus.is_skipped(seed)) missing.push_back(seed.value());
    }
    if (!missing.empty()) throw MissingSeeds(std::move(missing));

    EvalReport report;
    report.n_values = n_values;

    struct SeedJob {
        const DocumentId* seed;
        std::set<DocumentId> relevant;
        std::vector<Metrics> metrics;
    };
    std::vector<SeedJob> jobs;
    for (const auto& [seed, related] : gold.seeds()) {
        if (corpus.is_skipped(seed)) {
            report.warnings.push_back("seed '" + seed.value() +
                                      "' has no predications; excluded from averages");
            continue;
        }
        SeedJob job{&seed, {}, {}};
        std::size_t dropped = 0;
        for (const auto& d : related) {
            if (corpus.contains(d)) {
                job.relevant.insert(d);
            } else {
                ++dropped;
            }
        }
        if (dropped > 0) {
            report.warnings.push_back("seed '" + seed.value() + "': dropped " +
                                      std::to_string(dropped) +
                                      " gold document(s) not in the corpus");
        }
        if (job.relevant.empty()) {
            report.warnings.push_back("seed '" + seed.value() +
                                      "' has no relevant documents in the corpus; excluded "
                                      "from averages");
            continue;
        }
        jobs.push_back(std::move(job));
    }

    // Parallelism lives at the seed level; retrieval inside each job runs on
    // a single worker.
    const std::size_t top = n_values.back();
    parallel_for(jobs.size(), scorer.workers(), [&](std::size_t i) {
        auto& job = jobs[i];
        const auto ranked = [&] {
            std::vector<DocumentId> ids;
            for (const auto& r : related_documents(corpus, *job.seed, top, scorer, 1)) {
                ids.push_back(r.id);
            }
            return ids;
        }();
        for (auto n : n_values) {
            Metrics m;
            m.precision = precision_at(ranked, job.relevant, n);
            m.recall = recall_at(ranked, job.relevant, n);
            m.f_measure = f_measure(m.precision, m.recall);
            job.metrics.push_back(m);
        }
    });

    report.macro.assign(n_values.size(), Metrics{});
    for (auto& job : jobs) {
        for (std::size_t k = 0; k < n_values.size(); ++k) {
            report.macro[k].precision += job.metrics[k].precision;
            report.macro[k].recall += job.metrics[k].recall;
            report.macro[k].f_measure += job.metrics[k].f_measure;
        }
        report.per_seed.emplace(*job.seed, std::move(job.metrics));
    }
    if (!jobs.empty()) {
        const auto count = static_cast<double>(jobs.size());
        for (auto& m : report.macro) {
            m.precision /= count;
            m.recall /= count;
            m.f_measure /= count;
        }
    } else {
        report.warnings.push_back("no seed could be evaluated");
    }
    return report;
}

void write_sweep_csv(std::ostream& out, const EvalReport& report) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::fixed << std::setprecision(4);
    out << "n,precision,recall,f_measure\n";
    for (std::size_t k = 0; k < report.n_values.size(); ++k) {
        out << report.n_values[k] << ',';
        write_row(out, report.macro[k]);
    }
    out.flags(flags);
    out.precision(precision);
}

void write_per_seed_csv(std::ostream& out, const EvalReport& report) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::fixed << std::setprecision(4);
    out << "seed,n,precision,recall,f_measure\n";
    for (const auto& [seed, metrics] : report.per_seed) {
        for (std::size_t k = 0; k < report.n_values.size(); ++k) {
            out << seed.value() << ',' << report.n_values[k] << ',';
            write_row(out, metrics[k]);
        }
    }
    out.flags(flags);
    out.precision(precision);
}

} // namespace predsim
