#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "predsim/corpus.hpp"
#include "predsim/identifier.hpp"
#include "predsim/scorer.hpp"

namespace predsim {

/// Fraction of the first `n` retrieved documents that are relevant. When
/// fewer than `n` were retrieved the actual count is the denominator; an
/// empty retrieval list scores 0.
double precision_at(std::span<const DocumentId> retrieved, const std::set<DocumentId>& relevant,
                    std::size_t n);

/// Fraction of the relevant documents found among the first `n` retrieved.
/// Throws DegenerateInput when `relevant` is empty.
double recall_at(std::span<const DocumentId> retrieved, const std::set<DocumentId>& relevant,
                 std::size_t n);

/// Harmonic mean of precision and recall; 0 when both are 0.
double f_measure(double precision, double recall);

struct Metrics {
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
};

struct EvalReport {
    /// Sorted, distinct cutoffs.
    std::vector<std::size_t> n_values;
    /// Metrics per evaluated seed, aligned with n_values.
    std::map<DocumentId, std::vector<Metrics>> per_seed;
    /// Unweighted mean over per_seed at each cutoff.
    std::vector<Metrics> macro;
    std::vector<std::string> warnings;
};

/// Runs related-document retrieval for every gold seed with
/// top_n = max(n_values), then scores each prefix. Gold entries outside the
/// corpus are dropped with a warning; a seed left with no relevant documents,
/// or whose own predication set is empty, is excluded from the averages.
/// Throws MissingSeeds listing seeds not in the corpus and
/// std::invalid_argument on an empty or zero cutoff list.
EvalReport run_eval(const Corpus& corpus, const GoldStandard& gold,
                    std::vector<std::size_t> n_values, const Scorer& scorer);

/// `n,precision,recall,f_measure`, one row per cutoff, four decimals.
void write_sweep_csv(std::ostream& out, const EvalReport& report);

/// `seed,n,precision,recall,f_measure`, four decimals.
void write_per_seed_csv(std::ostream& out, const EvalReport& report);

} // namespace predsim
