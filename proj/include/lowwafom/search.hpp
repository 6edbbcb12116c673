#pragma once

// Greedy column-by-column random search for extensible low-WAFOM digital nets.
//
// Stage d draws `trials` candidate S-tuples for the d-th generating columns,
// each one keeping every 1-d projection of P_d a (0,d,1)-net, and commits the
// tuple with the smallest WAFOM(P_d). Earlier columns are never revisited, so
// the result is extensible: its first d columns are exactly the stage-d winner.

#include "lowwafom/f2.hpp"
#include "lowwafom/reduce.hpp"
#include "lowwafom/rng.hpp"
#include "lowwafom/wafom.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace lowwafom {

struct SearchConfig {
    int digits = 30;
    int columns = 25;
    int dimension = 5;
    std::uint64_t trials = 7000;  // accepted (regular) candidates per stage
    int segments = 3;
    std::uint64_t seed = 0;
    int threads = 1;
    // Stages with d - 1 above this keep P_{d-1} implicit and re-enumerate it
    // per trial instead of storing it.
    int max_resident_d = 20;

    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
};

struct StageRecord {
    int d = 0;
    double best_wafom = 0.0;
    std::uint64_t best_trial = 0;
    std::uint64_t trials = 0;
    std::uint64_t rejections = 0;
    double seconds = 0.0;
};

struct SearchResult {
    GeneratingMatrixSet matrices;
    std::vector<StageRecord> trace;
};

struct Candidate {
    std::vector<BitColumn> columns;  // one per coordinate
    std::uint64_t rejections = 0;
};

/// Draws the d-th column for every coordinate of `prefix` (whose first d-1
/// columns are in place) by rejection sampling: n random bits per coordinate,
/// redrawn until the upper d x d block is regular.
Candidate random_candidate_columns(const GeneratingMatrixSet& prefix, int d, Rng& rng);

/// The random stream used for trial `trial` of stage `d`.
Rng trial_stream(std::uint64_t seed, int d, std::uint64_t trial);

/// WAFOM(P_d) from the stored points of P_{d-1} (flat, S columns per point)
/// and the new generating columns:
///   1/2 * (mean term(x) + mean term(x ^ x_new)) over x in P_{d-1}.
double evaluate_stage(std::span<const BitColumn> prefix_points, int dimension,
                      std::span<const BitColumn> candidate, const WafomTableSet& tables);

/// Incremental stage evaluator. Holds P_{d-1} (stored or implicit) and the
/// compensated sum of its terms, so each trial only touches the new half.
class StageEvaluator {
  public:
    StageEvaluator(const WafomTableSet& tables, int dimension, int max_resident_d);

    /// d of the next stage to be evaluated (1 after construction).
    int next_d() const { return depth_ + 1; }

    /// WAFOM(P_{next_d}) if the d-th columns were `candidate`.
    double evaluate(std::span<const BitColumn> candidate) const;

    /// Fix the d-th columns and grow P to P_d.
    void commit(std::span<const BitColumn> candidate);

    bool resident() const { return resident_; }

  private:
    CompensatedSum new_half_sum(std::span<const BitColumn> candidate) const;

    const WafomTableSet* tables_;
    int dimension_;
    int max_resident_d_;
    int depth_ = 0;
    bool resident_ = true;
    std::vector<BitColumn> points_;     // natural order, resident mode
    GeneratingMatrixSet prefix_;        // committed columns, streaming mode
    CompensatedSum prefix_sum_;
};

/// Optional per-stage callback, e.g. for progress output.
using StageObserver = std::function<void(const StageRecord&)>;

SearchResult search_extensible(const SearchConfig& cfg, const StageObserver& observer = {});

}  // namespace lowwafom
