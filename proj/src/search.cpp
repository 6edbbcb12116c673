#include "lowwafom/search.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lowwafom {

void SearchConfig::validate() const {
    auto fail = [](const std::string& what) { throw std::invalid_argument("search: " + what); };
    if (digits < 1 || digits > kMaxDigits) fail("n must lie in [1, 62]");
    if (dimension < 1) fail("S must be positive");
    if (columns < 1) fail("m must be positive");
    if (columns > digits) fail("m must not exceed n (regularity needs d <= n)");
    if (trials < 1) fail("M must be at least 1");
    if (segments < 1 || digits % segments != 0) {
        fail("q=" + std::to_string(segments) + " must divide n=" + std::to_string(digits));
    }
    if (max_resident_d < 0) fail("max_resident_d must be nonnegative");
}

Rng trial_stream(std::uint64_t seed, int d, std::uint64_t trial) {
    return make_stream(seed, StreamTag::search_trial, {static_cast<std::uint64_t>(d), trial});
}

Candidate random_candidate_columns(const GeneratingMatrixSet& prefix, int d, Rng& rng) {
    const int digits = prefix.digits();
    if (d < 1 || d > digits || d - 1 > prefix.columns()) {
        throw std::invalid_argument("candidate columns: d=" + std::to_string(d) +
                                    " incompatible with prefix of " +
                                    std::to_string(prefix.columns()) + " columns, n=" +
                                    std::to_string(digits));
    }
    const BitColumn mask = low_mask(digits);
    Candidate out;
    out.columns.resize(prefix.dimension());
    std::vector<BitColumn> cols(d);
    for (int i = 0; i < prefix.dimension(); ++i) {
        auto existing = prefix.matrix(i);
        for (int c = 0; c + 1 < d; ++c) cols[c] = existing[c];
        for (;;) {
            cols[d - 1] = rng() & mask;
            if (is_upper_square_regular(cols, digits)) break;
            ++out.rejections;
        }
        out.columns[i] = cols[d - 1];
    }
    return out;
}

namespace {

CompensatedSum shifted_term_sum(std::span<const BitColumn> points, int dimension,
                                std::span<const BitColumn> candidate,
                                const WafomTableSet& tables, std::uint64_t begin,
                                std::uint64_t end) {
    CompensatedSum s;
    const auto stride = static_cast<std::size_t>(dimension);
    for (std::uint64_t k = begin; k < end; ++k) {
        const BitColumn* x = points.data() + k * stride;
        double p = 1.0;
        for (std::size_t t = 0; t < stride; ++t) p *= tables.coordinate_factor(x[t] ^ candidate[t]);
        s.add(p - 1.0);
    }
    return s;
}

void check_candidate(std::span<const BitColumn> candidate, int dimension) {
    if (static_cast<int>(candidate.size()) != dimension) {
        throw std::invalid_argument("stage evaluation: candidate has " +
                                    std::to_string(candidate.size()) + " columns, expected " +
                                    std::to_string(dimension));
    }
}

}  // namespace

double evaluate_stage(std::span<const BitColumn> prefix_points, int dimension,
                      std::span<const BitColumn> candidate, const WafomTableSet& tables) {
    check_candidate(candidate, dimension);
    if (dimension < 1 || prefix_points.size() % dimension != 0) {
        throw std::invalid_argument("stage evaluation: ragged prefix point list");
    }
    const std::uint64_t count = prefix_points.size() / dimension;
    if (count == 0 || (count & (count - 1)) != 0) {
        throw std::invalid_argument("stage evaluation: prefix must hold 2^(d-1) points");
    }
    const std::vector<BitColumn> zero(dimension, 0);
    CompensatedSum total;
    total.add(chunked_sum(count, 1, [&](std::uint64_t b, std::uint64_t e) {
        return shifted_term_sum(prefix_points, dimension, zero, tables, b, e);
    }));
    total.add(chunked_sum(count, 1, [&](std::uint64_t b, std::uint64_t e) {
        return shifted_term_sum(prefix_points, dimension, candidate, tables, b, e);
    }));
    return total.value() / static_cast<double>(2 * count);
}

StageEvaluator::StageEvaluator(const WafomTableSet& tables, int dimension, int max_resident_d)
    : tables_(&tables),
      dimension_(dimension),
      max_resident_d_(max_resident_d),
      points_(static_cast<std::size_t>(dimension), 0),
      prefix_(tables.digits(), 0, dimension) {
    prefix_sum_.add(tables.point_term(points_));
}

CompensatedSum StageEvaluator::new_half_sum(std::span<const BitColumn> candidate) const {
    const std::uint64_t count = std::uint64_t{1} << depth_;
    if (resident_) {
        return chunked_sum(count, 1, [&](std::uint64_t b, std::uint64_t e) {
            return shifted_term_sum(points_, dimension_, candidate, *tables_, b, e);
        });
    }
    return chunked_sum(count, 1, [&](std::uint64_t b, std::uint64_t e) {
        CompensatedSum s;
        GrayCursor cursor(prefix_, depth_, b);
        for (std::uint64_t k = b; k < e; ++k) {
            const auto x = cursor.coords();
            double p = 1.0;
            for (int t = 0; t < dimension_; ++t) p *= tables_->coordinate_factor(x[t] ^ candidate[t]);
            s.add(p - 1.0);
            cursor.advance();
        }
        return s;
    });
}

double StageEvaluator::evaluate(std::span<const BitColumn> candidate) const {
    check_candidate(candidate, dimension_);
    CompensatedSum total = prefix_sum_;
    total.add(new_half_sum(candidate));
    return std::ldexp(total.value(), -(depth_ + 1));
}

void StageEvaluator::commit(std::span<const BitColumn> candidate) {
    check_candidate(candidate, dimension_);
    prefix_sum_.add(new_half_sum(candidate));

    GeneratingMatrixSet grown(prefix_.digits(), depth_ + 1, dimension_);
    for (int i = 0; i < dimension_; ++i) {
        for (int c = 0; c < depth_; ++c) grown.set_column(i, c, prefix_.column(i, c));
        grown.set_column(i, depth_, candidate[i]);
    }
    prefix_ = std::move(grown);
    ++depth_;

    if (resident_ && depth_ <= max_resident_d_) {
        const std::size_t half = points_.size();
        points_.resize(2 * half);
        for (std::size_t k = 0; k < half; ++k) {
            points_[half + k] = points_[k] ^ candidate[k % dimension_];
        }
    } else {
        resident_ = false;
        points_.clear();
        points_.shrink_to_fit();
    }
}

SearchResult search_extensible(const SearchConfig& cfg, const StageObserver& observer) {
    cfg.validate();
    using Clock = std::chrono::steady_clock;
    const WafomTableSet tables(cfg.digits, cfg.segments);
    StageEvaluator evaluator(tables, cfg.dimension, cfg.max_resident_d);
    GeneratingMatrixSet matrices(cfg.digits, cfg.columns, cfg.dimension);

    SearchResult result;
    std::vector<double> values(cfg.trials);
    std::vector<std::vector<BitColumn>> candidates(cfg.trials);
    std::vector<std::uint64_t> rejections(cfg.trials);
    constexpr std::uint64_t kTrialsPerTask = 8;
    const std::uint64_t tasks = (cfg.trials + kTrialsPerTask - 1) / kTrialsPerTask;

    for (int d = 1; d <= cfg.columns; ++d) {
        const auto start = Clock::now();
        parallel_for_chunks(tasks, cfg.threads, [&](std::uint64_t task) {
            const std::uint64_t end = std::min(cfg.trials, (task + 1) * kTrialsPerTask);
            for (std::uint64_t t = task * kTrialsPerTask; t < end; ++t) {
                Rng rng = trial_stream(cfg.seed, d, t);
                Candidate cand = random_candidate_columns(matrices, d, rng);
                values[t] = evaluator.evaluate(cand.columns);
                rejections[t] = cand.rejections;
                candidates[t] = std::move(cand.columns);
            }
        });

        std::uint64_t best = 0;
        std::uint64_t rejected = 0;
        for (std::uint64_t t = 0; t < cfg.trials; ++t) {
            rejected += rejections[t];
            if (values[t] < values[best]) best = t;
        }
        for (int i = 0; i < cfg.dimension; ++i) matrices.set_column(i, d - 1, candidates[best][i]);
        evaluator.commit(candidates[best]);

        StageRecord rec;
        rec.d = d;
        rec.best_wafom = values[best];
        rec.best_trial = best;
        rec.trials = cfg.trials;
        rec.rejections = rejected;
        rec.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        result.trace.push_back(rec);
        if (observer) observer(rec);
    }
    result.matrices = std::move(matrices);
    return result;
}

}  // namespace lowwafom
