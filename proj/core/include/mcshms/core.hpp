#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcshms {

/// Raised when a configuration violates its invariants. Always thrown before
/// any objective evaluation takes place.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by evaluate_counted() when the evaluation budget is already spent.
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted() : std::runtime_error("objective evaluation budget exhausted") {}
};

/// A candidate solution ("bid") together with its cached objective value.
struct Bid {
    std::vector<double> position;
    double value = 0.0;
};

/// Box-constrained minimization problem with a known optimum value.
class Objective {
public:
    using EvalFn = std::function<double(std::span<const double>)>;

    Objective(std::string name, std::vector<double> lower, std::vector<double> upper,
              double optimum_value, EvalFn eval,
              std::vector<double> optimum_position = {});

    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return lower_.size(); }
    std::span<const double> lower() const noexcept { return lower_; }
    std::span<const double> upper() const noexcept { return upper_; }
    double optimum_value() const noexcept { return optimum_value_; }

    /// Location of the global optimum when known; empty otherwise.
    std::span<const double> optimum_position() const noexcept { return optimum_position_; }

    /// Uncounted evaluation. Algorithms go through evaluate_counted() or RunTracker.
    double operator()(std::span<const double> x) const;

private:
    std::string name_;
    std::vector<double> lower_;
    std::vector<double> upper_;
    double optimum_value_;
    EvalFn eval_;
    std::vector<double> optimum_position_;
};

/// Parameters shared by HMS and MCS-HMS. Defaults for the cluster count,
/// mental-process range and movement constant follow the published settings.
struct RunConfig {
    std::int64_t pop_size = 50;
    std::int64_t nfe_max = 100000;
    int k_clusters = 5;
    int q_min = 2;
    int q_max = 5;
    double C = 1.0;
    std::uint64_t seed = 0;
    double beta_low = 0.3;
    double beta_high = 1.99;

    /// Throws ConfigError naming the first violated invariant.
    void validate() const;
};

struct HistoryPoint {
    std::int64_t nfe;
    double best_value;

    friend bool operator==(const HistoryPoint&, const HistoryPoint&) = default;
};

struct RunResult {
    double best_value = 0.0;
    std::vector<double> best_position;
    double error = 0.0;
    std::int64_t nfe_used = 0;
    std::vector<HistoryPoint> history;

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Exact count of objective evaluations against a fixed maximum.
class EvaluationBudget {
public:
    explicit EvaluationBudget(std::int64_t nfe_max, std::int64_t used = 0);

    std::int64_t used() const noexcept { return used_; }
    std::int64_t max() const noexcept { return max_; }
    std::int64_t remaining() const noexcept { return max_ - used_; }
    bool exhausted() const noexcept { return used_ >= max_; }

    /// Records one evaluation; throws BudgetExhausted if none is left.
    void consume();

private:
    std::int64_t max_;
    std::int64_t used_;
};

/// Projects each coordinate into [lower, upper]. Throws std::invalid_argument
/// on a dimension mismatch.
std::vector<double> clamp(std::span<const double> position, const Objective& objective);

/// In-place variant of clamp().
void clamp_in_place(std::span<double> position, const Objective& objective);

bool in_bounds(std::span<const double> position, const Objective& objective);

/// Evaluates the objective and increments the budget by exactly one.
double evaluate_counted(const Objective& objective, std::span<const double> position,
                        EvaluationBudget& budget);

/// Counted evaluation plus best-so-far bookkeeping for a single run. A history
/// point is appended each time the best value strictly improves.
class RunTracker {
public:
    RunTracker(const Objective& objective, std::int64_t nfe_max);

    const Objective& objective() const noexcept { return *objective_; }
    std::int64_t nfe() const noexcept { return budget_.used(); }
    std::int64_t nfe_max() const noexcept { return budget_.max(); }
    bool exhausted() const noexcept { return budget_.exhausted(); }

    double evaluate(std::span<const double> position);

    bool has_best() const noexcept { return has_best_; }
    const Bid& best() const noexcept { return best_; }
    const std::vector<HistoryPoint>& history() const noexcept { return history_; }

    RunResult result() const;

private:
    const Objective* objective_;
    EvaluationBudget budget_;
    Bid best_;
    bool has_best_ = false;
    std::vector<HistoryPoint> history_;
};

}  // namespace mcshms
