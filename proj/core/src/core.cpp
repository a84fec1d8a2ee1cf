#include "mcshms/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mcshms {

Objective::Objective(std::string name, std::vector<double> lower, std::vector<double> upper,
                     double optimum_value, EvalFn eval, std::vector<double> optimum_position)
    : name_(std::move(name)),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      optimum_value_(optimum_value),
      eval_(std::move(eval)),
      optimum_position_(std::move(optimum_position)) {
    if (lower_.empty()) {
        throw std::invalid_argument("objective '" + name_ + "': dimension must be positive");
    }
    if (lower_.size() != upper_.size()) {
        throw std::invalid_argument("objective '" + name_ + "': bound vectors differ in length");
    }
    for (std::size_t j = 0; j < lower_.size(); ++j) {
        if (!(lower_[j] < upper_[j])) {
            throw std::invalid_argument("objective '" + name_ + "': lower bound not below upper bound at coordinate " +
                                        std::to_string(j));
        }
    }
    if (!optimum_position_.empty() && optimum_position_.size() != lower_.size()) {
        throw std::invalid_argument("objective '" + name_ + "': optimum position has wrong dimension");
    }
    if (!eval_) {
        throw std::invalid_argument("objective '" + name_ + "': missing evaluation function");
    }
}

double Objective::operator()(std::span<const double> x) const {
    if (x.size() != dim()) {
        throw std::invalid_argument("objective '" + name_ + "': expected dimension " + std::to_string(dim()) +
                                    ", got " + std::to_string(x.size()));
    }
    return eval_(x);
}

void RunConfig::validate() const {
    if (pop_size < 1) throw ConfigError("pop_size must be positive");
    if (nfe_max < 1) throw ConfigError("nfe_max must be positive");
    if (nfe_max < pop_size) throw ConfigError("nfe_max must cover the initial population (nfe_max >= pop_size)");
    if (k_clusters < 1) throw ConfigError("k_clusters must be positive");
    if (k_clusters > pop_size) throw ConfigError("k_clusters must not exceed pop_size");
    if (q_min < 2) throw ConfigError("q_min must be at least 2");
    if (q_max < q_min) throw ConfigError("q_max must be at least q_min");
    if (!std::isfinite(C)) throw ConfigError("C must be finite");
    if (!(beta_low > 0.0)) throw ConfigError("beta_low must be positive");
    if (!(beta_low <= beta_high)) throw ConfigError("beta_low must not exceed beta_high");
    if (!(beta_high < 2.0)) throw ConfigError("beta_high must be below 2");
}

EvaluationBudget::EvaluationBudget(std::int64_t nfe_max, std::int64_t used) : max_(nfe_max), used_(used) {
    if (nfe_max < 0 || used < 0) throw std::invalid_argument("evaluation budget must be non-negative");
}

void EvaluationBudget::consume() {
    if (exhausted()) throw BudgetExhausted();
    ++used_;
}

std::vector<double> clamp(std::span<const double> position, const Objective& objective) {
    std::vector<double> out(position.begin(), position.end());
    clamp_in_place(out, objective);
    return out;
}

void clamp_in_place(std::span<double> position, const Objective& objective) {
    if (position.size() != objective.dim()) {
        throw std::invalid_argument("clamp: position has dimension " + std::to_string(position.size()) +
                                    ", objective expects " + std::to_string(objective.dim()));
    }
    const auto lo = objective.lower();
    const auto hi = objective.upper();
    for (std::size_t j = 0; j < position.size(); ++j) {
        position[j] = std::clamp(position[j], lo[j], hi[j]);
    }
}

bool in_bounds(std::span<const double> position, const Objective& objective) {
    if (position.size() != objective.dim()) return false;
    const auto lo = objective.lower();
    const auto hi = objective.upper();
    for (std::size_t j = 0; j < position.size(); ++j) {
        if (!(position[j] >= lo[j] && position[j] <= hi[j])) return false;
    }
    return true;
}

double evaluate_counted(const Objective& objective, std::span<const double> position, EvaluationBudget& budget) {
    budget.consume();
    return objective(position);
}

RunTracker::RunTracker(const Objective& objective, std::int64_t nfe_max)
    : objective_(&objective), budget_(nfe_max) {}

double RunTracker::evaluate(std::span<const double> position) {
    const double value = evaluate_counted(*objective_, position, budget_);
    if (!has_best_ || value < best_.value) {
        best_.position.assign(position.begin(), position.end());
        best_.value = value;
        has_best_ = true;
        history_.push_back({budget_.used(), value});
    }
    return value;
}

RunResult RunTracker::result() const {
    RunResult r;
    r.best_value = best_.value;
    r.best_position = best_.position;
    r.error = best_.value - objective_->optimum_value();
    r.nfe_used = budget_.used();
    r.history = history_;
    return r;
}

}  // namespace mcshms
