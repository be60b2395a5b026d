#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "errors.hpp"

namespace gtkit {

// Resource limits for a single heavyweight computation (one Groebner run,
// one Koszul homology pass, ...).  Exceeding a limit raises BudgetExceeded;
// it never degrades into an unreliable answer.
struct Budget {
    std::uint64_t max_pairs = 5'000'000; // S-pairs processed per basis run
    double max_seconds = 600.0;          // wall clock per run
    int max_degree = 120;                // S-polynomial total-degree cap
    std::size_t max_piece_dim = 200'000; // largest graded piece in Koszul runs

    // Library defaults, with the GTKIT_BUDGET_SECONDS environment variable
    // applied as a global override of max_seconds when present.
    static Budget defaults() {
        Budget b;
        b.apply_env_override();
        return b;
    }

    // GTKIT_BUDGET_SECONDS overrides max_seconds wherever budgets are made.
    void apply_env_override() {
        if (const char* env = std::getenv("GTKIT_BUDGET_SECONDS")) {
            char* end = nullptr;
            const double v = std::strtod(env, &end);
            if (end != env && v > 0.0) max_seconds = v;
        }
    }

    Budget with_seconds(double s) const {
        Budget b = *this;
        b.max_seconds = s;
        return b;
    }
};

class Stopwatch {
public:
    Stopwatch() : start_(clock::now()) {}

    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_;
};

// Tracks consumption against a Budget inside a long-running kernel.
// Time is polled every few hundred events to keep the check cheap.
class BudgetGuard {
public:
    BudgetGuard(const Budget& budget, std::string where)
        : budget_(budget), where_(std::move(where)) {}

    void on_pair() {
        if (++pairs_ > budget_.max_pairs)
            throw BudgetExceeded("pairs", where_);
        if ((pairs_ & 0xff) == 0) check_time();
    }

    void check_degree(int deg) const {
        if (deg > budget_.max_degree)
            throw BudgetExceeded("degree", where_);
    }

    void check_piece_dim(std::size_t dim) const {
        if (dim > budget_.max_piece_dim)
            throw BudgetExceeded("piece_dim", where_);
    }

    void check_time() const {
        if (watch_.seconds() > budget_.max_seconds)
            throw BudgetExceeded("seconds", where_);
    }

    double elapsed() const { return watch_.seconds(); }
    std::uint64_t pairs() const { return pairs_; }
    const Budget& budget() const { return budget_; }

private:
    Budget budget_;
    std::string where_;
    Stopwatch watch_;
    std::uint64_t pairs_ = 0;
};

} // namespace gtkit
