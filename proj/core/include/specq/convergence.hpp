#pragma once

#include <stdexcept>
#include <string>

namespace specq {

/// Accuracy knobs shared by every iterative routine in the library.
/// rel_tol drives series truncation, quadrature refinement and fixed-point
/// iteration; max_iter caps nonlinear iterations (Halley, Newton, Brent).
struct ConvergenceControl {
    double rel_tol = 1e-13;
    double abs_tol = 1e-300;
    int max_iter = 200;

    void validate() const {
        if (!(rel_tol > 0.0))
            throw std::invalid_argument("ConvergenceControl: rel_tol must be > 0");
        if (!(abs_tol >= 0.0))
            throw std::invalid_argument("ConvergenceControl: abs_tol must be >= 0");
        if (max_iter < 1)
            throw std::invalid_argument("ConvergenceControl: max_iter must be >= 1");
    }
};

/// Thrown when an iteration or subdivision budget is exhausted before the
/// requested tolerance is met. stage() names the operation that gave up.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(std::string stage, const std::string& detail)
        : std::runtime_error(stage + ": " + detail), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace specq
