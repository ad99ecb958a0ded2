#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qcorr::optim {

struct SimplexOptions {
    int max_iterations = 200;
    double tolerance = 1e-9;  // stop when the spread of simplex values falls below this
    int restarts = 1;         // fresh simplices started from the best vertex after convergence
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
};

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    int evaluations = 0;
    bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

// Derivative-free minimization. The initial simplex is x0 plus step[i] along
// each axis; iterations are shared across restarts.
SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, std::span<const double> step,
                          const SimplexOptions& options = {});

}  // namespace qcorr::optim
