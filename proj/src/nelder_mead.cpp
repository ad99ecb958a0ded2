#include "qcorr/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcorr/errors.hpp"

namespace qcorr::optim {

namespace {

struct Vertex {
    std::vector<double> x;
    double f;
};

}  // namespace

SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, std::span<const double> step,
                          const SimplexOptions& options) {
    const std::size_t n = x0.size();
    if (n == 0 || step.size() != n) throw ConfigError("nelder_mead: step size must match dimension");

    SimplexResult result;
    auto eval = [&](const std::vector<double>& x) {
        ++result.evaluations;
        return f(x);
    };

    std::vector<double> scale(step.begin(), step.end());
    Vertex best{x0, eval(x0)};

    for (int round = 0; round <= options.restarts; ++round) {
        std::vector<Vertex> simplex;
        simplex.reserve(n + 1);
        simplex.push_back(best);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> x = best.x;
            x[i] += scale[i];
            simplex.push_back({x, eval(x)});
        }

        bool converged = false;
        std::vector<double> centroid(n), trial(n);
        auto point = [&](double coeff, const std::vector<double>& toward) {
            for (std::size_t i = 0; i < n; ++i) trial[i] = centroid[i] + coeff * (toward[i] - centroid[i]);
            return trial;
        };

        while (result.iterations < options.max_iterations) {
            std::stable_sort(simplex.begin(), simplex.end(),
                             [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
            if (simplex.back().f - simplex.front().f <= options.tolerance) {
                converged = true;
                break;
            }
            ++result.iterations;

            std::fill(centroid.begin(), centroid.end(), 0.0);
            for (std::size_t v = 0; v < n; ++v) {
                for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v].x[i];
            }
            for (double& c : centroid) c /= static_cast<double>(n);

            Vertex& worst = simplex.back();
            const std::vector<double> reflected = point(-options.reflection, worst.x);
            const double f_reflected = eval(reflected);

            if (f_reflected < simplex.front().f) {
                const std::vector<double> expanded = point(-options.reflection * options.expansion, worst.x);
                const double f_expanded = eval(expanded);
                worst = f_expanded < f_reflected ? Vertex{expanded, f_expanded} : Vertex{reflected, f_reflected};
                continue;
            }
            if (f_reflected < simplex[n - 1].f) {
                worst = {reflected, f_reflected};
                continue;
            }
            // Contraction: outside if the reflection improved on the worst vertex, inside otherwise.
            const bool outside = f_reflected < worst.f;
            const std::vector<double> contracted =
                outside ? point(options.contraction, reflected) : point(options.contraction, worst.x);
            const double f_contracted = eval(contracted);
            if (f_contracted < std::min(f_reflected, worst.f)) {
                worst = {contracted, f_contracted};
                continue;
            }
            for (std::size_t v = 1; v <= n; ++v) {
                for (std::size_t i = 0; i < n; ++i) {
                    simplex[v].x[i] = simplex[0].x[i] + options.shrink * (simplex[v].x[i] - simplex[0].x[i]);
                }
                simplex[v].f = eval(simplex[v].x);
            }
        }

        std::stable_sort(simplex.begin(), simplex.end(),
                         [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
        const double improvement = best.f - simplex.front().f;
        if (simplex.front().f < best.f) best = simplex.front();
        result.converged = converged;
        if (!converged || (round > 0 && improvement <= options.tolerance)) break;
        for (double& s : scale) s *= 0.1;
    }

    result.x = best.x;
    result.value = best.f;
    return result;
}

}  // namespace qcorr::optim
