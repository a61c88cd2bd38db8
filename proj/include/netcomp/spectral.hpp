#ifndef NETCOMP_SPECTRAL_HPP
#define NETCOMP_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "netcomp/error.hpp"
#include "netcomp/generators.hpp"
#include "netcomp/graph.hpp"

namespace netcomp {

/// L = D - A, dense.
inline Eigen::MatrixXd laplacian(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        L(v, v) = static_cast<double>(g.degree(v));
        for (NodeId w : g.neighbors(v)) L(v, w) = -1.0;
    }
    return L;
}

/// Second-smallest Laplacian eigenvalue. Values within round-off of zero are
/// reported as exactly 0, so disconnected graphs give 0.
inline double fiedler_value(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n < 2) return 0.0;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(laplacian(g), Eigen::EigenvaluesOnly);
    const double lambda2 = eig.eigenvalues()[1];  // ascending
    const double zero_band = 1e-9 * static_cast<double>(n);
    return lambda2 < zero_band ? 0.0 : lambda2;
}

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Ordinary least squares y = slope·x + intercept.
inline FitResult fit_linear(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 3)
        throw Error(ErrorCode::DegenerateFit, "need at least 3 paired points");
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx <= 0.0) throw Error(ErrorCode::DegenerateFit, "x values are all equal");
    FitResult fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;
    return fit;
}

/// Fit of ys against ln(xs).
inline FitResult fit_log(std::span<const double> xs, std::span<const double> ys) {
    std::vector<double> lx;
    for (double x : xs) {
        if (!(x > 0.0)) throw Error(ErrorCode::DegenerateFit, "log fit needs x > 0");
        lx.push_back(std::log(x));
    }
    return fit_linear(lx, ys);
}

/// Fit of ys against ln(ln(xs)).
inline FitResult fit_loglog(std::span<const double> xs, std::span<const double> ys) {
    std::vector<double> lx;
    for (double x : xs) {
        if (!(x > std::exp(1.0))) throw Error(ErrorCode::DegenerateFit, "double-log fit needs x > e");
        lx.push_back(std::log(std::log(x)));
    }
    return fit_linear(lx, ys);
}

/// Mean D̄ of WS(n,4,0.5) minus mean D̄ of BA(n,4) over the given seeds.
inline double ultra_small_world_gap(std::size_t n, std::span<const std::uint64_t> seeds) {
    if (n < 50) throw Error(ErrorCode::InvalidSpec, "gap needs n >= 50");
    if (seeds.empty()) throw Error(ErrorCode::InvalidSpec, "gap needs at least one seed");
    double ws = 0.0, ba = 0.0;
    for (auto seed : seeds) {
        ws += average_distance(ws_network({n, 4, 0.5}, seed));
        ba += average_distance(ba_network({n, 4}, seed));
    }
    return (ws - ba) / static_cast<double>(seeds.size());
}

}  // namespace netcomp

#endif  // NETCOMP_SPECTRAL_HPP
