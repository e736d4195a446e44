#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "probekit/tensor.hpp"

namespace probekit {

inline void check_correlation_input(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw ShapeError("correlation: length mismatch");
    if (x.size() < 2) throw ValueError("correlation needs at least 2 points");
    auto constant = [](const std::vector<double>& v) {
        for (double a : v)
            if (a != v[0]) return false;
        return true;
    };
    if (constant(x) || constant(y))
        throw ValueError("correlation undefined for constant input");
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    check_correlation_input(x, y);
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    return sxy / std::sqrt(sxx * syy);
}

// average ranks for ties
inline std::vector<double> ranks(const std::vector<double>& v) {
    std::vector<size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    size_t i = 0;
    while (i < order.size()) {
        size_t j = i;
        while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (size_t k = i; k <= j; ++k) r[order[k]] = avg;
        i = j + 1;
    }
    return r;
}

inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    check_correlation_input(x, y);
    return pearson(ranks(x), ranks(y));
}

inline double mean(const std::vector<double>& v) {
    if (v.empty()) throw ValueError("mean of empty vector");
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace probekit
