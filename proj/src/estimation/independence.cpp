#include "mgd/estimation/independence.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <vector>

#include "mgd/error.hpp"

namespace mgd::estimation {

TestResult g_test(const data::CategoricalDataset& d, std::size_t x, std::size_t y, std::span<const std::size_t> z) {
    if (x >= d.cols() || y >= d.cols()) throw Error(ErrorCode::InvalidArgument, "column out of range");
    if (x == y) throw Error(ErrorCode::OverlappingSets, "x and y must differ");
    const std::size_t cx = d.cardinality(x), cy = d.cardinality(y);
    std::size_t strata = 1;
    for (std::size_t c : z) {
        if (c == x || c == y) throw Error(ErrorCode::OverlappingSets, "conditioning set overlaps x or y");
        strata *= d.cardinality(c);
    }
    std::vector<double> table(strata * cx * cy, 0.0);
    TestResult out;
    for (std::size_t i = 0; i < d.rows(); ++i) {
        const int a = d.at(i, x), b = d.at(i, y);
        if (a < 0 || b < 0) continue;
        std::size_t s = 0;
        bool ok = true;
        for (std::size_t c : z) {
            const int v = d.at(i, c);
            if (v < 0) {
                ok = false;
                break;
            }
            s = s * d.cardinality(c) + static_cast<std::size_t>(v);
        }
        if (!ok) continue;
        table[(s * cx + static_cast<std::size_t>(a)) * cy + static_cast<std::size_t>(b)] += 1.0;
        ++out.rows;
    }
    std::vector<double> rx(cx), ry(cy);
    for (std::size_t s = 0; s < strata; ++s) {
        const double* t = table.data() + s * cx * cy;
        std::fill(rx.begin(), rx.end(), 0.0);
        std::fill(ry.begin(), ry.end(), 0.0);
        double total = 0.0;
        for (std::size_t a = 0; a < cx; ++a)
            for (std::size_t b = 0; b < cy; ++b) {
                rx[a] += t[a * cy + b];
                ry[b] += t[a * cy + b];
                total += t[a * cy + b];
            }
        if (total == 0.0) continue;
        std::size_t nx = 0, ny = 0;
        for (double v : rx) nx += v > 0.0;
        for (double v : ry) ny += v > 0.0;
        out.df += static_cast<double>((nx - 1) * (ny - 1));
        for (std::size_t a = 0; a < cx; ++a)
            for (std::size_t b = 0; b < cy; ++b) {
                const double o = t[a * cy + b];
                if (o > 0.0) out.statistic += 2.0 * o * std::log(o * total / (rx[a] * ry[b]));
            }
    }
    if (out.statistic < 0.0) out.statistic = 0.0;
    if (out.df > 0.0)
        out.p_value = boost::math::cdf(boost::math::complement(boost::math::chi_squared(out.df), out.statistic));
    return out;
}

}  // namespace mgd::estimation
