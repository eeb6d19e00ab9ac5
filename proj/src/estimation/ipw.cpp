#include "mgd/estimation/ipw.hpp"

#include <algorithm>
#include <cmath>

#include "mgd/error.hpp"
#include "mgd/estimation/counts.hpp"

namespace mgd::estimation {

std::vector<double> ipw_weights(const data::CategoricalDataset& d, std::size_t target,
                                std::span<const std::size_t> detected_parents) {
    if (target >= d.cols()) throw Error(ErrorCode::UnknownVariable, "column out of range");
    std::size_t strata = 1;
    for (std::size_t p : detected_parents) {
        if (p >= d.cols()) throw Error(ErrorCode::UnknownVariable, "column out of range");
        strata *= d.cardinality(p);
    }
    auto stratum_of = [&](std::size_t i) -> long {
        std::size_t s = 0;
        for (std::size_t p : detected_parents) {
            const int v = d.at(i, p);
            if (v < 0) return -1;
            s = s * d.cardinality(p) + static_cast<std::size_t>(v);
        }
        return static_cast<long>(s);
    };
    std::vector<double> seen(strata, 0.0), observed(strata, 0.0);
    for (std::size_t i = 0; i < d.rows(); ++i) {
        const long s = stratum_of(i);
        if (s < 0) continue;
        seen[static_cast<std::size_t>(s)] += 1.0;
        if (!d.is_missing(i, target)) observed[static_cast<std::size_t>(s)] += 1.0;
    }
    std::vector<double> out(d.rows(), 0.0);
    for (std::size_t i = 0; i < d.rows(); ++i) {
        if (d.is_missing(i, target)) continue;
        const long s = stratum_of(i);
        if (s < 0 || seen[static_cast<std::size_t>(s)] == 0.0) {
            out[i] = 1.0;
            continue;
        }
        const auto k = static_cast<std::size_t>(s);
        out[i] = (seen[k] + 2.0) / (observed[k] + 1.0);
    }
    return out;
}

std::vector<double> ipw_weights(const data::CategoricalDataset& d, const std::string& target,
                                const std::vector<std::string>& detected_parents) {
    std::vector<std::size_t> parents;
    for (const auto& p : detected_parents) parents.push_back(d.index_of(p));
    return ipw_weights(d, d.index_of(target), parents);
}

IpwScorer::IpwScorer(const data::CategoricalDataset& d, std::vector<std::vector<std::size_t>> r_parents)
    : data_(d), r_parents_(std::move(r_parents)), partial_(d.cols(), false), weights_(d.cols()) {
    if (r_parents_.size() != d.cols()) throw Error(ErrorCode::InvalidArgument, "one parent list per column expected");
    for (std::size_t j = 0; j < d.cols(); ++j) {
        partial_[j] = d.missing_count(j) > 0;
        complete_ = complete_ && !partial_[j];
        if (partial_[j]) weights_[j] = ipw_weights(d, j, r_parents_[j]);
    }
}

std::vector<std::size_t> IpwScorer::closure(std::span<const std::size_t> family) const {
    std::vector<bool> in(data_.cols(), false);
    std::vector<std::size_t> stack(family.begin(), family.end());
    std::vector<std::size_t> out;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        if (in[v]) continue;
        in[v] = true;
        out.push_back(v);
        if (partial_[v])
            for (std::size_t p : r_parents_[v]) stack.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> IpwScorer::family_weights(std::span<const std::size_t> family) const {
    const auto members = closure(family);
    std::vector<double> w(data_.rows(), 1.0);
    for (std::size_t v : members) {
        if (!partial_[v]) continue;
        const auto& wv = weights_[v];
        for (std::size_t i = 0; i < w.size(); ++i) w[i] *= wv[i];
    }
    // Zero out rows where a closure member is missing (including fully
    // observed-in-family members whose weight is already 0).
    for (std::size_t v : members)
        for (std::size_t i = 0; i < w.size(); ++i)
            if (data_.is_missing(i, v)) w[i] = 0.0;
    return w;
}

std::vector<double> IpwScorer::normalized_weights(std::span<const std::size_t> family, double* rows_used) const {
    auto w = family_weights(family);
    double total = 0.0, used = 0.0;
    for (double x : w) {
        total += x;
        used += x > 0.0;
    }
    if (total > 0.0 && total != used)
        for (double& x : w) x *= used / total;
    if (rows_used) *rows_used = used;
    return w;
}

double IpwScorer::family_score(int child, std::span<const int> parents) const {
    std::vector<std::size_t> family{static_cast<std::size_t>(child)};
    family.insert(family.end(), parents.begin(), parents.end());
    const std::vector<std::size_t> pa(parents.begin(), parents.end());
    double used = 0.0;
    const auto w = normalized_weights(family, &used);
    return family_bic(count_family(data_, static_cast<std::size_t>(child), pa, w), used);
}

double IpwScorer::delta(int child, std::span<const int> before, std::span<const int> after) const {
    if (complete_) return family_score(child, after) - family_score(child, before);
    std::vector<std::size_t> vars{static_cast<std::size_t>(child)};
    vars.insert(vars.end(), before.begin(), before.end());
    vars.insert(vars.end(), after.begin(), after.end());
    double used = 0.0;
    const auto w = normalized_weights(vars, &used);
    const std::vector<std::size_t> pb(before.begin(), before.end()), pa(after.begin(), after.end());
    const auto c = static_cast<std::size_t>(child);
    return family_bic(count_family(data_, c, pa, w), used) - family_bic(count_family(data_, c, pb, w), used);
}

}  // namespace mgd::estimation
