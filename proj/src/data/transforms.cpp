#include "mgd/data/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mgd/error.hpp"
#include "mgd/random.hpp"

namespace mgd::data {

CategoricalDataset indicators(const CategoricalDataset& d) {
    std::vector<VariableSchema> schema = d.schema();
    std::vector<std::vector<int>> columns;
    for (std::size_t j = 0; j < d.cols(); ++j) {
        auto col = d.column(j);
        columns.emplace_back(col.begin(), col.end());
    }
    for (std::size_t j : d.partially_observed()) {
        const std::string name = indicator_name(d.variable(j).name);
        if (std::any_of(schema.begin(), schema.end(), [&](const VariableSchema& v) { return v.name == name; }))
            throw Error(ErrorCode::NameCollision, "indicator name '" + name + "' already in use");
        schema.push_back({name, {"0", "1"}});
        std::vector<int> r(d.rows());
        for (std::size_t i = 0; i < d.rows(); ++i) r[i] = d.is_missing(i, j) ? 1 : 0;
        columns.push_back(std::move(r));
    }
    return CategoricalDataset(std::move(schema), std::move(columns));
}

CategoricalDataset impute_mode(const CategoricalDataset& d) {
    std::vector<std::vector<int>> columns;
    for (std::size_t j = 0; j < d.cols(); ++j) {
        auto col = d.column(j);
        std::vector<int> out(col.begin(), col.end());
        if (d.missing_count(j) > 0) {
            if (d.missing_count(j) == d.rows())
                throw Error(ErrorCode::AllMissingColumn, "column '" + d.variable(j).name + "' has no observed cells");
            std::vector<std::size_t> freq(d.cardinality(j), 0);
            for (int v : col)
                if (v != CategoricalDataset::kMissing) ++freq[static_cast<std::size_t>(v)];
            // max_element returns the first maximum: ties go to the lowest index.
            const int mode = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());
            std::replace(out.begin(), out.end(), CategoricalDataset::kMissing, mode);
        }
        columns.push_back(std::move(out));
    }
    return CategoricalDataset(d.schema(), std::move(columns));
}

std::vector<std::size_t> bootstrap_rows(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorCode::EmptyDataset, "cannot bootstrap an empty dataset");
    Rng rng(seed);
    std::vector<std::size_t> rows(n);
    for (auto& r : rows) r = static_cast<std::size_t>(rng.below(n));
    return rows;
}

CategoricalDataset bootstrap(const CategoricalDataset& d, std::uint64_t seed) {
    const auto rows = bootstrap_rows(d.rows(), seed);
    return d.select_rows(rows);
}

Split split(const CategoricalDataset& d, double held_out_fraction, std::uint64_t seed) {
    if (!(held_out_fraction > 0.0 && held_out_fraction < 1.0))
        throw Error(ErrorCode::BadFraction, "held-out fraction must lie strictly between 0 and 1");
    const std::size_t n = d.rows();
    if (n < 2) throw Error(ErrorCode::BadFraction, "need at least two rows to split");
    const auto held_out = static_cast<std::size_t>(std::floor(static_cast<double>(n) * held_out_fraction));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[static_cast<std::size_t>(rng.below(i + 1))]);
    Split out;
    out.test_rows.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(held_out));
    out.train_rows.assign(order.begin() + static_cast<std::ptrdiff_t>(held_out), order.end());
    std::sort(out.test_rows.begin(), out.test_rows.end());
    std::sort(out.train_rows.begin(), out.train_rows.end());
    out.train = d.select_rows(out.train_rows);
    out.test = d.select_rows(out.test_rows);
    return out;
}

}  // namespace mgd::data
