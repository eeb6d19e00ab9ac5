#ifndef MGD_ESTIMATION_INDEPENDENCE_HPP
#define MGD_ESTIMATION_INDEPENDENCE_HPP

#include <cstddef>
#include <span>

#include "mgd/data/dataset.hpp"

namespace mgd::estimation {

struct TestResult {
    double statistic = 0.0;
    double df = 0.0;
    double p_value = 1.0;
    std::size_t rows = 0;  // rows with x, y and every z observed
};

// G-test of x _||_ y | z on the rows where all involved columns are observed.
// Degrees of freedom are summed per z-stratum over the non-empty margins;
// a test with zero degrees of freedom has p = 1.
TestResult g_test(const data::CategoricalDataset& d, std::size_t x, std::size_t y, std::span<const std::size_t> z = {});

}  // namespace mgd::estimation

#endif  // MGD_ESTIMATION_INDEPENDENCE_HPP
