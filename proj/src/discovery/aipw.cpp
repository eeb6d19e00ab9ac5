#include "mgd/discovery/aipw.hpp"

#include "mgd/error.hpp"
#include "mgd/estimation/ipw.hpp"
#include "mgd/estimation/score.hpp"

namespace mgd::discovery {

AipwResult hc_aipw(const data::CategoricalDataset& d, const Constraints& c, const AipwOptions& options) {
    for (std::size_t j = 0; j < d.cols(); ++j)
        if (d.rows() > 0 && d.missing_count(j) == d.rows())
            throw Error(ErrorCode::AllMissingColumn, "column '" + d.variable(j).name + "' has no observed cell");
    std::vector<std::string> names;
    for (const auto& v : d.schema()) names.push_back(v.name);

    AipwResult out;
    out.report = detect_missingness(d, options.alpha);
    out.r_parents = r_parent_columns(d, out.report);
    const estimation::IpwScorer scorer(d, out.r_parents);
    const estimation::FamilyScoreCache cache(scorer);
    auto search = hill_climb(cache, c, required_graph(names, c), options.search);
    out.graph = std::move(search.graph);
    out.trace = std::move(search.trace);
    classify_report(out.report, out.graph, d);
    return out;
}

}  // namespace mgd::discovery
