#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mgd/cli/app.hpp"
#include "mgd/data/amputation.hpp"
#include "mgd/data/csv.hpp"
#include "mgd/data/ec_demo.hpp"
#include "mgd/discovery/aipw.hpp"
#include "mgd/discovery/evaluate.hpp"
#include "mgd/discovery/knowledge.hpp"
#include "mgd/error.hpp"
#include "mgd/estimation/likelihood.hpp"
#include "mgd/estimation/mle.hpp"
#include "mgd/graphs/dsep.hpp"

namespace py = pybind11;
using namespace mgd;

namespace {

using EdgeList = std::vector<graphs::NamedEdge>;

std::optional<std::vector<data::VariableSchema>> schema_of(const std::optional<std::string>& schema_json) {
    if (!schema_json) return std::nullopt;
    return data::parse_schema_json(*schema_json);
}

discovery::Constraints constraints_for(const data::CategoricalDataset& d, const EdgeList& required,
                                       const EdgeList& forbidden) {
    discovery::KnowledgeBase kb;
    kb.required.insert(required.begin(), required.end());
    kb.forbidden.insert(forbidden.begin(), forbidden.end());
    std::vector<std::string> names;
    for (const auto& v : d.schema()) names.push_back(v.name);
    return discovery::resolve(kb, names);
}

std::string ec_demo_csv(std::size_t n, std::uint64_t seed, bool mnar) {
    auto d = data::ec_demo::sample(n, seed);
    if (mnar) d = data::ampute(d, data::ec_demo::mnar_amputation(seed));
    return data::write_csv(d);
}

std::string ampute_csv(const std::string& csv, const std::string& spec_json,
                       const std::optional<std::string>& schema_json) {
    const auto d = data::parse_csv(csv, schema_of(schema_json));
    return data::write_csv(data::ampute(d, data::parse_amputation_json(spec_json, &d)));
}

std::string fit_mle(const std::string& csv, const std::vector<std::string>& vertices, const EdgeList& edges,
                    double pseudocount, const std::optional<std::string>& schema_json) {
    const auto d = data::parse_csv(csv, schema_of(schema_json));
    const auto g = graphs::build_dag(vertices, edges);
    return estimation::write_parameters_json(estimation::fit_mle(g, d, pseudocount), g);
}

double log_likelihood(const std::string& csv, const std::vector<std::string>& vertices, const EdgeList& edges,
                      const std::string& params_json, const std::optional<std::string>& schema_json) {
    const auto d = data::parse_csv(csv, schema_of(schema_json));
    const auto g = graphs::build_dag(vertices, edges);
    return estimation::log_likelihood(estimation::parse_parameters_json(params_json, g), g, d).log_likelihood;
}

EdgeList hc_aipw(const std::string& csv, const EdgeList& required, const EdgeList& forbidden, double alpha,
                 const std::optional<std::string>& schema_json) {
    const auto d = data::parse_csv(csv, schema_of(schema_json));
    discovery::AipwOptions o;
    o.alpha = alpha;
    return discovery::hc_aipw(d, constraints_for(d, required, forbidden), o).graph.named_edges();
}

py::list evaluate(const std::string& csv, const std::vector<std::string>& algorithms, std::size_t replicates,
                  std::uint64_t seed, unsigned threads, const EdgeList& required, const EdgeList& forbidden,
                  const std::optional<std::string>& schema_json) {
    const auto d = data::parse_csv(csv, schema_of(schema_json));
    discovery::EvaluationOptions o;
    if (!algorithms.empty()) {
        o.algorithms.clear();
        for (const auto& a : algorithms) o.algorithms.push_back(discovery::parse_algorithm(a));
    }
    o.replicates = replicates;
    o.seed = seed;
    o.threads = threads;
    const auto c = constraints_for(d, required, forbidden);
    discovery::EvaluationReport r;
    {
        py::gil_scoped_release release;
        r = discovery::evaluate(d, c, o);
    }
    py::list rows;
    for (const auto& row : r.rows) {
        py::dict out;
        out["algorithm"] = row.algorithm;
        out["replicate"] = row.replicate;
        out["ll_in"] = row.ll_in.log_likelihood;
        out["ll_out"] = row.ll_out.log_likelihood;
        out["ll_in_rescaled"] = row.ll_in_rescaled;
        out["ll_out_rescaled"] = row.ll_out_rescaled;
        out["edges"] = row.graph.named_edges();
        rows.append(out);
    }
    return rows;
}

py::tuple run(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"mgd"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = 0;
    {
        py::gil_scoped_release release;
        code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_mgd, m) {
    m.doc() = "Bindings for the mgd causal discovery library.";
    m.attr("__version__") = "0.1.0";
    py::register_exception<Error>(m, "MgdError", PyExc_RuntimeError);

    m.def(
        "d_separated",
        [](const std::vector<std::string>& vertices, const EdgeList& edges, const std::vector<std::string>& x,
           const std::vector<std::string>& y, const std::vector<std::string>& z) {
            return graphs::d_separated(graphs::build_dag(vertices, edges), x, y, z);
        },
        py::arg("vertices"), py::arg("edges"), py::arg("x"), py::arg("y"), py::arg("z") = std::vector<std::string>{},
        "True iff z d-separates x from y in the DAG.");
    m.def("ec_demo_csv", &ec_demo_csv, py::arg("n") = data::ec_demo::kReferenceRows, py::arg("seed") = 0,
          py::arg("mnar") = false, "Sample the synthetic endometrial-cancer cohort as CSV text.");
    m.def("ampute_csv", &ampute_csv, py::arg("csv"), py::arg("spec_json"), py::arg("schema_json") = py::none(),
          "Mask cells of a CSV according to an amputation spec.");
    m.def("fit_mle", &fit_mle, py::arg("csv"), py::arg("vertices"), py::arg("edges"), py::arg("pseudocount") = 1.0,
          py::arg("schema_json") = py::none(), "Complete-case MLE parameters as JSON.");
    m.def("log_likelihood", &log_likelihood, py::arg("csv"), py::arg("vertices"), py::arg("edges"),
          py::arg("params_json"), py::arg("schema_json") = py::none(),
          "Observed-data log-likelihood, missing cells summed out.");
    m.def("hc_aipw", &hc_aipw, py::arg("csv"), py::arg("required") = EdgeList{}, py::arg("forbidden") = EdgeList{},
          py::arg("alpha") = 0.01, py::arg("schema_json") = py::none(),
          "Learn a DAG with inverse-probability-weighted hill climbing; returns its edges.");
    m.def("evaluate", &evaluate, py::arg("csv"), py::arg("algorithms") = std::vector<std::string>{},
          py::arg("replicates") = 100, py::arg("seed") = 0, py::arg("threads") = 1, py::arg("required") = EdgeList{},
          py::arg("forbidden") = EdgeList{}, py::arg("schema_json") = py::none(),
          "Bootstrap comparison of the learners; one dict per (replicate, algorithm).");
    m.def("run", &run, py::arg("args"), "Run the mgd command line in-process; returns (exit code, stdout, stderr).");
}
