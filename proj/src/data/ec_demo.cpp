#include "mgd/data/ec_demo.hpp"

#include <map>
#include <string>

#include "mgd/data/sampling.hpp"

namespace mgd::data::ec_demo {

namespace {

const std::vector<std::string> kNames = {
    "Cytology", "PreoperativeGrade", "PostoperativeGrade", "Chemotherapy", "Radiotherapy",
    "LVSI",     "ER",                "PR",                 "CTMRI",        "CA125",
    "L1CAM",    "p53",               "Platelets",          "LNM",          "Recurrence",
    "Survival1yr", "Survival3yr",    "Survival5yr",        "Hospital",
};

const std::vector<graphs::NamedEdge> kEdges = {
    {"PreoperativeGrade", "PostoperativeGrade"},
    {"p53", "PostoperativeGrade"},
    {"ER", "PR"},
    {"ER", "p53"},
    {"p53", "L1CAM"},
    {"PostoperativeGrade", "LVSI"},
    {"L1CAM", "LVSI"},
    {"PostoperativeGrade", "LNM"},
    {"LVSI", "LNM"},
    {"LNM", "CTMRI"},
    {"LNM", "CA125"},
    {"LNM", "Cytology"},
    {"LNM", "Chemotherapy"},
    {"Hospital", "Chemotherapy"},
    {"LVSI", "Radiotherapy"},
    {"Hospital", "Radiotherapy"},
    {"Chemotherapy", "Recurrence"},
    {"Platelets", "Recurrence"},
    {"LNM", "Recurrence"},
    {"Recurrence", "Survival1yr"},
    {"Recurrence", "Survival3yr"},
    {"Survival1yr", "Survival3yr"},
    {"Survival3yr", "Survival5yr"},
};

std::vector<std::string> binary(const char* a, const char* b) { return {a, b}; }

// Two-state rows given P(second state) per parent configuration.
std::vector<double> bernoulli_rows(std::initializer_list<double> p_second) {
    std::vector<double> out;
    for (double p : p_second) {
        out.push_back(1.0 - p);
        out.push_back(p);
    }
    return out;
}

}  // namespace

std::vector<VariableSchema> schema() {
    std::vector<std::string> hospitals;
    for (std::size_t h = 1; h <= kHospitals; ++h) hospitals.push_back("H" + std::to_string(h));
    const std::map<std::string, std::vector<std::string>> states = {
        {"Cytology", binary("negative", "positive")},
        {"PreoperativeGrade", {"G1", "G2", "G3"}},
        {"PostoperativeGrade", {"G1", "G2", "G3"}},
        {"Chemotherapy", binary("no", "yes")},
        {"Radiotherapy", binary("no", "yes")},
        {"LVSI", binary("absent", "present")},
        {"ER", binary("negative", "positive")},
        {"PR", binary("negative", "positive")},
        {"CTMRI", binary("negative", "positive")},
        {"CA125", binary("normal", "elevated")},
        {"L1CAM", binary("negative", "positive")},
        {"p53", binary("wildtype", "mutant")},
        {"Platelets", binary("normal", "elevated")},
        {"LNM", binary("no", "yes")},
        {"Recurrence", binary("no", "yes")},
        {"Survival1yr", binary("alive", "deceased")},
        {"Survival3yr", binary("alive", "deceased")},
        {"Survival5yr", binary("alive", "deceased")},
        {"Hospital", hospitals},
    };
    std::vector<VariableSchema> out;
    for (const auto& n : kNames) out.push_back({n, states.at(n)});
    return out;
}

graphs::Dag graph() { return graphs::Dag(kNames, kEdges); }

estimation::ParameterSet parameters() {
    const auto g = graph();
    const auto vars = schema();
    std::map<std::string, std::vector<double>> tables;

    tables["Hospital"] = {0.16, 0.14, 0.12, 0.11, 0.10, 0.09, 0.08, 0.08, 0.07, 0.05};
    tables["PreoperativeGrade"] = {0.45, 0.35, 0.20};
    tables["ER"] = bernoulli_rows({0.75});
    tables["Platelets"] = bernoulli_rows({0.15});
    tables["PR"] = bernoulli_rows({0.20, 0.80});          // | ER
    tables["p53"] = bernoulli_rows({0.45, 0.12});         // | ER
    tables["L1CAM"] = bernoulli_rows({0.15, 0.60});       // | p53
    // | PreoperativeGrade, p53
    tables["PostoperativeGrade"] = {0.75, 0.20, 0.05, 0.45, 0.35, 0.20, 0.20, 0.65, 0.15,
                                    0.10, 0.45, 0.45, 0.05, 0.25, 0.70, 0.02, 0.13, 0.85};
    tables["LVSI"] = bernoulli_rows({0.10, 0.30, 0.25, 0.50, 0.45, 0.70});  // | PostoperativeGrade, L1CAM
    tables["LNM"] = bernoulli_rows({0.03, 0.20, 0.07, 0.30, 0.15, 0.50});   // | PostoperativeGrade, LVSI
    tables["CTMRI"] = bernoulli_rows({0.07, 0.55});       // | LNM
    tables["CA125"] = bernoulli_rows({0.15, 0.60});       // | LNM
    tables["Cytology"] = bernoulli_rows({0.07, 0.30});    // | LNM
    // | Chemotherapy, Platelets, LNM
    tables["Recurrence"] = bernoulli_rows({0.06, 0.35, 0.14, 0.45, 0.08, 0.25, 0.15, 0.35});
    tables["Survival1yr"] = bernoulli_rows({0.02, 0.20});          // | Recurrence
    tables["Survival3yr"] = bernoulli_rows({0.05, 0.99, 0.35, 0.99});  // | Recurrence, Survival1yr
    tables["Survival5yr"] = bernoulli_rows({0.10, 0.99});          // | Survival3yr

    // Hospital practice variation: treatment rates shift with the hospital index h (0-based).
    std::vector<double> chemo, radio;
    for (int lnm = 0; lnm < 2; ++lnm)
        for (std::size_t h = 0; h < kHospitals; ++h) {
            const double p = lnm ? 0.55 + 0.05 * static_cast<double>(h % 5) : 0.08 + 0.02 * static_cast<double>(h % 4);
            chemo.push_back(1.0 - p);
            chemo.push_back(p);
        }
    for (int lvsi = 0; lvsi < 2; ++lvsi)
        for (std::size_t h = 0; h < kHospitals; ++h) {
            const double p = lvsi ? 0.45 + 0.04 * static_cast<double>(h % 4) : 0.12 + 0.03 * static_cast<double>(h % 3);
            radio.push_back(1.0 - p);
            radio.push_back(p);
        }
    tables["Chemotherapy"] = chemo;   // | LNM, Hospital
    tables["Radiotherapy"] = radio;   // | LVSI, Hospital

    std::vector<estimation::Cpt> cpts(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        auto& cpt = cpts[v];
        cpt.parents = g.parents(static_cast<int>(v));
        for (int p : cpt.parents) cpt.parent_cardinalities.push_back(vars[static_cast<std::size_t>(p)].cardinality());
        cpt.cardinality = vars[v].cardinality();
        cpt.table = tables.at(g.name(static_cast<int>(v)));
    }
    return estimation::ParameterSet(g, vars, std::move(cpts), 0.0);
}

graphs::RoleMap roles() {
    using graphs::Role;
    return {
        {"Chemotherapy", Role::Treatment}, {"Radiotherapy", Role::Treatment}, {"Survival1yr", Role::Outcome},
        {"Survival3yr", Role::Outcome},    {"Survival5yr", Role::Outcome},    {"Recurrence", Role::Outcome},
        {"LNM", Role::Event},              {"ER", Role::Biomarker},           {"PR", Role::Biomarker},
        {"CA125", Role::Biomarker},        {"p53", Role::Biomarker},          {"L1CAM", Role::Biomarker},
        {"Platelets", Role::Biomarker},    {"Hospital", Role::Context},
    };
}

CategoricalDataset sample(std::size_t n, std::uint64_t seed) { return forward_sample(graph(), parameters(), n, seed); }

AmputationSpec mnar_amputation(std::uint64_t seed) {
    using graphs::MechanismClass;
    AmputationSpec spec;
    spec.seed = seed;
    spec.targets.push_back({"LVSI", MechanismClass::MCAR, {}, logit(0.15), {}});
    spec.targets.push_back({"CA125", MechanismClass::MNAR, {"LVSI"}, 0.0, {{"LVSI", {logit(0.15), logit(0.75)}}}});
    spec.targets.push_back({"p53", MechanismClass::MNAR, {"CA125"}, 0.0, {{"CA125", {logit(0.10), logit(0.70)}}}});
    spec.targets.push_back({"L1CAM", MechanismClass::MNAR, {"p53"}, 0.0, {{"p53", {logit(0.10), logit(0.70)}}}});
    return spec;
}

std::vector<graphs::NamedEdge> required_edges() {
    return {{"Survival1yr", "Survival3yr"}, {"Survival3yr", "Survival5yr"}};
}

std::vector<graphs::NamedEdge> forbidden_edges() {
    std::vector<graphs::NamedEdge> out;
    for (const auto& n : kNames)
        if (n != "Hospital") out.emplace_back(n, "Hospital");
    return out;
}

}  // namespace mgd::data::ec_demo
