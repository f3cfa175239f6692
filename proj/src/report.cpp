#include "tk/report.hpp"

#include <iomanip>
#include <sstream>

namespace tk {

using nlohmann::json;

namespace {

json rationals(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

json scalar_json(const FittedScalar& s) { return {{"value", to_string(s.value)}, {"free", s.free}}; }

json bools(const std::vector<bool>& v) {
    json out = json::array();
    for (bool b : v) out.push_back(b);
    return out;
}

json pdr_json(const AnalysisReport& rep) {
    json j{{"ok", rep.pdr.ok}, {"alpha", rationals(rep.pdr.alpha)}, {"beta", rationals(rep.pdr.beta)}, {"witness", nullptr}};
    if (rep.pdr.witness)
        j["witness"] = {{"level", rep.pdr.witness->level},
                        {"z", rep.labels[rep.pdr.witness->z]},
                        {"equation", rep.pdr.witness->equation}};
    return j;
}

json endpoint1_json(const AnalysisReport& rep) {
    const auto& e = rep.endpoint1;
    json j{{"status", to_string(e.status)}, {"ok", e.ok}, {"levels", json::array()}, {"failure", nullptr}};
    for (const auto& lv : e.levels)
        j["levels"].push_back({{"i", lv.level},
                               {"kappa", scalar_json(lv.kappa)},
                               {"mu", scalar_json(lv.mu)},
                               {"theta", scalar_json(lv.theta)},
                               {"rho", scalar_json(lv.rho)},
                               {"consistent", lv.consistent},
                               {"up_cell_nonempty", lv.up_cell_nonempty},
                               {"rho_forced_by_equations", lv.rho_forced_by_equations},
                               {"rho_constraint_binding", lv.rho_constraint_binding}});
    if (e.failure)
        j["failure"] = {{"level", e.failure->level},
                        {"y", rep.labels[e.failure->y]},
                        {"z", rep.labels[e.failure->z]},
                        {"equation", e.failure->equation}};
    return j;
}

json decomposition_json(const DecompositionReport& d) {
    json j{{"seed", d.seed},
           {"tol", d.tol},
           {"attempts", d.attempts},
           {"flagged", d.flagged},
           {"commutant_dim", d.commutant_dim},
           {"dim_check", d.dim_check},
           {"trivial_index", d.trivial_index},
           {"iso_class_count", d.iso_class_count},
           {"endpoint1_count", d.endpoint1_count},
           {"endpoint1_iso_classes", d.endpoint1_iso_classes},
           {"endpoint1_all_thin", d.endpoint1_all_thin},
           {"max_residual", d.max_residual},
           {"max_overlap", d.max_overlap},
           {"trivial_distance", d.trivial_distance},
           {"modules", json::array()}};
    for (const auto& m : d.modules) {
        json basis = json::array();
        for (Eigen::Index r = 0; r < m.basis.basis.rows(); ++r) {
            json row = json::array();
            for (Eigen::Index c = 0; c < m.basis.basis.cols(); ++c) row.push_back(m.basis.basis(r, c));
            basis.push_back(std::move(row));
        }
        j["modules"].push_back({{"dim", m.dim()},
                                {"endpoint", m.endpoint},
                                {"diameter", m.diameter},
                                {"level_dims", m.level_dims},
                                {"thin", m.thin},
                                {"iso_class", m.iso_class},
                                {"residual", m.residual},
                                {"endomorphism_dim", m.endomorphism_dim},
                                {"basis", std::move(basis)}});
    }
    return j;
}

json structure_json(const AnalysisReport& rep) {
    const auto& s = rep.structure;
    json j{{"vacuous", s.vacuous}, {"tree", s.tree}, {"neighbors", json::array()}};
    for (const auto& n : s.neighbors) {
        json t = n.t ? json(*n.t) : json(nullptr);
        j["neighbors"].push_back(
            {{"y", rep.labels[n.y]}, {"t", t}, {"up", bools(n.up)}, {"flat", bools(n.flat)}, {"down", bools(n.down)}});
    }
    j["predicates"] = {{"down_cells_nonempty", s.down_cells_nonempty},
                       {"flat_cells_empty_below_up", s.flat_cells_empty_below_up},
                       {"thresholds_defined", s.thresholds_defined},
                       {"flat_run_after_threshold", s.flat_run_after_threshold},
                       {"tree_threshold_is_ecc", s.tree_threshold_is_ecc},
                       {"d11_forces_zero", s.d11_forces_zero},
                       {"threshold_constant", s.threshold_constant}};
    return j;
}

}  // namespace

json matrix_json(const IntMatrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
        out.push_back(std::move(row));
    }
    return out;
}

json report_json(const AnalysisReport& rep) {
    json j;
    j["schema"] = kReportSchema;
    j["graph"] = {{"n", rep.n}, {"m", rep.m}, {"graph6", rep.graph6}};
    j["base"] = rep.labels[rep.base];
    j["degree"] = rep.degree;
    j["ecc"] = rep.structure.ecc;
    j["pdr"] = pdr_json(rep);
    j["endpoint1"] = endpoint1_json(rep);
    j["decomposition"] = rep.decomposition ? decomposition_json(*rep.decomposition) : json(nullptr);
    j["algebraic_verdict"] = rep.verdict ? json{{"verdict", to_string(rep.verdict->verdict)}, {"reason", rep.verdict->reason}}
                                         : json(nullptr);
    j["dual_block_dims"] = rep.block_dims ? json{{"dims", rep.block_dims->dims},
                                                 {"algebra_dim", rep.block_dims->algebra_dim},
                                                 {"capped", rep.block_dims->capped}}
                                          : json(nullptr);
    j["structure"] = structure_json(rep);
    j["verdict_agreement"] = to_string(rep.agreement);
    j["trivial_thin_agrees"] = rep.trivial_thin_agrees ? json(*rep.trivial_thin_agrees) : json(nullptr);
    return j;
}

namespace {

void table_row(std::ostringstream& out, const std::string& name, const std::vector<std::string>& cells) {
    out << std::left << std::setw(8) << name;
    for (const auto& c : cells) out << std::right << std::setw(7) << c;
    out << '\n';
}

}  // namespace

std::string report_table(const AnalysisReport& rep) {
    std::ostringstream out;
    out << "graph " << rep.graph6 << "  n=" << rep.n << " m=" << rep.m << "  base " << rep.labels[rep.base]
        << "  ecc " << rep.structure.ecc << "  degree " << rep.degree << "\n\n";

    std::vector<std::string> idx, alpha, beta;
    for (std::size_t i = 0; i < rep.pdr.alpha.size(); ++i) {
        idx.push_back(std::to_string(i));
        alpha.push_back(to_string(rep.pdr.alpha[i]));
        beta.push_back(to_string(rep.pdr.beta[i]));
    }
    table_row(out, "i", idx);
    table_row(out, "alpha", alpha);
    table_row(out, "beta", beta);
    out << "trivial module thin: " << (rep.pdr.ok ? "yes" : "no") << "\n\n";

    const auto& e = rep.endpoint1;
    if (e.status != Applicability::Applicable) {
        out << "endpoint-1 condition: " << to_string(e.status) << "\n";
    } else {
        std::vector<std::string> i1, k, mu, th, rho;
        auto cell = [](const FittedScalar& s) { return to_string(s.value) + (s.free ? "*" : ""); };
        for (const auto& lv : e.levels) {
            i1.push_back(std::to_string(lv.level));
            k.push_back(cell(lv.kappa));
            mu.push_back(cell(lv.mu));
            th.push_back(cell(lv.theta));
            rho.push_back(cell(lv.rho));
        }
        table_row(out, "i", i1);
        table_row(out, "kappa", k);
        table_row(out, "mu", mu);
        table_row(out, "theta", th);
        table_row(out, "rho", rho);
        out << "endpoint-1 condition: " << (e.ok ? "holds" : "fails");
        if (e.failure)
            out << " (level " << e.failure->level << ", y=" << rep.labels[e.failure->y] << ", z="
                << rep.labels[e.failure->z] << ", " << e.failure->equation << ")";
        out << "   (* = free, set to 0)\n";
    }

    if (rep.decomposition) {
        out << "\nmodules (seed " << rep.decomposition->seed << "):\n";
        for (const auto& m : rep.decomposition->modules) {
            out << "  dim " << m.dim() << "  endpoint " << m.endpoint << "  diameter " << m.diameter << "  levels [";
            for (std::size_t i = 0; i < m.level_dims.size(); ++i) out << (i ? " " : "") << m.level_dims[i];
            out << "]  " << (m.thin ? "thin" : "not thin") << "  class " << m.iso_class << '\n';
        }
        out << "algebraic verdict: " << to_string(rep.verdict->verdict);
        if (!rep.verdict->reason.empty()) out << " (" << rep.verdict->reason << ")";
        out << '\n';
    }
    if (rep.block_dims) {
        out << "dim E*_i T E*_1:";
        for (auto d : rep.block_dims->dims) out << ' ' << d;
        out << "   dim T " << rep.block_dims->algebra_dim << (rep.block_dims->capped ? " (capped)" : "") << '\n';
    }
    out << "agreement: " << to_string(rep.agreement) << '\n';
    return out.str();
}

json summary_json(const ScanSummary& s) {
    return {{"graphs", s.graphs},
            {"instances", s.instances},
            {"agree_pass", s.agree_pass},
            {"agree_fail", s.agree_fail},
            {"skipped_not_thin", s.skipped_not_thin},
            {"vacuous", s.vacuous},
            {"mismatches", s.mismatches},
            {"errors", s.errors},
            {"flagged", s.flagged},
            {"bound_checks", s.bound_checks},
            {"bound_violations", s.bound_violations},
            {"structure_checks", s.structure_checks},
            {"structure_violations", s.structure_violations},
            {"threshold_varies", s.threshold_varies}};
}

json partition_json(const DistancePartition& p, const Graph& g) {
    json cells = json::array();
    for (const auto& [key, verts] : p.cells) {
        json vs = json::array();
        for (Vertex v : verts) vs.push_back(g.label(v));
        cells.push_back({{"i", key.first}, {"j", key.second}, {"vertices", std::move(vs)}});
    }
    return {{"x", g.label(p.x)}, {"y", g.label(p.y)}, {"ecc_x", p.ecc_x}, {"ecc_y", p.ecc_y}, {"cells", std::move(cells)}};
}

}  // namespace tk
