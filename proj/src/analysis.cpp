#include "tk/analysis.hpp"

#include <algorithm>

#include "tk/report.hpp"

namespace tk {

std::string to_string(Agreement a) {
    switch (a) {
        case Agreement::AgreePass: return "agree-pass";
        case Agreement::AgreeFail: return "agree-fail";
        case Agreement::Vacuous: return "vacuous";
        case Agreement::NotApplicable: return "not-applicable";
        case Agreement::Unchecked: return "unchecked";
        case Agreement::Mismatch: return "MISMATCH";
    }
    return "?";
}

Agreement agreement_of(const PdrProfile& pdr, const Endpoint1Profile& e1, int degree,
                       const std::optional<AlgebraicVerdict>& verdict) {
    if (!verdict) {
        if (!pdr.ok) return Agreement::NotApplicable;
        if (degree < 2) return Agreement::Vacuous;
        return Agreement::Unchecked;
    }
    const bool algebraic_thin = verdict->verdict != Verdict::NotApplicable;
    if (algebraic_thin != pdr.ok) return Agreement::Mismatch;
    if (!pdr.ok) return Agreement::NotApplicable;
    if (degree < 2) return verdict->verdict == Verdict::Vacuous ? Agreement::Vacuous : Agreement::Mismatch;
    if (verdict->verdict == Verdict::Pass && e1.ok) return Agreement::AgreePass;
    if (verdict->verdict == Verdict::Fail && !e1.ok) return Agreement::AgreeFail;
    return Agreement::Mismatch;
}

std::optional<bool> AnalysisReport::block_bounds_hold() const {
    if (agreement != Agreement::AgreePass || !block_dims || !decomposition) return std::nullopt;
    int diam = -1;
    for (const auto& m : decomposition->modules)
        if (m.endpoint == 1) diam = m.diameter;
    const int d = static_cast<int>(block_dims->dims.size()) - 1;
    for (int i = 1; i <= d; ++i) {
        const int cap = i <= diam + 1 ? 2 : 1;
        if (block_dims->dims[i] > cap) return false;
    }
    return true;
}

AnalysisReport analyze(const Graph& g, Vertex x, const AnalysisOptions& opts) {
    AnalysisReport rep;
    rep.n = g.order();
    rep.m = g.size();
    rep.graph6 = to_graph6(g);
    rep.labels = g.labels();
    rep.base = x;

    auto ops = build_operators(g, x);
    rep.degree = g.degree(x);
    rep.pdr = fit_pdr(ops);
    auto parts = neighbor_partitions(g, x);
    rep.endpoint1 = fit_endpoint1(ops, parts, rep.pdr);
    rep.structure = structure_report(g, x);

    if (opts.decompose) {
        rep.decomposition = decompose(ops, opts.decomposition);
        rep.verdict = algebraic_verdict(*rep.decomposition);
        rep.trivial_thin_agrees = (rep.verdict->verdict != Verdict::NotApplicable) == rep.pdr.ok;
    }
    if (opts.block_dims) rep.block_dims = dual_block_dims(ops, 4096, opts.decomposition.tol);
    rep.agreement = agreement_of(rep.pdr, rep.endpoint1, rep.degree, rep.verdict);
    return rep;
}

void ScanSummary::merge(const ScanSummary& o, std::size_t max_reports) {
    graphs += o.graphs;
    instances += o.instances;
    agree_pass += o.agree_pass;
    agree_fail += o.agree_fail;
    skipped_not_thin += o.skipped_not_thin;
    vacuous += o.vacuous;
    mismatches += o.mismatches;
    errors += o.errors;
    flagged += o.flagged;
    bound_checks += o.bound_checks;
    bound_violations += o.bound_violations;
    structure_checks += o.structure_checks;
    structure_violations += o.structure_violations;
    threshold_varies += o.threshold_varies;
    for (const auto& r : o.mismatch_reports)
        if (mismatch_reports.size() < max_reports) mismatch_reports.push_back(r);
    for (const auto& e : o.error_messages)
        if (error_messages.size() < max_reports) error_messages.push_back(e);
}

namespace {

ScanSummary scan_one(const Graph& g, const ScanOptions& opts) {
    ScanSummary s;
    s.graphs = 1;
    for (Vertex x = 0; x < g.order(); ++x) {
        ++s.instances;
        try {
            // Block dims are only needed for PASS instances; compute after the verdict.
            AnalysisOptions first = opts.analysis;
            first.block_dims = false;
            auto rep = analyze(g, x, first);
            if (rep.decomposition && rep.decomposition->flagged) ++s.flagged;
            switch (rep.agreement) {
                case Agreement::AgreePass: ++s.agree_pass; break;
                case Agreement::AgreeFail: ++s.agree_fail; break;
                case Agreement::Vacuous: ++s.vacuous; break;
                case Agreement::NotApplicable: ++s.skipped_not_thin; break;
                case Agreement::Unchecked: break;
                case Agreement::Mismatch:
                    ++s.mismatches;
                    s.mismatch_reports.push_back(report_json(rep).dump());
                    break;
            }
            if (rep.agreement != Agreement::AgreePass) continue;

            ++s.structure_checks;
            if (!rep.structure.all_predicates_hold()) {
                ++s.structure_violations;
                s.mismatch_reports.push_back(report_json(rep).dump());
            }
            if (!rep.structure.threshold_constant) ++s.threshold_varies;
            if (opts.analysis.block_dims) {
                rep.block_dims = dual_block_dims(build_operators(g, x), 4096, opts.analysis.decomposition.tol);
                ++s.bound_checks;
                if (rep.block_dims->capped || !rep.block_bounds_hold().value_or(false)) {
                    ++s.bound_violations;
                    s.mismatch_reports.push_back(report_json(rep).dump());
                }
            }
        } catch (const std::exception& e) {
            ++s.errors;
            s.error_messages.push_back(to_graph6(g) + " vertex " + std::to_string(x) + ": " + e.what());
        }
    }
    return s;
}

constexpr std::size_t kBlock = 2048;

}  // namespace

ScanSummary scan(std::size_t count, const GraphSource& source, const ScanOptions& opts) {
    ScanSummary total;
    std::vector<ScanSummary> block(kBlock);
    for (std::size_t start = 0; start < count; start += kBlock) {
        const std::size_t len = std::min(kBlock, count - start);
        const auto ilen = static_cast<long long>(len);
#pragma omp parallel for schedule(dynamic, 16) num_threads(std::max(1, opts.jobs))
        for (long long k = 0; k < ilen; ++k) {
            auto g = source(start + static_cast<std::size_t>(k));
            block[k] = g ? scan_one(*g, opts) : ScanSummary{};
        }
        for (std::size_t k = 0; k < len; ++k) total.merge(block[k], opts.max_mismatch_reports);
    }
    return total;
}

ScanSummary scan_serial(std::size_t count, const GraphSource& source, const ScanOptions& opts) {
    ScanSummary total;
    for (std::size_t k = 0; k < count; ++k)
        if (auto g = source(k)) total.merge(scan_one(*g, opts), opts.max_mismatch_reports);
    return total;
}

std::size_t labeled_graph_count(int n) {
    if (n < 1 || n > 11) throw GraphError("labeled generation supports 1 <= n <= 11");
    return std::size_t{1} << (n * (n - 1) / 2);
}

std::optional<Graph> labeled_graph(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u, ++bit)
            if ((mask >> bit) & 1u) edges.emplace_back(u, v);
    if (edges.size() + 1 < static_cast<std::size_t>(n)) return std::nullopt;
    Graph g(n, edges);
    if (!is_connected(g)) return std::nullopt;
    return g;
}

}  // namespace tk
