#include <doctest.h>

#include "tk/analysis.hpp"
#include "tk/constructions.hpp"
#include "tk/report.hpp"

using namespace tk;

namespace {

AnalysisOptions full() {
    AnalysisOptions o;
    o.decompose = true;
    o.block_dims = true;
    return o;
}

ScanOptions scan_options(int jobs) {
    ScanOptions o;
    o.analysis.decompose = true;
    o.analysis.block_dims = true;
    o.jobs = jobs;
    return o;
}

bool same(const ScanSummary& a, const ScanSummary& b) {
    return summary_json(a) == summary_json(b) && a.mismatch_reports == b.mismatch_reports;
}

}  // namespace

TEST_CASE("labeled generation counts connected graphs") {
    // 1, 1, 4, 38, 728 connected labeled graphs
    const std::size_t want[] = {0, 1, 1, 4, 38, 728};
    for (int n = 1; n <= 5; ++n) {
        std::size_t connected = 0;
        for (std::uint64_t m = 0; m < labeled_graph_count(n); ++m) connected += labeled_graph(n, m).has_value();
        CHECK(connected == want[n]);
    }
    CHECK_THROWS_AS(labeled_graph_count(12), GraphError);
}

TEST_CASE("known verdicts") {
    for (auto* name : {"c5", "c6", "petersen"}) {
        auto g = *builtin_graph(name);
        auto rep = analyze(g, 0, full());
        CAPTURE(name);
        CHECK(rep.agreement == Agreement::AgreePass);
        CHECK(rep.block_bounds_hold() == true);
    }
    auto rook = analyze(rook_3x3(), 0, full());
    CHECK(rook.agreement == Agreement::AgreeFail);
    auto leaf = analyze(path_graph(3), 0, full());
    CHECK(leaf.agreement == Agreement::Vacuous);
    CHECK(leaf.verdict->verdict == Verdict::Vacuous);
}

TEST_CASE("agreement without decomposition") {
    auto [g, x] = example_graph();
    auto rep = analyze(g, x, {});
    CHECK(rep.agreement == Agreement::Unchecked);
    CHECK_FALSE(rep.decomposition);
}

TEST_CASE("agreement logic") {
    PdrProfile thin;
    thin.ok = true;
    Endpoint1Profile pass;
    pass.ok = true;
    Endpoint1Profile fail;
    AlgebraicVerdict vp{Verdict::Pass, ""};
    AlgebraicVerdict vf{Verdict::Fail, "non-thin"};
    AlgebraicVerdict na{Verdict::NotApplicable, ""};
    CHECK(agreement_of(thin, pass, 2, vp) == Agreement::AgreePass);
    CHECK(agreement_of(thin, fail, 2, vf) == Agreement::AgreeFail);
    CHECK(agreement_of(thin, pass, 2, vf) == Agreement::Mismatch);
    CHECK(agreement_of(thin, fail, 2, vp) == Agreement::Mismatch);
    CHECK(agreement_of(thin, pass, 2, na) == Agreement::Mismatch);
    PdrProfile thick;
    CHECK(agreement_of(thick, fail, 2, na) == Agreement::NotApplicable);
    CHECK(agreement_of(thick, fail, 2, vp) == Agreement::Mismatch);
}

TEST_CASE("parallel scan matches serial scan") {
    const int n = 5;
    GraphSource src = [](std::size_t k) { return labeled_graph(n, k); };
    auto serial = scan_serial(labeled_graph_count(n), src, scan_options(1));
    auto parallel = scan(labeled_graph_count(n), src, scan_options(4));
    CHECK(same(serial, parallel));
    CHECK(serial.clean());
    CHECK(serial.graphs == 728);
    CHECK(serial.instances == 728 * 5);
    CHECK(serial.agree_pass + serial.agree_fail + serial.skipped_not_thin + serial.vacuous == serial.instances);
}

TEST_CASE("report json") {
    auto [g, x] = example_graph();
    auto rep = analyze(g, x, full());
    auto j = report_json(rep);
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["base"] == "1");
    CHECK(j["pdr"]["alpha"] == nlohmann::json{"2", "3", "0"});
    CHECK(j["endpoint1"]["levels"][0]["theta"]["value"] == "-1");
    CHECK(j["decomposition"]["modules"].size() == 3);
    CHECK(j["decomposition"]["seed"] == 42);
    CHECK(j["verdict_agreement"] == "agree-pass");
    CHECK(j["dual_block_dims"]["dims"] == nlohmann::json{1, 2, 2});
    CHECK(report_json(analyze(g, x, full())).dump() == j.dump());

    auto table = report_table(rep);
    CHECK(table.find("alpha") != std::string::npos);
    CHECK(table.find("agree-pass") != std::string::npos);
}
