#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tk/decompose.hpp"
#include "tk/graph.hpp"
#include "tk/partition.hpp"
#include "tk/regularity.hpp"

namespace tk {

enum class Agreement { AgreePass, AgreeFail, Vacuous, NotApplicable, Unchecked, Mismatch };

std::string to_string(Agreement a);

struct AnalysisOptions {
    bool decompose = false;
    bool block_dims = false;  ///< also compute dual_block_dims
    DecomposeOptions decomposition;
};

/// Everything computed for one (graph, base vertex) instance.
struct AnalysisReport {
    int n = 0;
    std::size_t m = 0;
    std::string graph6;
    std::vector<std::string> labels;
    Vertex base = 0;
    int degree = 0;

    PdrProfile pdr;
    Endpoint1Profile endpoint1;
    PartitionStructureReport structure;
    std::optional<DecompositionReport> decomposition;
    std::optional<AlgebraicVerdict> verdict;
    std::optional<DualBlockDims> block_dims;
    Agreement agreement = Agreement::Unchecked;
    std::optional<bool> trivial_thin_agrees;  ///< exact and numerical thinness agree

    /// Dimension bounds on E*_i T E*_1 for a PASS instance; nullopt when not applicable.
    std::optional<bool> block_bounds_hold() const;
};

AnalysisReport analyze(const Graph& g, Vertex x, const AnalysisOptions& opts);

/// Agreement between the walk-count side and the module side.
Agreement agreement_of(const PdrProfile& pdr, const Endpoint1Profile& e1, int degree,
                       const std::optional<AlgebraicVerdict>& verdict);

// Cross-validation over corpora.

/// Produces the graph for a work-item index, or nullopt to skip it.
using GraphSource = std::function<std::optional<Graph>(std::size_t)>;

struct ScanOptions {
    AnalysisOptions analysis;
    int jobs = 1;
    std::size_t max_mismatch_reports = 20;
};

struct ScanSummary {
    std::size_t graphs = 0;
    std::size_t instances = 0;
    std::size_t agree_pass = 0;
    std::size_t agree_fail = 0;
    std::size_t skipped_not_thin = 0;
    std::size_t vacuous = 0;
    std::size_t mismatches = 0;
    std::size_t errors = 0;
    std::size_t flagged = 0;               ///< decompositions with ambiguous rank decisions
    std::size_t bound_checks = 0;          ///< PASS instances whose block dims were checked
    std::size_t bound_violations = 0;
    std::size_t structure_checks = 0;
    std::size_t structure_violations = 0;
    std::size_t threshold_varies = 0;      ///< PASS instances where t(y) depends on y
    std::vector<std::string> mismatch_reports;  ///< JSON lines
    std::vector<std::string> error_messages;

    void merge(const ScanSummary& other, std::size_t max_reports);
    bool clean() const { return mismatches == 0 && errors == 0 && bound_violations == 0 && structure_violations == 0; }
};

/// Runs every (graph, vertex) instance. Graphs are processed in blocks on
/// `jobs` OpenMP threads and merged in input order, so output is deterministic.
ScanSummary scan(std::size_t count, const GraphSource& source, const ScanOptions& opts);

/// Single-threaded reference for scan().
ScanSummary scan_serial(std::size_t count, const GraphSource& source, const ScanOptions& opts);

/// Labeled connected graphs on n vertices by adjacency bitmask; index = bitmask over the upper triangle.
std::size_t labeled_graph_count(int n);
std::optional<Graph> labeled_graph(int n, std::uint64_t mask);

}  // namespace tk
