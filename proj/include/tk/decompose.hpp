#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tk/operators.hpp"

namespace tk {

using RealMatrix = Eigen::MatrixXd;

/// Orthonormal column basis of a subspace of the standard module.
struct Subspace {
    RealMatrix basis;  ///< |X| x dim

    int dim() const { return static_cast<int>(basis.cols()); }
};

/// Raised when a decomposition cannot be verified after all retries.
class DecompositionError : public std::runtime_error {
public:
    DecompositionError(const std::string& what, std::vector<double> residuals)
        : std::runtime_error(what), residuals_(std::move(residuals)) {}
    const std::vector<double>& residuals() const { return residuals_; }

private:
    std::vector<double> residuals_;
};

struct DecomposeOptions {
    std::uint64_t seed = 42;
    double tol = 1e-9;
    int max_retries = 8;
};

/// Numerical rank from singular values. `ambiguous` is set when a singular
/// value falls within a factor of 10 of the cutoff tol * max(1, sigma_max).
struct RankDecision {
    int rank = 0;
    bool ambiguous = false;
};
RankDecision numerical_rank(const RealMatrix& m, double tol);

/// A and E*_0 .. E*_d as real matrices.
std::vector<RealMatrix> algebra_generators(const LocalOperators& ops);

/// Closure of span{x-hat} under the generators.
Subspace trivial_module_basis(const LocalOperators& ops, double tol = 1e-9);

struct CommutantResult {
    std::vector<RealMatrix> basis;  ///< Frobenius-orthonormal
    bool ambiguous = false;
};

/// Basis of {M : MG = GM for every generator G}, via the null space of the stacked commutator system.
CommutantResult commutant_basis(std::span<const RealMatrix> gens, double tol);

struct HomResult {
    int dim = 0;
    bool ambiguous = false;
};

/// Dimension of the space of intertwiners W -> W' for the given generators.
HomResult hom_dimension(const Subspace& w, const Subspace& w2, std::span<const RealMatrix> gens, double tol);

/// Spectral-norm distance between the orthogonal projections onto two subspaces.
double subspace_distance(const Subspace& a, const Subspace& b);

struct ModuleSummary {
    Subspace basis;
    int endpoint = 0;
    int diameter = 0;
    std::vector<int> level_dims;  ///< dim E*_i W for 0 <= i <= d
    bool thin = false;
    int iso_class = 0;
    double residual = 0.0;       ///< max_G ||(I - P_W) G P_W||_F
    int endomorphism_dim = 1;    ///< real dim of End_T(W); > 1 means not absolutely irreducible

    int dim() const { return basis.dim(); }
};

struct DecompositionReport {
    std::vector<ModuleSummary> modules;
    int trivial_index = -1;
    int endpoint1_count = 0;
    int endpoint1_iso_classes = 0;
    bool endpoint1_all_thin = true;
    bool dim_check = false;  ///< sum of module dims equals |X|
    int commutant_dim = 0;
    int iso_class_count = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    int attempts = 0;
    bool flagged = false;  ///< some rank decision was ambiguous
    double max_residual = 0.0;
    double max_overlap = 0.0;       ///< largest |<u, v>| between bases of distinct modules
    double trivial_distance = 0.0;  ///< distance to trivial_module_basis
};

/// Splits the standard module into irreducible T-modules.
///
/// A seeded random symmetric element of the commutant is diagonalized; its
/// eigenspaces are T-submodules, which are split further until each one has a
/// one-dimensional space of symmetric self-intertwiners. Every module is then
/// checked for invariance under all generators.
DecompositionReport decompose(const LocalOperators& ops, const DecomposeOptions& opts = {});

enum class Verdict { Pass, Fail, Vacuous, NotApplicable };

struct AlgebraicVerdict {
    Verdict verdict = Verdict::NotApplicable;
    std::string reason;
};

/// PASS iff endpoint-1 modules exist, are pairwise isomorphic and thin.
AlgebraicVerdict algebraic_verdict(const DecompositionReport& report);

std::string to_string(Verdict v);

struct DualBlockDims {
    std::vector<int> dims;  ///< dims[i] = dim span{E*_i B E*_1 : B in T}; dims[0] = 1
    int algebra_dim = 0;
    bool capped = false;    ///< true if the word closure hit the cap (dims are lower bounds)
};

/// Word closure of T over its generators, then ranks of the (i, 1) blocks.
DualBlockDims dual_block_dims(const LocalOperators& ops, int algebra_basis_cap = 4096, double tol = 1e-9);

}  // namespace tk
