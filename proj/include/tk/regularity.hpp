#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tk/decompose.hpp"
#include "tk/exact.hpp"
#include "tk/operators.hpp"
#include "tk/partition.hpp"

namespace tk {

/// Walk-count ratios certifying a thin trivial module:
/// r^{i+1}l(z) = alpha_i r^i(z) and r^i f(z) = beta_i r^i(z) for every z in Gamma_i(x).
struct PdrProfile {
    struct Witness {
        int level;
        Vertex z;
        std::string equation;  ///< "alpha" or "beta"
    };

    std::vector<Rational> alpha;  ///< indexed 0..d; entries past a failure are left at 0
    std::vector<Rational> beta;
    bool ok = false;
    std::optional<Witness> witness;
};

PdrProfile fit_pdr(const LocalOperators& ops);

/// One fitted scalar; `free` means the equations leave it undetermined (value is then 0).
struct FittedScalar {
    Rational value;
    bool free = false;
};

struct LevelFit {
    int level = 0;
    FittedScalar kappa, mu, theta, rho;
    bool consistent = true;
    bool up_cell_nonempty = false;     ///< D^i_{i+1}(x,y) nonempty for some y
    bool rho_forced_by_equations = false;  ///< equations alone already force rho_i = 0
    bool rho_constraint_binding = false;   ///< rho_i = 0 imposed but not implied (never observed)
};

enum class Applicability { Applicable, TrivialNotThin, LeafBase };

std::string to_string(Applicability a);

struct Endpoint1Profile {
    struct Failure {
        int level;
        Vertex y;
        Vertex z;
        std::string equation;  ///< "kappa-mu", "theta-rho" or "rho-side"
    };

    Applicability status = Applicability::Applicable;
    bool ok = false;
    std::vector<LevelFit> levels;  ///< one entry per i = 1..d
    std::optional<Failure> failure;
};

/// Decides the endpoint-1 walk-count condition at x.
///
/// For each level i the equations
///   r^i l(y,z)     = kappa_i r^{i-1}(y,z) + mu_i  l r^i(y,z)
///   r^{i-1} f(y,z) = theta_i r^{i-1}(y,z) + rho_i l r^i(y,z)
/// over all y in Gamma(x), z in Gamma_i(x) are solved exactly, together with
/// rho_i = 0 when some D^i_{i+1}(x,y) is nonempty. Not run when the trivial
/// module is not thin or x has degree < 2.
Endpoint1Profile fit_endpoint1(const LocalOperators& ops, std::span<const DistancePartition> partitions,
                               const PdrProfile& pdr);
Endpoint1Profile fit_endpoint1(const LocalOperators& ops, std::span<const DistancePartition> partitions);

/// Distance partitions for every neighbor of x, in ascending neighbor order.
std::vector<DistancePartition> neighbor_partitions(const Graph& g, Vertex x);

/// Scalars for levels 1..d, as sequences indexed from 0.
struct ScalarSequences {
    std::vector<Rational> kappa, mu, theta, rho;
};

ScalarSequences canonical_witness(const Endpoint1Profile& profile);

/// Substitutes the given scalars into every endpoint-1 equation, including the rho side condition.
bool satisfies_endpoint1(const LocalOperators& ops, std::span<const DistancePartition> partitions,
                         const ScalarSequences& s);

/// True iff dim(E*_1 T x-hat) = |Gamma(x)|, i.e. there are no endpoint-1 modules.
bool no_endpoint1_modules(const LocalOperators& ops, const Subspace& trivial_basis, double tol = 1e-9);

}  // namespace tk
