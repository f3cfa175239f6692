#include "tk/regularity.hpp"

#include <array>
#include <stdexcept>

namespace tk {

PdrProfile fit_pdr(const LocalOperators& ops) {
    const int d = ops.ecc();
    const Vertex x = ops.metric.base;
    WalkCounter walks(ops);

    PdrProfile p;
    p.alpha.assign(d + 1, 0);
    p.beta.assign(d + 1, 0);
    p.ok = true;
    for (int i = 0; i <= d; ++i) {
        const IntMatrix& ri = walks.raise_power(i);
        IntMatrix rl = walks.table(ShapeFamily::RaiseThenLower, i + 1);
        IntMatrix rf = walks.table(ShapeFamily::RaiseThenFlat, i);
        const auto& sphere = ops.metric.spheres[i];
        const Vertex z0 = sphere.front();
        p.alpha[i] = Rational(rl(z0, x), ri(z0, x));
        p.beta[i] = Rational(rf(z0, x), ri(z0, x));
        p.alpha[i].canonicalize();
        p.beta[i].canonicalize();
        for (Vertex z : sphere) {
            if (Rational(rl(z, x)) != p.alpha[i] * ri(z, x)) {
                p.ok = false;
                p.witness = PdrProfile::Witness{i, z, "alpha"};
                return p;
            }
            if (Rational(rf(z, x)) != p.beta[i] * ri(z, x)) {
                p.ok = false;
                p.witness = PdrProfile::Witness{i, z, "beta"};
                return p;
            }
        }
    }
    return p;
}

std::string to_string(Applicability a) {
    switch (a) {
        case Applicability::Applicable: return "applicable";
        case Applicability::TrivialNotThin: return "trivial-not-thin";
        case Applicability::LeafBase: return "leaf-base";
    }
    return "?";
}

std::vector<DistancePartition> neighbor_partitions(const Graph& g, Vertex x) {
    std::vector<DistancePartition> out;
    for (Vertex y : g.neighbors(x)) out.push_back(distance_partition(g, x, y));
    return out;
}

namespace {

FittedScalar scalar(const LinearSolution& sol, std::size_t var) {
    return {sol.values[var], !sol.determined[var]};
}

}  // namespace

Endpoint1Profile fit_endpoint1(const LocalOperators& ops, std::span<const DistancePartition> partitions,
                               const PdrProfile& pdr) {
    Endpoint1Profile prof;
    if (!pdr.ok) {
        prof.status = Applicability::TrivialNotThin;
        return prof;
    }
    const auto& nbrs = ops.metric.sphere(1);
    if (nbrs.size() < 2) {
        prof.status = Applicability::LeafBase;
        return prof;
    }
    if (partitions.size() != nbrs.size()) throw std::invalid_argument("fit_endpoint1: one partition per neighbor expected");

    const int d = ops.ecc();
    WalkCounter walks(ops);
    prof.ok = true;
    for (int i = 1; i <= d; ++i) {
        const IntMatrix& r_prev = walks.raise_power(i - 1);  // r^{i-1}(y,z)
        IntMatrix lr = walks.table(ShapeFamily::LowerThenRaise, i);      // l r^i(y,z)
        IntMatrix rl = walks.table(ShapeFamily::RaiseThenLower, i);      // r^i l(y,z)
        IntMatrix rf = walks.table(ShapeFamily::RaiseThenFlat, i - 1);   // r^{i-1} f(y,z)

        LevelFit fit;
        fit.level = i;
        IncrementalSystem km(2);
        IncrementalSystem tr(2);
        std::optional<Endpoint1Profile::Failure> fail;
        for (Vertex y : nbrs) {
            for (Vertex z : ops.metric.sphere(i)) {
                std::array<Rational, 2> row{Rational(r_prev(z, y)), Rational(lr(z, y))};
                if (!km.add(row, Rational(rl(z, y))) && !fail) fail = {{i, y, z, "kappa-mu"}};
                if (!tr.add(row, Rational(rf(z, y))) && !fail) fail = {{i, y, z, "theta-rho"}};
            }
        }

        fit.rho_forced_by_equations = tr.forces(1, 0);
        for (std::size_t k = 0; k < partitions.size(); ++k) {
            auto up = partitions[k].cell(i, i + 1);
            if (up.empty()) continue;
            fit.up_cell_nonempty = true;
            std::array<Rational, 2> rho_row{Rational(0), Rational(1)};
            if (!tr.add(rho_row, Rational(0)) && !fail) fail = {{i, partitions[k].y, up.front(), "rho-side"}};
            break;
        }
        fit.rho_constraint_binding = fit.up_cell_nonempty && !fit.rho_forced_by_equations;

        fit.consistent = !fail;
        auto s1 = km.solution();
        auto s2 = tr.solution();
        fit.kappa = scalar(s1, 0);
        fit.mu = scalar(s1, 1);
        fit.theta = scalar(s2, 0);
        fit.rho = scalar(s2, 1);
        if (fail && !prof.failure) prof.failure = fail;
        prof.ok = prof.ok && fit.consistent;
        prof.levels.push_back(std::move(fit));
    }
    return prof;
}

Endpoint1Profile fit_endpoint1(const LocalOperators& ops, std::span<const DistancePartition> partitions) {
    return fit_endpoint1(ops, partitions, fit_pdr(ops));
}

ScalarSequences canonical_witness(const Endpoint1Profile& profile) {
    ScalarSequences s;
    for (const auto& lv : profile.levels) {
        s.kappa.push_back(lv.kappa.value);
        s.mu.push_back(lv.mu.value);
        s.theta.push_back(lv.theta.value);
        s.rho.push_back(lv.rho.value);
    }
    return s;
}

bool satisfies_endpoint1(const LocalOperators& ops, std::span<const DistancePartition> partitions,
                         const ScalarSequences& s) {
    const int d = ops.ecc();
    if (static_cast<int>(s.kappa.size()) != d || static_cast<int>(s.mu.size()) != d ||
        static_cast<int>(s.theta.size()) != d || static_cast<int>(s.rho.size()) != d)
        return false;
    WalkCounter walks(ops);
    for (int i = 1; i <= d; ++i) {
        const IntMatrix& r_prev = walks.raise_power(i - 1);
        IntMatrix lr = walks.table(ShapeFamily::LowerThenRaise, i);
        IntMatrix rl = walks.table(ShapeFamily::RaiseThenLower, i);
        IntMatrix rf = walks.table(ShapeFamily::RaiseThenFlat, i - 1);
        const auto& k = s.kappa[i - 1];
        const auto& m = s.mu[i - 1];
        const auto& t = s.theta[i - 1];
        const auto& r = s.rho[i - 1];
        for (Vertex y : ops.metric.sphere(1))
            for (Vertex z : ops.metric.sphere(i)) {
                if (Rational(rl(z, y)) != k * r_prev(z, y) + m * lr(z, y)) return false;
                if (Rational(rf(z, y)) != t * r_prev(z, y) + r * lr(z, y)) return false;
            }
        for (const auto& p : partitions)
            if (p.nonempty(i, i + 1) && sgn(r) != 0) return false;
    }
    return true;
}

bool no_endpoint1_modules(const LocalOperators& ops, const Subspace& trivial_basis, double tol) {
    const auto& level1 = ops.metric.sphere(1);
    RealMatrix rows(static_cast<Eigen::Index>(level1.size()), trivial_basis.basis.cols());
    for (std::size_t r = 0; r < level1.size(); ++r)
        rows.row(static_cast<Eigen::Index>(r)) = trivial_basis.basis.row(level1[r]);
    return numerical_rank(rows, tol).rank == static_cast<int>(level1.size());
}

}  // namespace tk
