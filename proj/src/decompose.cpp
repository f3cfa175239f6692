#include "tk/decompose.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>

namespace tk {

namespace {

RealMatrix to_real(const IntMatrix& m) {
    RealMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_d();
    return out;
}

struct NullSpace {
    RealMatrix basis;  ///< columns span the numerical null space
    bool ambiguous = false;
};

NullSpace null_space(const RealMatrix& m, double tol) {
    NullSpace ns;
    if (m.cols() == 0) {
        ns.basis.resize(0, 0);
        return ns;
    }
    if (m.rows() == 0) {
        ns.basis = RealMatrix::Identity(m.cols(), m.cols());
        return ns;
    }
    // QR first: sing(R) = sing(m), and Jacobi on the square factor stays cheap.
    RealMatrix square = m;
    if (m.rows() > m.cols()) {
        Eigen::HouseholderQR<RealMatrix> qr(m);
        square = qr.matrixQR().topRows(m.cols()).triangularView<Eigen::Upper>();
    }
    Eigen::JacobiSVD<RealMatrix> svd(square, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double cutoff = tol * std::max(1.0, s.size() ? s(0) : 0.0);
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
        if (s(k) > cutoff) ++rank;
        if (s(k) > cutoff / 10 && s(k) < cutoff * 10) ns.ambiguous = true;
    }
    ns.basis = svd.matrixV().rightCols(m.cols() - rank);
    return ns;
}

/// Stacked commutator system for intertwiners W -> W': sigma * g1 - g2 * sigma = 0,
/// sigma is k2 x k1, unknowns in column-major order.
RealMatrix intertwiner_system(std::span<const RealMatrix> g1, std::span<const RealMatrix> g2) {
    const Eigen::Index k1 = g1.empty() ? 0 : g1.front().rows();
    const Eigen::Index k2 = g2.empty() ? 0 : g2.front().rows();
    const Eigen::Index unknowns = k1 * k2;
    RealMatrix sys = RealMatrix::Zero(static_cast<Eigen::Index>(g1.size()) * unknowns, unknowns);
    for (std::size_t gi = 0; gi < g1.size(); ++gi) {
        const auto base = static_cast<Eigen::Index>(gi) * unknowns;
        const RealMatrix& a = g1[gi];
        const RealMatrix& b = g2[gi];
        // (sigma a)_{pq} = sum_s sigma_{ps} a_{sq};  (b sigma)_{pq} = sum_s b_{ps} sigma_{sq}
        for (Eigen::Index q = 0; q < k1; ++q)
            for (Eigen::Index p = 0; p < k2; ++p) {
                const Eigen::Index row = base + q * k2 + p;
                for (Eigen::Index s = 0; s < k1; ++s)
                    if (a(s, q) != 0.0) sys(row, s * k2 + p) += a(s, q);
                for (Eigen::Index s = 0; s < k2; ++s)
                    if (b(p, s) != 0.0) sys(row, q * k2 + s) -= b(p, s);
            }
    }
    return sys;
}

RealMatrix unvec(const Eigen::Ref<const Eigen::VectorXd>& v, Eigen::Index rows, Eigen::Index cols) {
    return Eigen::Map<const RealMatrix>(v.data(), rows, cols);
}

std::vector<RealMatrix> restrict_generators(std::span<const RealMatrix> gens, const RealMatrix& q) {
    std::vector<RealMatrix> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(q.transpose() * g * q);
    return out;
}

/// Dimension of the symmetric part of a matrix space.
RankDecision symmetric_dim(const std::vector<RealMatrix>& basis, double tol) {
    if (basis.empty()) return {};
    const Eigen::Index k = basis.front().rows();
    RealMatrix stacked(k * k, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        RealMatrix s = 0.5 * (basis[j] + basis[j].transpose());
        stacked.col(static_cast<Eigen::Index>(j)) = Eigen::Map<const Eigen::VectorXd>(s.data(), k * k);
    }
    return numerical_rank(stacked, tol);
}

struct Piece {
    RealMatrix q;
    int endomorphism_dim = 1;
};

class Splitter {
public:
    Splitter(std::span<const RealMatrix> gens, const DecomposeOptions& opts, std::uint64_t seed)
        : gens_(gens), opts_(opts), rng_(seed) {}

    int commutant_dim = 0;
    bool flagged = false;

    void split(const RealMatrix& q, std::vector<Piece>& out, bool top = false) {
        auto local = restrict_generators(gens_, q);
        auto comm = commutant_basis(local, opts_.tol);
        flagged = flagged || comm.ambiguous;
        if (top) commutant_dim = static_cast<int>(comm.basis.size());
        auto sym = symmetric_dim(comm.basis, opts_.tol);
        flagged = flagged || sym.ambiguous;
        if (sym.rank <= 1) {
            out.push_back({q, static_cast<int>(comm.basis.size())});
            return;
        }

        std::normal_distribution<double> normal(0.0, 1.0);
        for (int attempt = 0; attempt < opts_.max_retries; ++attempt) {
            const Eigen::Index k = q.cols();
            RealMatrix s = RealMatrix::Zero(k, k);
            for (const auto& c : comm.basis) s += normal(rng_) * 0.5 * (c + c.transpose());
            Eigen::SelfAdjointEigenSolver<RealMatrix> eig(s);
            const auto& vals = eig.eigenvalues();
            const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
            const double gap = 1e3 * opts_.tol * scale;

            std::vector<std::pair<Eigen::Index, Eigen::Index>> groups;  // [begin, end)
            Eigen::Index begin = 0;
            for (Eigen::Index j = 1; j <= k; ++j) {
                if (j == k || vals(j) - vals(j - 1) > gap) {
                    groups.emplace_back(begin, j);
                    begin = j;
                }
            }
            if (groups.size() < 2) continue;
            for (auto [b, e] : groups) {
                RealMatrix sub = q * eig.eigenvectors().middleCols(b, e - b);
                split(sub, out);
            }
            return;
        }
        throw DecompositionError("random commutant element failed to split a reducible module", {});
    }

private:
    std::span<const RealMatrix> gens_;
    const DecomposeOptions& opts_;
    std::mt19937_64 rng_;
};

std::vector<int> level_dims(const RealMatrix& q, const LocalMetric& metric, double tol, bool& flagged) {
    std::vector<int> dims(metric.ecc + 1, 0);
    for (int i = 0; i <= metric.ecc; ++i) {
        const auto& sphere = metric.spheres[i];
        RealMatrix rows(static_cast<Eigen::Index>(sphere.size()), q.cols());
        for (std::size_t r = 0; r < sphere.size(); ++r) rows.row(static_cast<Eigen::Index>(r)) = q.row(sphere[r]);
        auto rd = numerical_rank(rows, tol);
        flagged = flagged || rd.ambiguous;
        dims[i] = rd.rank;
    }
    return dims;
}

double invariance_residual(const RealMatrix& q, std::span<const RealMatrix> gens) {
    double worst = 0.0;
    for (const auto& g : gens) {
        RealMatrix gq = g * q;
        RealMatrix defect = gq - q * (q.transpose() * gq);
        worst = std::max(worst, defect.norm() / std::max(1.0, g.norm()));
    }
    return worst;
}

}  // namespace

RankDecision numerical_rank(const RealMatrix& m, double tol) {
    RankDecision rd;
    if (m.rows() == 0 || m.cols() == 0) return rd;
    Eigen::JacobiSVD<RealMatrix> svd(m);
    const auto& s = svd.singularValues();
    const double cutoff = tol * std::max(1.0, s(0));
    for (Eigen::Index k = 0; k < s.size(); ++k) {
        if (s(k) > cutoff) ++rd.rank;
        if (s(k) > cutoff / 10 && s(k) < cutoff * 10) rd.ambiguous = true;
    }
    return rd;
}

std::vector<RealMatrix> algebra_generators(const LocalOperators& ops) {
    std::vector<RealMatrix> gens;
    gens.push_back(to_real(ops.adjacency));
    for (const auto& e : ops.dual_idempotents) gens.push_back(to_real(e));
    return gens;
}

namespace {

/// Appends v to the orthonormal set if it has a component outside it. Two MGS passes.
/// Inputs are images of unit vectors, so norms below 1 are measured against 1.
bool extend_orthonormal(std::vector<Eigen::VectorXd>& basis, Eigen::VectorXd v, double cut) {
    const double norm0 = v.norm();
    if (norm0 == 0.0) return false;
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) v -= b.dot(v) * b;
    const double norm1 = v.norm();
    if (norm1 <= cut * std::max(norm0, 1.0)) return false;
    basis.push_back(v / norm1);
    return true;
}

}  // namespace

Subspace trivial_module_basis(const LocalOperators& ops, double tol) {
    const auto n = static_cast<Eigen::Index>(ops.order());
    auto gens = algebra_generators(ops);
    std::vector<Eigen::VectorXd> basis;
    Eigen::VectorXd xhat = Eigen::VectorXd::Zero(n);
    xhat(ops.metric.base) = 1.0;
    basis.push_back(xhat);
    const double cut = 1e3 * tol;

    std::size_t processed = 0;
    while (processed < basis.size()) {
        Eigen::VectorXd v = basis[processed++];
        for (const auto& g : gens) extend_orthonormal(basis, g * v, cut);
    }
    Subspace w;
    w.basis.resize(n, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) w.basis.col(static_cast<Eigen::Index>(j)) = basis[j];
    return w;
}

CommutantResult commutant_basis(std::span<const RealMatrix> gens, double tol) {
    CommutantResult out;
    if (gens.empty()) return out;
    const Eigen::Index k = gens.front().rows();
    auto ns = null_space(intertwiner_system(gens, gens), tol);
    out.ambiguous = ns.ambiguous;
    for (Eigen::Index j = 0; j < ns.basis.cols(); ++j) out.basis.push_back(unvec(ns.basis.col(j), k, k));
    return out;
}

HomResult hom_dimension(const Subspace& w, const Subspace& w2, std::span<const RealMatrix> gens, double tol) {
    auto g1 = restrict_generators(gens, w.basis);
    auto g2 = restrict_generators(gens, w2.basis);
    auto ns = null_space(intertwiner_system(g1, g2), tol);
    return {static_cast<int>(ns.basis.cols()), ns.ambiguous};
}

double subspace_distance(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim() || a.basis.rows() != b.basis.rows()) return 1.0;
    RealMatrix diff = a.basis * a.basis.transpose() - b.basis * b.basis.transpose();
    if (diff.size() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<RealMatrix> eig(diff, Eigen::EigenvaluesOnly);
    return eig.eigenvalues().cwiseAbs().maxCoeff();
}

DecompositionReport decompose(const LocalOperators& ops, const DecomposeOptions& opts) {
    const auto n = static_cast<Eigen::Index>(ops.order());
    auto gens = algebra_generators(ops);
    const double bound = 1e3 * opts.tol;
    std::vector<double> last_residuals;

    for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
        Splitter splitter(gens, opts, opts.seed + static_cast<std::uint64_t>(attempt));
        std::vector<Piece> pieces;
        try {
            splitter.split(RealMatrix::Identity(n, n), pieces, true);
        } catch (const DecompositionError&) {
            continue;
        }

        DecompositionReport rep;
        rep.seed = opts.seed;
        rep.tol = opts.tol;
        rep.attempts = attempt + 1;
        rep.commutant_dim = splitter.commutant_dim;
        rep.flagged = splitter.flagged;

        last_residuals.clear();
        int total = 0;
        for (auto& piece : pieces) {
            ModuleSummary m;
            m.basis.basis = std::move(piece.q);
            m.endomorphism_dim = piece.endomorphism_dim;
            m.level_dims = level_dims(m.basis.basis, ops.metric, opts.tol, rep.flagged);
            auto first = std::find_if(m.level_dims.begin(), m.level_dims.end(), [](int d) { return d > 0; });
            m.endpoint = static_cast<int>(first - m.level_dims.begin());
            m.diameter = static_cast<int>(std::count_if(m.level_dims.begin(), m.level_dims.end(),
                                                        [](int d) { return d > 0; })) - 1;
            m.thin = std::all_of(m.level_dims.begin(), m.level_dims.end(), [](int d) { return d <= 1; });
            m.residual = invariance_residual(m.basis.basis, gens);
            last_residuals.push_back(m.residual);
            rep.max_residual = std::max(rep.max_residual, m.residual);
            total += m.dim();
            rep.modules.push_back(std::move(m));
        }
        rep.dim_check = total == n;
        if (rep.max_residual > bound || !rep.dim_check) continue;

        std::stable_sort(rep.modules.begin(), rep.modules.end(),
                         [](const ModuleSummary& a, const ModuleSummary& b) { return a.endpoint < b.endpoint; });

        // Isomorphism classes: compare against one representative per class with matching level profile.
        std::vector<int> reps;
        for (std::size_t j = 0; j < rep.modules.size(); ++j) {
            auto& m = rep.modules[j];
            m.iso_class = -1;
            for (std::size_t c = 0; c < reps.size(); ++c) {
                const auto& r = rep.modules[reps[c]];
                if (r.level_dims != m.level_dims) continue;
                auto h = hom_dimension(r.basis, m.basis, gens, opts.tol);
                rep.flagged = rep.flagged || h.ambiguous;
                if (h.dim > 0) {
                    m.iso_class = static_cast<int>(c);
                    break;
                }
            }
            if (m.iso_class < 0) {
                m.iso_class = static_cast<int>(reps.size());
                reps.push_back(static_cast<int>(j));
            }
        }
        rep.iso_class_count = static_cast<int>(reps.size());

        int endpoint0 = 0;
        std::vector<int> e1_classes;
        for (std::size_t j = 0; j < rep.modules.size(); ++j) {
            const auto& m = rep.modules[j];
            if (m.endpoint == 0) {
                ++endpoint0;
                rep.trivial_index = static_cast<int>(j);
            } else if (m.endpoint == 1) {
                ++rep.endpoint1_count;
                rep.endpoint1_all_thin = rep.endpoint1_all_thin && m.thin;
                if (std::find(e1_classes.begin(), e1_classes.end(), m.iso_class) == e1_classes.end())
                    e1_classes.push_back(m.iso_class);
            }
        }
        rep.endpoint1_iso_classes = static_cast<int>(e1_classes.size());
        if (endpoint0 != 1) continue;

        for (std::size_t a = 0; a < rep.modules.size(); ++a)
            for (std::size_t b = a + 1; b < rep.modules.size(); ++b) {
                RealMatrix g = rep.modules[a].basis.basis.transpose() * rep.modules[b].basis.basis;
                if (g.size()) rep.max_overlap = std::max(rep.max_overlap, g.cwiseAbs().maxCoeff());
            }
        rep.trivial_distance = subspace_distance(rep.modules[rep.trivial_index].basis, trivial_module_basis(ops, opts.tol));
        return rep;
    }
    throw DecompositionError("decomposition failed verification after " + std::to_string(opts.max_retries) +
                                 " attempts",
                             last_residuals);
}

AlgebraicVerdict algebraic_verdict(const DecompositionReport& report) {
    if (report.trivial_index < 0 || !report.modules[report.trivial_index].thin)
        return {Verdict::NotApplicable, "trivial module not thin"};
    if (report.endpoint1_count == 0) return {Verdict::Vacuous, "no endpoint-1 modules"};
    if (report.endpoint1_iso_classes > 1) return {Verdict::Fail, "multiple iso classes"};
    if (!report.endpoint1_all_thin) return {Verdict::Fail, "non-thin"};
    return {Verdict::Pass, ""};
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Vacuous: return "VACUOUS";
        case Verdict::NotApplicable: return "NOT-APPLICABLE";
    }
    return "?";
}

DualBlockDims dual_block_dims(const LocalOperators& ops, int algebra_basis_cap, double tol) {
    const auto n = static_cast<Eigen::Index>(ops.order());
    auto gens = algebra_generators(ops);
    std::vector<Eigen::VectorXd> basis;
    const double cut = 1e3 * tol;

    DualBlockDims out;
    RealMatrix id = RealMatrix::Identity(n, n);
    extend_orthonormal(basis, Eigen::Map<const Eigen::VectorXd>(id.data(), n * n), cut);
    std::size_t processed = 0;
    while (processed < basis.size()) {
        if (static_cast<int>(basis.size()) >= algebra_basis_cap) {
            out.capped = true;
            break;
        }
        RealMatrix m = unvec(basis[processed++], n, n);
        for (const auto& g : gens) {
            RealMatrix gm = g * m;
            extend_orthonormal(basis, Eigen::Map<const Eigen::VectorXd>(gm.data(), n * n), cut);
        }
    }
    out.algebra_dim = static_cast<int>(basis.size());

    const auto& spheres = ops.metric.spheres;
    const int d = ops.metric.ecc;
    out.dims.assign(d + 1, 0);
    if (d < 1) return out;
    const auto& level1 = spheres[1];
    for (int i = 0; i <= d; ++i) {
        const auto& level = spheres[i];
        const auto block = static_cast<Eigen::Index>(level.size() * level1.size());
        RealMatrix stacked(static_cast<Eigen::Index>(basis.size()), block);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            RealMatrix m = unvec(basis[b], n, n);
            Eigen::Index k = 0;
            for (Vertex c : level1)
                for (Vertex r : level) stacked(static_cast<Eigen::Index>(b), k++) = m(r, c);
        }
        out.dims[i] = numerical_rank(stacked, tol).rank;
    }
    return out;
}

}  // namespace tk
