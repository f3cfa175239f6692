#include "tk/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace tk {

namespace {

// Products below this many multiply-adds run serially.
constexpr std::size_t kParallelWork = 1u << 15;

void multiply_row(const IntMatrix& a, const IntMatrix& b, IntMatrix& out, std::size_t r) {
    auto dst = out.row(r);
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const Integer& s = a(r, k);
        if (sgn(s) == 0) continue;
        auto src = b.row(k);
        for (std::size_t c = 0; c < b.cols(); ++c) {
            if (sgn(src[c]) == 0) continue;
            mpz_addmul(dst[c].get_mpz_t(), s.get_mpz_t(), src[c].get_mpz_t());
        }
    }
}

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    const auto rows = static_cast<long long>(a.rows());
    const bool parallel = a.rows() * a.cols() * b.cols() >= kParallelWork;
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (long long r = 0; r < rows; ++r) multiply_row(a, b, out, static_cast<std::size_t>(r));
    return out;
}

IntMatrix multiply_reference(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Integer acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(r, k) * b(k, c);
            out(r, c) = acc;
        }
    return out;
}

IntMatrix submatrix(const IntMatrix& m, std::span<const int> rows, std::span<const int> cols) {
    IntMatrix out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
    return out;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
    return out;
}

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t p = lead;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != lead)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead, k));
        Rational inv = 1 / m(lead, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(lead, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || sgn(m(r, c)) == 0) continue;
            Rational f = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(lead, k);
        }
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

std::size_t rank(const IntMatrix& m) {
    auto q = to_rational(m);
    return rref(q).size();
}

LinearSolution solve(const RatMatrix& a, std::span<const Rational> b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    const std::size_t n = a.cols();
    RatMatrix aug(a.rows(), n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n) = b[r];
    }
    auto pivots = rref(aug);

    LinearSolution sol;
    sol.values.assign(n, 0);
    sol.determined.assign(n, false);
    sol.consistent = pivots.empty() || pivots.back() != n;
    if (!sol.consistent) return sol;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        std::size_t p = pivots[r];
        sol.values[p] = aug(r, n);
        bool fixed = true;
        for (std::size_t c = p + 1; c < n; ++c)
            if (sgn(aug(r, c)) != 0) fixed = false;
        sol.determined[p] = fixed;
    }
    return sol;
}

bool IncrementalSystem::add(std::span<const Rational> coeffs, const Rational& rhs) {
    if (coeffs.size() != n_) throw std::invalid_argument("IncrementalSystem: wrong row length");
    std::vector<Rational> row(coeffs.begin(), coeffs.end());
    Rational b = rhs;
    for (const auto& existing : rows_) {
        if (sgn(row[existing.pivot]) == 0) continue;
        Rational f = row[existing.pivot];
        for (std::size_t c = 0; c < n_; ++c) row[c] -= f * existing.coeffs[c];
        b -= f * existing.rhs;
    }
    auto lead = std::find_if(row.begin(), row.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (lead == row.end()) return sgn(b) == 0;

    const auto p = static_cast<std::size_t>(lead - row.begin());
    Rational inv = 1 / row[p];
    for (auto& q : row) q *= inv;
    b *= inv;
    for (auto& existing : rows_) {
        if (sgn(existing.coeffs[p]) == 0) continue;
        Rational f = existing.coeffs[p];
        for (std::size_t c = 0; c < n_; ++c) existing.coeffs[c] -= f * row[c];
        existing.rhs -= f * b;
    }
    rows_.push_back({p, std::move(row), std::move(b)});
    std::sort(rows_.begin(), rows_.end(), [](const Row& l, const Row& r) { return l.pivot < r.pivot; });
    return true;
}

LinearSolution IncrementalSystem::solution() const {
    LinearSolution sol;
    sol.consistent = true;
    sol.values.assign(n_, 0);
    sol.determined.assign(n_, false);
    for (const auto& r : rows_) {
        sol.values[r.pivot] = r.rhs;
        bool fixed = true;
        for (std::size_t c = 0; c < n_; ++c)
            if (c != r.pivot && sgn(r.coeffs[c]) != 0) fixed = false;
        sol.determined[r.pivot] = fixed;
    }
    return sol;
}

bool IncrementalSystem::forces(std::size_t var, const Rational& value) const {
    auto sol = solution();
    return sol.determined[var] && sol.values[var] == value;
}

std::string to_string(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace tk
