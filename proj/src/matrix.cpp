#include "drg/matrix.hpp"

#include "drg/errors.hpp"

#include <algorithm>
#include <numeric>

namespace drg {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw Error("DimensionMismatch", "matrix product shape");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw Error("DimensionMismatch", "inverse of non-square matrix");
    std::size_t n = rows_;
    RatMatrix work = *this;
    RatMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && work.at(sel, col) == 0) ++sel;
        if (sel == n) throw Error("SingularMatrix", "matrix is singular");
        if (sel != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(sel, j), work.at(col, j));
                std::swap(inv.at(sel, j), inv.at(col, j));
            }
        Rat d = work.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            Rat f = work.at(r, col);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                work.at(r, j) -= f * work.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Rat AffineSolution::value(std::size_t var, const std::vector<Rat>& params) const {
    Rat v = particular[var];
    for (std::size_t t = 0; t < free_cols.size(); ++t)
        if (basis[t][var] != 0) v += basis[t][var] * params[t];
    return v;
}

SolveResult rref_parametric(const RatMatrix& A, const std::vector<Rat>& b) {
    std::size_t m = A.rows(), n = A.cols();
    if (b.size() != m) throw Error("DimensionMismatch", "rhs length");

    // Augmented rows plus a provenance combination over the original rows,
    // so an inconsistent row can name the equations that produced it.
    struct Row {
        std::vector<Rat> a;
        Rat rhs;
        std::vector<Rat> combo;
    };
    std::vector<Row> rows(m);
    for (std::size_t i = 0; i < m; ++i) {
        rows[i].a.resize(n);
        for (std::size_t j = 0; j < n; ++j) rows[i].a[j] = A.at(i, j);
        rows[i].rhs = b[i];
        rows[i].combo.assign(m, Rat(0));
        rows[i].combo[i] = 1;
    }

    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t sel = rank;
        while (sel < m && rows[sel].a[col] == 0) ++sel;
        if (sel == m) continue;
        std::swap(rows[rank], rows[sel]);
        Rat d = rows[rank].a[col];
        for (auto& x : rows[rank].a) x /= d;
        rows[rank].rhs /= d;
        for (auto& x : rows[rank].combo) x /= d;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == rank) continue;
            Rat f = rows[r].a[col];
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) rows[r].a[j] -= f * rows[rank].a[j];
            rows[r].rhs -= f * rows[rank].rhs;
            for (std::size_t j = 0; j < m; ++j) rows[r].combo[j] -= f * rows[rank].combo[j];
        }
        pivots.push_back(col);
        ++rank;
    }

    for (std::size_t r = rank; r < m; ++r) {
        if (rows[r].rhs == 0) continue;
        // 0 = nonzero: emit the combination certificate.
        InfeasibleCombination cert;
        Rat scale = 1 / rows[r].rhs;  // normalize the contradiction to 0 = 1
        for (std::size_t j = 0; j < m; ++j)
            if (rows[r].combo[j] != 0) {
                cert.rows.push_back(j);
                cert.coefficients.push_back(rows[r].combo[j] * scale);
            }
        return cert;
    }

    AffineSolution sol;
    sol.num_vars = n;
    sol.pivot_cols = pivots;
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) sol.free_cols.push_back(c);

    sol.particular.assign(n, Rat(0));
    for (std::size_t r = 0; r < rank; ++r) sol.particular[pivots[r]] = rows[r].rhs;

    sol.basis.resize(sol.free_cols.size());
    for (std::size_t t = 0; t < sol.free_cols.size(); ++t) {
        std::size_t f = sol.free_cols[t];
        auto& dir = sol.basis[t];
        dir.assign(n, Rat(0));
        dir[f] = 1;
        for (std::size_t r = 0; r < rank; ++r) dir[pivots[r]] = -rows[r].a[f];
    }
    return sol;
}

std::vector<Rat> char_poly(const RatMatrix& M) {
    if (M.rows() != M.cols()) throw Error("DimensionMismatch", "char_poly of non-square matrix");
    std::size_t n = M.rows();
    // Faddeev-LeVerrier: exact, O(n^4), fine for n <= 32.
    std::vector<Rat> coeff(n + 1);
    coeff[n] = 1;
    RatMatrix Mk(n, n);  // starts at zero; loop adds c*I then multiplies by M
    RatMatrix acc = RatMatrix::identity(n);
    Rat c = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Mk = M * acc;
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += Mk.at(i, i);
        c = -tr / Rat(static_cast<long>(k));
        coeff[n - k] = c;
        acc = Mk;
        for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += c;
    }
    return coeff;
}

namespace {

// Evaluate polynomial (coeff of x^i at index i) at integer t.
Rat poly_eval(const std::vector<Rat>& p, const Int& t) {
    Rat v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i];
    return v;
}

// Divide p by (x - t), assuming t is a root; returns the quotient.
std::vector<Rat> deflate(const std::vector<Rat>& p, const Int& t) {
    std::size_t n = p.size() - 1;
    std::vector<Rat> q(n);
    Rat carry = p[n];
    for (std::size_t i = n; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + carry * t;
    }
    return q;
}

}  // namespace

std::vector<std::pair<Rat, int>> char_poly_roots(const RatMatrix& M) {
    if (M.rows() > 32)
        throw Error("DimensionLimit", "char_poly_roots supports dimension <= 32");
    std::size_t n = M.rows();

    // Scale to an integer matrix: eigenvalues scale by the same factor, and a
    // monic integer characteristic polynomial has only integer rational
    // roots, so an integer search is complete.
    Int scale = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            scale = lcm(scale, denominator(M.at(i, j)));
    RatMatrix S(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) S.at(i, j) = M.at(i, j) * scale;

    std::vector<Rat> poly = char_poly(S);

    // Gershgorin: every eigenvalue satisfies |t| <= max_i sum_j |S_ij|.
    Int bound = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < n; ++j) s += abs(S.at(i, j));
        Int si = ceil_rat(s);
        if (si > bound) bound = si;
    }
    if (bound > 5'000'000)
        throw Error("SearchBoundTooLarge",
                    "eigenvalue search bound " + bound.str() + " exceeds 5e6");

    std::vector<std::pair<Int, int>> found;
    auto take_root = [&](const Int& t) {
        int mult = 0;
        while (poly.size() > 1 && poly_eval(poly, t) == 0) {
            poly = deflate(poly, t);
            ++mult;
        }
        if (mult > 0) found.emplace_back(t, mult);
    };
    take_root(0);
    for (Int t = 1; t <= bound && poly.size() > 1; ++t) {
        // A rational root of a monic integer polynomial is an integer
        // dividing the constant term, so non-divisors can be skipped.
        if (poly[0] != 0 && numerator(poly[0]) % t != 0) continue;
        take_root(t);
        if (poly.size() > 1) take_root(-t);
    }

    if (poly.size() > 1) {
        std::string cs;
        for (const auto& c : poly) cs += (cs.empty() ? "" : ",") + to_string(c);
        throw IrrationalSpectrum(
            "characteristic polynomial does not split over Q; residual coefficients [" + cs + "]");
    }

    std::vector<std::pair<Rat, int>> roots;
    for (auto& [t, m] : found) roots.emplace_back(Rat(t) / scale, m);
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return roots;
}

}  // namespace drg
