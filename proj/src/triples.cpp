#include "drg/triples.hpp"

#include <algorithm>

namespace drg {

std::string cell_name(std::array<int, 3> cell) {
    if (cell[0] <= 9 && cell[1] <= 9 && cell[2] <= 9)
        return "[" + std::to_string(cell[0]) + std::to_string(cell[1]) +
               std::to_string(cell[2]) + "]";
    return "[" + std::to_string(cell[0]) + "," + std::to_string(cell[1]) + "," +
           std::to_string(cell[2]) + "]";
}

TripleSystem assemble_system(const ParameterTable& pt, TripleConfig cfg,
                             const Eigenmatrices* em, const KreinTable* kt) {
    int d = pt.d;
    int W = cfg.W(), U = cfg.U(), V = cfg.V();
    auto in_range = [&](int x) { return 1 <= x && x <= d; };
    if (!in_range(W) || !in_range(U) || !in_range(V))
        throw ParseError("configuration distances must lie in 1.." + std::to_string(d));
    if (pt.pnum(W, V, U) == 0)
        throw UnrealizableConfig("no triple realizes configuration " + cfg.str() +
                                 ": p^" + std::to_string(W) + "_{" + std::to_string(V) +
                                 "," + std::to_string(U) + "} = 0");

    // Boundary values [0jh], [i0h], [ij0] are Kronecker deltas fixed by the
    // configuration: the only candidate for x is u, v, or w respectively.
    auto b0jh = [&](int j, int h) { return (j == W && h == V) ? 1 : 0; };
    auto bi0h = [&](int i, int h) { return (i == W && h == U) ? 1 : 0; };
    auto bij0 = [&](int i, int j) { return (i == V && j == U) ? 1 : 0; };

    TripleSystem sys;
    sys.cfg = cfg;
    sys.d = d;

    for (int j = 1; j <= d; ++j)
        for (int h = 1; h <= d; ++h) {
            LinearEquation eq;
            for (int l = 1; l <= d; ++l) eq.coef[cell_index(l, j, h, d)] = 1;
            eq.rhs = Rat(pt.pnum(U, j, h) - b0jh(j, h));
            eq.tag = "sum(j=" + std::to_string(j) + ",h=" + std::to_string(h) + ")";
            sys.eqs.push_back(std::move(eq));
        }
    for (int i = 1; i <= d; ++i)
        for (int h = 1; h <= d; ++h) {
            LinearEquation eq;
            for (int l = 1; l <= d; ++l) eq.coef[cell_index(i, l, h, d)] = 1;
            eq.rhs = Rat(pt.pnum(V, i, h) - bi0h(i, h));
            eq.tag = "sum(i=" + std::to_string(i) + ",h=" + std::to_string(h) + ")";
            sys.eqs.push_back(std::move(eq));
        }
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            LinearEquation eq;
            for (int l = 1; l <= d; ++l) eq.coef[cell_index(i, j, l, d)] = 1;
            eq.rhs = Rat(pt.pnum(W, i, j) - bij0(i, j));
            eq.tag = "sum(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")";
            sys.eqs.push_back(std::move(eq));
        }

    sys.cap.assign(static_cast<std::size_t>(d) * d * d, Int(0));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            for (int h = 1; h <= d; ++h) {
                Int cap = std::min({pt.pnum(W, i, j), pt.pnum(V, i, h), pt.pnum(U, j, h)});
                sys.cap[cell_index(i, j, h, d)] = cap;
                if (cap == 0) {
                    LinearEquation eq;
                    eq.coef[cell_index(i, j, h, d)] = 1;
                    eq.rhs = 0;
                    eq.tag = "zero" + cell_name({i, j, h});
                    sys.eqs.push_back(std::move(eq));
                }
            }

    if (em != nullptr && kt != nullptr) {
        // For each vanishing Krein parameter with positive indices, the
        // associated cubic form in the Q-entries vanishes on every triple:
        //   S_ijh = sum_{r,s,t} Q_ri Q_sj Q_th [rst] = 0,
        // where boundary cells (any index 0) are the known deltas above and
        // [000] = 0 because u, v, w are pairwise distinct.
        for (const auto& z : kt->vanishing) {
            int h = z[0], i = z[1], j = z[2];
            if (h < 1 || i < 1 || j < 1) continue;
            LinearEquation eq;
            Rat constant = 0;
            for (int r = 0; r <= d; ++r)
                for (int s = 0; s <= d; ++s)
                    for (int t = 0; t <= d; ++t) {
                        Rat w = em->Q.at(r, i) * em->Q.at(s, j) * em->Q.at(t, h);
                        if (w == 0) continue;
                        if (r >= 1 && s >= 1 && t >= 1) {
                            eq.coef[cell_index(r, s, t, d)] += w;
                        } else {
                            int boundary = 0;
                            if (r == 0)
                                boundary = b0jh(s, t);
                            else if (s == 0)
                                boundary = bi0h(r, t);
                            else
                                boundary = bij0(r, s);
                            constant += w * boundary;
                        }
                    }
            eq.rhs = -constant;
            eq.tag = "krein-vanishing(q^" + std::to_string(h) + "_{" + std::to_string(i) +
                     "," + std::to_string(j) + "})";
            sys.eqs.push_back(std::move(eq));
        }
    }
    return sys;
}

TripleFamily solve_family(const TripleSystem& sys) {
    int n = sys.d * sys.d * sys.d;
    RatMatrix A(sys.eqs.size(), n);
    std::vector<Rat> b(sys.eqs.size());
    for (std::size_t r = 0; r < sys.eqs.size(); ++r) {
        for (const auto& [c, x] : sys.eqs[r].coef) A.at(r, c) = x;
        b[r] = sys.eqs[r].rhs;
    }
    SolveResult res = rref_parametric(A, b);
    if (auto* cert = std::get_if<InfeasibleCombination>(&res)) {
        std::vector<std::string> tags;
        for (auto r : cert->rows) tags.push_back(sys.eqs[r].tag);
        throw Infeasible("triple system for configuration " + sys.cfg.str() +
                             " is inconsistent (" + std::to_string(tags.size()) +
                             " equations combine to 0 = 1)",
                         std::move(tags));
    }
    TripleFamily fam;
    fam.cfg = sys.cfg;
    fam.d = sys.d;
    fam.sys = sys;
    fam.sol = std::get<AffineSolution>(std::move(res));
    for (auto f : fam.sol.free_cols)
        fam.param_names.push_back(cell_name(cell_of_index(static_cast<int>(f), sys.d)));
    return fam;
}

PointSet enumerate_points(const TripleFamily& fam, const Int& candidate_cap) {
    int n = fam.d * fam.d * fam.d;
    std::size_t nf = fam.sol.free_cols.size();
    const auto& cap = fam.sys.cap;

    // Interval propagation: free parameters are cells, so they start in
    // [0, cap]; each affine cell expression 0 <= f(x) <= cap then tightens
    // them until a fixpoint (bounds are integers, so this terminates).
    std::vector<Rat> lo(nf), hi(nf);
    for (std::size_t t = 0; t < nf; ++t) {
        lo[t] = 0;
        hi[t] = Rat(cap[fam.sol.free_cols[t]]);
    }
    bool changed = true;
    int rounds = 0;
    while (changed && rounds < 200) {
        changed = false;
        ++rounds;
        for (int c = 0; c < n; ++c) {
            for (std::size_t t = 0; t < nf; ++t) {
                Rat a = fam.sol.form_coef(c, t);
                if (a == 0) continue;
                Rat rest_min = fam.sol.form_constant(c), rest_max = rest_min;
                for (std::size_t g = 0; g < nf; ++g) {
                    if (g == t) continue;
                    Rat cg = fam.sol.form_coef(c, g);
                    if (cg == 0) continue;
                    if (cg > 0) {
                        rest_min += cg * lo[g];
                        rest_max += cg * hi[g];
                    } else {
                        rest_min += cg * hi[g];
                        rest_max += cg * lo[g];
                    }
                }
                Rat cc = Rat(cap[c]);
                Rat nlo, nhi;
                if (a > 0) {
                    nlo = -rest_max / a;
                    nhi = (cc - rest_min) / a;
                } else {
                    nlo = (cc - rest_min) / a;
                    nhi = -rest_max / a;
                }
                Rat nlo_i = Rat(ceil_rat(nlo)), nhi_i = Rat(floor_rat(nhi));
                if (nlo_i > lo[t]) {
                    lo[t] = nlo_i;
                    changed = true;
                }
                if (nhi_i < hi[t]) {
                    hi[t] = nhi_i;
                    changed = true;
                }
            }
        }
        for (std::size_t t = 0; t < nf; ++t)
            if (lo[t] > hi[t]) {
                PointSet empty;
                empty.enumerated = true;
                empty.candidates = 0;
                return empty;
            }
    }

    Int combos = 1;
    for (std::size_t t = 0; t < nf; ++t) combos *= numerator(hi[t] - lo[t]) + 1;
    PointSet out;
    out.candidates = combos;
    if (combos > candidate_cap) return out;  // enumerated stays false
    out.enumerated = true;

    std::vector<Rat> params(nf);
    for (std::size_t t = 0; t < nf; ++t) params[t] = lo[t];
    std::vector<Int> point(n);
    bool more = nf > 0 || combos == 1;
    while (more) {
        bool ok = true;
        for (int c = 0; c < n && ok; ++c) {
            Rat val = fam.sol.value(c, params);
            if (!is_integer(val) || val < 0 || val > Rat(cap[c])) ok = false;
            else point[c] = numerator(val);
        }
        if (ok)
            for (const auto& ineq : fam.sys.ineqs) {
                Rat s = 0;
                for (const auto& [c, x] : ineq.coef) s += x * Rat(point[c]);
                if (s > ineq.rhs) {
                    ok = false;
                    break;
                }
            }
        if (ok) out.points.push_back(point);
        // advance odometer
        std::size_t t = 0;
        for (; t < nf; ++t) {
            params[t] += 1;
            if (params[t] <= hi[t]) break;
            params[t] = lo[t];
        }
        if (t == nf) more = false;
        if (nf == 0) more = false;
    }
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

}  // namespace drg
