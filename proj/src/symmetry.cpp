#include "drg/symmetry.hpp"

#include <algorithm>

namespace drg {

std::array<int, 3> TriplePermutation::map_cell(std::array<int, 3> c) const {
    // New slot t reads old role from[t], so the base cell index at position
    // from[t] must equal c[t].
    std::array<int, 3> y{};
    for (int t = 0; t < 3; ++t) y[from[t]] = c[t];
    return y;
}

TripleConfig TriplePermutation::map_config(TripleConfig cfg) const {
    // Symmetric distance lookup between old roles.
    int D[3][3] = {{0, cfg.duv, cfg.duw}, {cfg.duv, 0, cfg.dvw}, {cfg.duw, cfg.dvw, 0}};
    return TripleConfig{D[from[0]][from[1]], D[from[0]][from[2]], D[from[1]][from[2]]};
}

TriplePermutation TriplePermutation::inverse() const {
    TriplePermutation inv;
    for (int t = 0; t < 3; ++t) inv.from[from[t]] = t;
    return inv;
}

TriplePermutation TriplePermutation::compose(const TriplePermutation& inner) const {
    // (*this after inner): first re-base by inner, then by *this.
    TriplePermutation out;
    for (int t = 0; t < 3; ++t) out.from[t] = inner.from[from[t]];
    return out;
}

std::string TriplePermutation::suffix() const {
    if (is_identity()) return "";
    if (from == std::array<int, 3>{0, 2, 1}) return "'";
    if (from == std::array<int, 3>{1, 0, 2}) return "*";
    if (from == std::array<int, 3>{2, 1, 0}) return "~";
    if (from == std::array<int, 3>{1, 2, 0}) return "^1";
    return "^2";  // {2,0,1}
}

std::vector<TriplePermutation> stabilizer(TripleConfig cfg) {
    const std::vector<TriplePermutation> all = {
        TriplePermutation::identity(), TriplePermutation::swap_vw(),
        TriplePermutation::swap_uv(),  TriplePermutation::swap_uw(),
        TriplePermutation{{1, 2, 0}},  TriplePermutation{{2, 0, 1}},
    };
    std::vector<TriplePermutation> out;
    for (const auto& s : all)
        if (s.map_config(cfg) == cfg) out.push_back(s);
    return out;
}

TripleFamily permute_family(const TripleFamily& fam, const TriplePermutation& sigma) {
    int d = fam.d;
    int n = d * d * d;
    auto mapped_index = [&](int idx) {
        auto c = sigma.map_cell(cell_of_index(idx, d));
        return cell_index(c[0], c[1], c[2], d);
    };

    TripleFamily out;
    out.cfg = sigma.map_config(fam.cfg);
    out.d = d;
    out.param_names = fam.param_names;  // parameters carried through

    // System rows: T_sigma satisfies row' with coefficients moved to the
    // preimage cells, since T_sigma[c] = T[map_cell(c)].
    TriplePermutation inv = sigma.inverse();
    auto preimage_index = [&](int idx) {
        auto c = inv.map_cell(cell_of_index(idx, d));
        return cell_index(c[0], c[1], c[2], d);
    };
    out.sys.cfg = out.cfg;
    out.sys.d = d;
    out.sys.cap.assign(n, Int(0));
    for (int idx = 0; idx < n; ++idx) out.sys.cap[preimage_index(idx)] = fam.sys.cap[idx];
    for (const auto& eq : fam.sys.eqs) {
        LinearEquation ne;
        ne.rhs = eq.rhs;
        ne.tag = eq.tag + sigma.suffix();
        for (const auto& [c, x] : eq.coef) ne.coef[preimage_index(c)] = x;
        out.sys.eqs.push_back(std::move(ne));
    }
    for (const auto& eq : fam.sys.ineqs) {
        LinearEquation ne;
        ne.rhs = eq.rhs;
        ne.tag = eq.tag + sigma.suffix();
        for (const auto& [c, x] : eq.coef) ne.coef[preimage_index(c)] = x;
        out.sys.ineqs.push_back(std::move(ne));
    }

    // Affine solution with the same parameters: entry c reads the input's
    // affine form at map_cell(c).
    out.sol.num_vars = fam.sol.num_vars;
    out.sol.particular.assign(n, Rat(0));
    out.sol.basis.assign(fam.sol.basis.size(), std::vector<Rat>(n, Rat(0)));
    for (int idx = 0; idx < n; ++idx) {
        int pre = mapped_index(idx);
        out.sol.particular[idx] = fam.sol.particular[pre];
        for (std::size_t t = 0; t < fam.sol.basis.size(); ++t)
            out.sol.basis[t][idx] = fam.sol.basis[t][pre];
    }
    for (auto f : fam.sol.free_cols)
        out.sol.free_cols.push_back(static_cast<std::size_t>(preimage_index(static_cast<int>(f))));
    for (auto p : fam.sol.pivot_cols)
        out.sol.pivot_cols.push_back(static_cast<std::size_t>(preimage_index(static_cast<int>(p))));
    return out;
}

std::string LinearForm::str() const {
    std::string lhs;
    for (const auto& [name, c] : coef) {
        if (c == 0) continue;
        if (lhs.empty()) {
            if (c == 1)
                lhs = name;
            else if (c == -1)
                lhs = "-" + name;
            else
                lhs = to_string(c) + "*" + name;
        } else {
            if (c > 0)
                lhs += " + " + (c == 1 ? name : to_string(c) + "*" + name);
            else
                lhs += " - " + (c == -1 ? name : to_string(-c) + "*" + name);
        }
    }
    if (lhs.empty()) lhs = "0";
    return lhs + " = " + to_string(-constant);
}

SymmetrizeResult symmetrize_families(const TripleFamily& fam,
                                     const std::vector<TriplePermutation>& stab) {
    int d = fam.d;
    int n = d * d * d;
    SymmetrizeResult out;
    for (const auto& s : stab)
        if (!s.is_identity()) out.stab.push_back(s);

    // Emit one coupling relation per (sigma, cell): the copy's entry e and
    // the base entry sigma(e) count the same vertex set.
    for (const auto& sigma : out.stab) {
        for (int idx = 0; idx < n; ++idx) {
            auto e = cell_of_index(idx, d);
            auto se = sigma.map_cell(e);
            int sidx = cell_index(se[0], se[1], se[2], d);
            CouplingRelation rel;
            rel.sigma = sigma;
            rel.cell = e;
            LinearForm& f = rel.form;
            f.constant = fam.sol.form_constant(idx) - fam.sol.form_constant(sidx);
            for (std::size_t t = 0; t < fam.sol.free_cols.size(); ++t) {
                Rat a = fam.sol.form_coef(idx, t);
                if (a != 0) f.coef[fam.param_names[t] + sigma.suffix()] += a;
                Rat b = fam.sol.form_coef(sidx, t);
                if (b != 0) f.coef[fam.param_names[t]] -= b;
            }
            out.relations.push_back(std::move(rel));
        }
    }

    // Projection to a single parameter set: identify each copy with the
    // base, i.e. add entry e = entry sigma(e) and re-solve.
    TripleSystem joined = fam.sys;
    for (const auto& sigma : out.stab)
        for (int idx = 0; idx < n; ++idx) {
            auto e = cell_of_index(idx, d);
            auto se = sigma.map_cell(e);
            int sidx = cell_index(se[0], se[1], se[2], d);
            if (sidx <= idx) continue;  // one equation per unordered pair
            LinearEquation eq;
            eq.coef[idx] = 1;
            eq.coef[sidx] = -1;
            eq.rhs = 0;
            eq.tag = "identify:" + cell_name(e) + "~" + cell_name(se) + sigma.suffix();
            joined.eqs.push_back(std::move(eq));
        }
    out.family = solve_family(joined);
    out.note =
        "identified family is the symmetric-representative normal form: "
        "parameters of each re-based copy were set equal to the base "
        "parameters, which real triples with asymmetric tables need not "
        "satisfy; the emitted coupling relations are the sound content";
    return out;
}

}  // namespace drg
