#pragma once

#include "drg/drg.hpp"
#include "drg/errors.hpp"
#include "drg/matrix.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace drg {

// Distance configuration of an ordered vertex triple (u,v,w).  Constructed
// from the public label (d(u,v), d(u,w), d(v,w)); the W/U/V accessors match
// the roles the triple equations use: W = d(u,v), U = d(v,w), V = d(u,w).
struct TripleConfig {
    int duv = 0, duw = 0, dvw = 0;

    static TripleConfig from_label(int duv_, int duw_, int dvw_) {
        return TripleConfig{duv_, duw_, dvw_};
    }
    int W() const { return duv; }
    int U() const { return dvw; }
    int V() const { return duw; }

    std::array<int, 3> label() const { return {duv, duw, dvw}; }
    std::string str() const {
        return "(" + std::to_string(duv) + "," + std::to_string(duw) + "," +
               std::to_string(dvw) + ")";
    }
    auto operator<=>(const TripleConfig&) const = default;
};

// Cells [ijh] with 1 <= i,j,h <= d are the unknown triple intersection
// numbers; they are indexed lexicographically by (i,j,h).
inline int cell_index(int i, int j, int h, int d) {
    return ((i - 1) * d + (j - 1)) * d + (h - 1);
}
inline std::array<int, 3> cell_of_index(int idx, int d) {
    return {idx / (d * d) + 1, (idx / d) % d + 1, idx % d + 1};
}
std::string cell_name(std::array<int, 3> cell);  // "[213]"

// One linear equation over the cells: sum coef[cell] * [cell] = rhs.
struct LinearEquation {
    std::map<int, Rat> coef;  // key: cell index
    Rat rhs;
    std::string tag;  // provenance, e.g. "sum(i=2,h=3)" or "rule:..."
};

// The assembled linear system for one configuration, together with the
// per-cell upper bounds min(p^W_{ij}, p^V_{ih}, p^U_{jh}).
struct TripleSystem {
    TripleConfig cfg;
    int d = 0;
    std::vector<LinearEquation> eqs;
    std::vector<Int> cap;                 // size d^3
    std::vector<LinearEquation> ineqs;    // extra "<= rhs" constraints from rules
};

// Builds the boundary-corrected sum equations (3 d^2 of them) plus the
// zero-forcing equations for cells whose bracketing p-numbers vanish.  When
// `em` and `kt` are both supplied, one S_{ijh} = 0 equation is appended per
// vanishing Krein parameter with all-positive indices, with the boundary
// cells folded into the constant term.  Throws UnrealizableConfig when no
// triple realizes cfg (p^W_{V,U} = 0).
TripleSystem assemble_system(const ParameterTable& pt, TripleConfig cfg,
                             const Eigenmatrices* em = nullptr,
                             const KreinTable* kt = nullptr);

// A solved family: the affine solution set of the system over the d^3 cells.
// Free parameters are the non-pivot cells in canonical left-to-right order
// and are referred to by their cell name.
struct TripleFamily {
    TripleConfig cfg;
    int d = 0;
    TripleSystem sys;   // system of record (later stages append equations)
    AffineSolution sol;
    std::vector<std::string> param_names;

    int dim() const { return static_cast<int>(sol.free_cols.size()); }
};

// Solves the system exactly; throws Infeasible (with the inconsistent
// equation subset as certificate) when it has no solution.
TripleFamily solve_family(const TripleSystem& sys);

// Integer points of a family: every cell integral and within [0, cap], and
// every rule inequality satisfied.  Points are the full d^3 tuples in cell
// order, sorted lexicographically.  If interval propagation still leaves
// more than `candidate_cap` parameter combinations, no enumeration is
// attempted and `enumerated` stays false (callers print the symbolic form).
struct PointSet {
    std::vector<std::vector<Int>> points;
    bool enumerated = false;
    Int candidates;  // number of parameter combinations scanned (or bound)
};
PointSet enumerate_points(const TripleFamily& fam,
                          const Int& candidate_cap = Int(10'000'000));

// Helper: value of one cell at an enumerated point.
inline const Int& point_cell(const std::vector<Int>& point, std::array<int, 3> cell, int d) {
    return point[cell_index(cell[0], cell[1], cell[2], d)];
}

}  // namespace drg
