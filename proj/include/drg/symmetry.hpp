#pragma once

#include "drg/triples.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace drg {

// A permutation of the three base roles (u,v,w).  `from[t]` says which old
// role the new base reads in slot t (0=u, 1=v, 2=w): the permutation
// (u,w,v) has from = {0,2,1} and re-bases the triple with v and w swapped.
struct TriplePermutation {
    std::array<int, 3> from{0, 1, 2};

    static TriplePermutation identity() { return {}; }
    static TriplePermutation swap_vw() { return {{0, 2, 1}}; }  // suffix '
    static TriplePermutation swap_uv() { return {{1, 0, 2}}; }  // suffix *
    static TriplePermutation swap_uw() { return {{2, 1, 0}}; }  // suffix ~

    bool is_identity() const { return from == std::array<int, 3>{0, 1, 2}; }

    // The table of the re-based triple reads the base table at mapped cells:
    // T_sigma[c] = T[map_cell(c)].
    std::array<int, 3> map_cell(std::array<int, 3> c) const;
    TripleConfig map_config(TripleConfig cfg) const;
    TriplePermutation inverse() const;
    TriplePermutation compose(const TriplePermutation& inner) const;

    // Copy suffix used for this permutation's parameters in emitted
    // relations: ' (v<->w), * (u<->v), ~ (u<->w), ^k for the two 3-cycles.
    std::string suffix() const;

    auto operator<=>(const TriplePermutation&) const = default;
};

// All role permutations that fix the configuration label, identity first,
// in a deterministic order (transpositions before 3-cycles).
std::vector<TriplePermutation> stabilizer(TripleConfig cfg);

// Relabels a family under a role permutation.  The result describes the
// same solution set seen from the re-based triples: its configuration is
// map_config(cfg), entry c of the result is entry map_cell(c) of the input,
// and the parameters are carried through unchanged (so the result is not in
// canonical pivot form; re-solve its system to canonicalize).
TripleFamily permute_family(const TripleFamily& fam, const TriplePermutation& sigma);

// A linear identity over named parameters (base names plus suffixed copy
// names), asserted to equal zero: sum coef * var + constant = 0.
struct LinearForm {
    std::map<std::string, Rat> coef;
    Rat constant;
    std::string str() const;
};

// One emitted coupling relation: for a stabilizer element sigma and cell e,
// the expression of entry e over the copy parameters equals the expression
// of entry sigma(e) over the base parameters -- both count the same vertex
// set, once from the re-based triple and once from the base triple.
struct CouplingRelation {
    TriplePermutation sigma;
    std::array<int, 3> cell;
    LinearForm form;  // f_e(params^sigma) - f_{sigma(e)}(params) = 0
};

struct SymmetrizeResult {
    std::vector<TriplePermutation> stab;      // non-identity elements used
    std::vector<CouplingRelation> relations;  // sound counting identities
    TripleFamily family;                      // identified representative family
    std::string note;                         // normal-form caveat
};

// Couples the family with its re-based copies and projects back to a single
// parameter set.  The emitted relations are sound for every triple.  The
// projection identifies each copy's parameters with the base parameters
// (entry e = entry sigma(e) as extra equations), which selects the
// symmetric representative tables; it never enlarges the solution set, but
// individual triples can have asymmetric tables, so downstream consumers
// treat the identified family as a normal form, not a per-triple fact.
SymmetrizeResult symmetrize_families(const TripleFamily& fam,
                                     const std::vector<TriplePermutation>& stab);

}  // namespace drg
