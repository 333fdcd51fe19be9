#pragma once

#include "drg/triples.hpp"

#include <optional>
#include <string>
#include <vector>

namespace drg {

enum class RuleCategory { LatticeGeometry, Linking, Inequality };
enum class RuleCompare { Equal, LessEqual };

std::string to_string(RuleCategory c);
std::string to_string(RuleCompare c);

// A geometric constraint on one configuration's cells: an integer linear
// form compared to an integer.  Rules are data: they carry the quote of the
// source statement they encode (`source`) and a prose justification
// (`note`), and they round-trip through the rule-file format bit-exact.
struct ConstraintRule {
    std::string id;
    TripleConfig config;
    RuleCompare compare = RuleCompare::Equal;
    std::vector<std::pair<std::array<int, 3>, Int>> lhs;  // (cell, coefficient)
    Int rhs;
    RuleCategory category = RuleCategory::LatticeGeometry;
    std::string source;
    std::string note;

    bool operator==(const ConstraintRule&) const = default;
};

struct RuleSet {
    int version = 1;
    std::vector<ConstraintRule> rules;
    bool operator==(const RuleSet&) const = default;
};

RuleSet parse_rules(const std::string& text);        // throws ParseError
std::string serialize_rules(const RuleSet& rules);   // canonical form
RuleSet load_rules_file(const std::string& path);    // throws ParseError

// The built-in rules for a graph whose distance-3 graph is the 56x56 rook
// graph.  Gate: distance_graph_srg_params(pt, 3) must equal
// (3136,110,54,2), otherwise LatticeCheckFailed -- the rules are proved for
// that geometry only.  (Identifying the SRG with the rook graph uses the
// classical uniqueness of lattice-graph parameters for n > 4, recorded as an
// assumption by the pipeline.)
RuleSet builtin_rules(const ParameterTable& pt);

// Applies the rules whose configuration matches the family: equalities are
// appended to the system and the family is re-solved; single-cell upper
// bounds tighten the cell cap; general inequalities are kept as enumeration
// filters.  Monotone: the solution set never grows.  Throws Infeasible with
// the equation-subset certificate when the joined system is inconsistent.
// `applied`, when non-null, collects the ids of the rules that matched.
TripleFamily apply_rules(const TripleFamily& fam, const RuleSet& rules,
                         std::vector<std::string>* applied = nullptr);

// A double count linking two families over a shared base pair (u,v) at
// distance W: pairs (y,z) with y in the cell {uv;V_A,U_A}, z in the cell
// {uv;V_B,U_B} and d(y,z) = delta are counted once through each family,
// giving  |{uv;V_A,U_A}| * [V_B,U_B,delta]_A = |{uv;V_B,U_B}| * [V_A,U_A,delta]_B.
// Treating the two entries as single values across all triples of the
// configuration is the table-homogeneity abstraction; it is recorded as an
// assumption wherever the result is used.
struct LinkSpec {
    TripleConfig famA, famB;
    int delta = 0;
};

struct LinkRelation {
    LinkSpec spec;
    std::array<int, 3> cellA{}, cellB{};
    Int multA, multB;  // multA * [cellA]_A == multB * [cellB]_B
    std::vector<std::pair<Int, Int>> joint;  // feasible integer value pairs
    std::vector<ConstraintRule> derived;     // pinned cell values when unique
    std::string str() const;
};

// Evaluates the linking relation against the attainable entry values of the
// two (enumerated) families and solves it in integers.  Returns the relation
// with the joint value pairs and, when a side takes a single value across
// all joint solutions, a derived rule pinning that cell.  Throws Infeasible
// when no attainable value pair satisfies the relation.
LinkRelation link_pair_count(const TripleFamily& famA, const PointSet& ptsA,
                             const TripleFamily& famB, const PointSet& ptsB,
                             const ParameterTable& pt, const LinkSpec& spec);

}  // namespace drg
