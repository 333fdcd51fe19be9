#include "drg/constraints.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace drg {

std::string to_string(RuleCategory c) {
    switch (c) {
        case RuleCategory::LatticeGeometry: return "lattice-geometry";
        case RuleCategory::Linking: return "linking";
        case RuleCategory::Inequality: return "inequality";
    }
    return "?";
}

std::string to_string(RuleCompare c) {
    return c == RuleCompare::Equal ? "==" : "<=";
}

namespace {

RuleCategory category_from_string(const std::string& s) {
    if (s == "lattice-geometry") return RuleCategory::LatticeGeometry;
    if (s == "linking") return RuleCategory::Linking;
    if (s == "inequality") return RuleCategory::Inequality;
    throw ParseError("unknown rule category '" + s + "'");
}

std::string relation_string(const ConstraintRule& r) {
    std::string out;
    for (const auto& [cell, coef] : r.lhs) {
        if (!out.empty()) out += " + ";
        out += coef.str() + "*[" + std::to_string(cell[0]) + "," +
               std::to_string(cell[1]) + "," + std::to_string(cell[2]) + "]";
    }
    out += " " + to_string(r.compare) + " " + r.rhs.str();
    return out;
}

void parse_relation(const std::string& text, ConstraintRule& r) {
    std::string op = " == ";
    auto pos = text.find(op);
    r.compare = RuleCompare::Equal;
    if (pos == std::string::npos) {
        op = " <= ";
        pos = text.find(op);
        r.compare = RuleCompare::LessEqual;
    }
    if (pos == std::string::npos)
        throw ParseError("relation needs ' == ' or ' <= ': '" + text + "'");
    r.rhs = Int(text.substr(pos + op.size()));
    std::string lhs = text.substr(0, pos);
    std::size_t at = 0;
    while (at < lhs.size()) {
        auto next = lhs.find(" + ", at);
        std::string term = lhs.substr(at, next == std::string::npos ? next : next - at);
        auto star = term.find("*[");
        if (star == std::string::npos || term.back() != ']')
            throw ParseError("bad relation term '" + term + "'");
        Int coef(term.substr(0, star));
        std::string cell = term.substr(star + 2, term.size() - star - 3);
        std::array<int, 3> c{};
        if (std::sscanf(cell.c_str(), "%d,%d,%d", &c[0], &c[1], &c[2]) != 3)
            throw ParseError("bad cell in relation term '" + term + "'");
        r.lhs.emplace_back(c, coef);
        if (next == std::string::npos) break;
        at = next + 3;
    }
    if (r.lhs.empty()) throw ParseError("relation has no terms: '" + text + "'");
}

}  // namespace

std::string serialize_rules(const RuleSet& rs) {
    std::string out = "version " + std::to_string(rs.version) + "\n";
    for (const auto& r : rs.rules) {
        out += "\nrule " + r.id + "\n";
        out += "config " + std::to_string(r.config.duv) + "," +
               std::to_string(r.config.duw) + "," + std::to_string(r.config.dvw) + "\n";
        out += "category " + to_string(r.category) + "\n";
        out += "relation " + relation_string(r) + "\n";
        out += "source " + r.source + "\n";
        out += "note " + r.note + "\n";
        out += "end\n";
    }
    return out;
}

RuleSet parse_rules(const std::string& text) {
    RuleSet rs;
    std::istringstream in(text);
    std::string line;
    bool have_version = false;
    std::optional<ConstraintRule> cur;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError("rule file line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto sp = line.find(' ');
        std::string key = line.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
        if (key == "version") {
            if (have_version) fail("duplicate version");
            rs.version = std::stoi(rest);
            have_version = true;
        } else if (key == "rule") {
            if (cur) fail("rule started inside a rule");
            if (rest.empty()) fail("rule needs an id");
            cur = ConstraintRule{};
            cur->id = rest;
        } else if (key == "end") {
            if (!cur) fail("end outside a rule");
            if (cur->lhs.empty()) fail("rule '" + cur->id + "' has no relation");
            if (cur->source.empty()) fail("rule '" + cur->id + "' has no source quote");
            rs.rules.push_back(std::move(*cur));
            cur.reset();
        } else if (!cur) {
            fail("unexpected '" + key + "' outside a rule");
        } else if (key == "config") {
            int a, b, c;
            if (std::sscanf(rest.c_str(), "%d,%d,%d", &a, &b, &c) != 3)
                fail("bad config '" + rest + "'");
            cur->config = TripleConfig::from_label(a, b, c);
        } else if (key == "category") {
            cur->category = category_from_string(rest);
        } else if (key == "relation") {
            parse_relation(rest, *cur);
        } else if (key == "source") {
            cur->source = rest;
        } else if (key == "note") {
            cur->note = rest;
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (cur) throw ParseError("rule file ended inside rule '" + cur->id + "'");
    if (!have_version) throw ParseError("rule file has no version line");
    return rs;
}

RuleSet load_rules_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open rules file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_rules(buf.str());
}

RuleSet builtin_rules(const ParameterTable& pt) {
    SrgParams rook56{Int(3136), Int(110), Int(54), Int(2)};
    SrgParams got;
    try {
        got = distance_graph_srg_params(pt, 3);
    } catch (const Error& e) {
        throw LatticeCheckFailed(
            "distance-3 graph is not strongly regular: " + std::string(e.what()));
    }
    if (!(got == rook56))
        throw LatticeCheckFailed("distance-3 graph has parameters " + got.str() +
                                 ", rules are proved for (3136,110,54,2)");

    RuleSet rs;
    ConstraintRule r;

    r = ConstraintRule{};
    r.id = "rectangle-corner-hits-w-223";
    r.config = TripleConfig::from_label(2, 2, 3);
    r.compare = RuleCompare::Equal;
    r.lhs = {{{3, 3, 3}, Int(1)}};
    r.rhs = 1;
    r.category = RuleCategory::LatticeGeometry;
    r.source =
        "В $56\\times 56$-решетке $\\Gamma_3$ подграф $\\Gamma_3(u)\\cap \\Gamma_3(v)$ "
        "является 2-кокликой, пересекающей $\\Gamma_3(w)$ по единственной вершине, поэтому "
        "$[333]=-r_{5}+r_{8}=1$ и $r_{5}\\in \\{0,1\\}$.";
    r.note =
        "u and v are non-collinear in the distance-3 rook graph, so their common "
        "rook-neighbors are exactly the two opposite corners of their rectangle; w is "
        "collinear with v and not with u, and exactly one corner lies on a line through w.";
    rs.rules.push_back(r);

    r = ConstraintRule{};
    r.id = "line-meets-neighborhood-223";
    r.config = TripleConfig::from_label(2, 2, 3);
    r.compare = RuleCompare::LessEqual;
    r.lhs = {{{1, 3, 3}, Int(1)}};
    r.rhs = 1;
    r.category = RuleCategory::Inequality;
    r.source =
        "Аналогично, $\\Gamma_3(v)\\cap \\Gamma_3(w)$ является 54-кликой, пересекающей "
        "$\\Gamma(u)$ не более чем по одной вершине, поэтому "
        "$[133]=-r_{4}-r_{6}+r_{7}-r_{5}+3\\le 1$.";
    r.note =
        "v and w are collinear, so the vertices collinear with both form the rest of "
        "their line, a 54-clique; two neighbors of u are at distance at most 2 and "
        "never collinear, so the neighborhood of u meets any line at most once.";
    rs.rules.push_back(r);

    r = ConstraintRule{};
    r.id = "rectangle-corner-misses-v-221";
    r.config = TripleConfig::from_label(2, 2, 1);
    r.compare = RuleCompare::Equal;
    r.lhs = {{{3, 3, 3}, Int(1)}};
    r.rhs = 0;
    r.category = RuleCategory::LatticeGeometry;
    r.source =
        "В $56\\times 56$-решетке $\\Gamma_3$ подграф $\\Gamma_3(u)\\cap \\Gamma_3(w)$ "
        "является 2-кокликой, не пересекающей $\\Gamma_3(v)$. Поэтому $[333]=r_{2}=0$.";
    r.note =
        "every line through a corner of the u,w rectangle passes through u or through w, "
        "so a vertex collinear with a corner is collinear with u or w; v is collinear "
        "with neither (its distances to them are 2 and 1, not 3).";
    rs.rules.push_back(r);

    r = ConstraintRule{};
    r.id = "rectangle-corner-misses-v-222";
    r.config = TripleConfig::from_label(2, 2, 2);
    r.compare = RuleCompare::Equal;
    r.lhs = {{{3, 3, 3}, Int(1)}};
    r.rhs = 0;
    r.category = RuleCategory::LatticeGeometry;
    r.source =
        "В $56\\times 56$-решетке $\\Gamma_3$ подграф $\\Gamma_3(u)\\cap \\Gamma_3(w)$ "
        "является 2-кокликой, не пересекающей $\\Gamma_3(v)$. Поэтому $[333]=r_{13}=0$. "
        "Отсюда следуют требуемые равенства.";
    r.note =
        "same rectangle argument with d(v,w)=2: v is collinear with neither u nor w, "
        "so it misses both corners.";
    rs.rules.push_back(r);

    return rs;
}

TripleFamily apply_rules(const TripleFamily& fam, const RuleSet& rules,
                         std::vector<std::string>* applied) {
    TripleSystem sys = fam.sys;
    bool any = false;
    for (const auto& r : rules.rules) {
        if (r.config != fam.cfg) continue;
        any = true;
        if (applied) applied->push_back(r.id);
        LinearEquation eq;
        for (const auto& [cell, coef] : r.lhs)
            eq.coef[cell_index(cell[0], cell[1], cell[2], fam.d)] += Rat(coef);
        eq.rhs = Rat(r.rhs);
        eq.tag = "rule:" + r.id;
        if (r.compare == RuleCompare::Equal) {
            sys.eqs.push_back(std::move(eq));
        } else {
            if (r.lhs.size() == 1 && r.lhs[0].second > 0) {
                // Single-cell bound: tighten the cap so interval propagation
                // sees it too.
                int idx = cell_index(r.lhs[0].first[0], r.lhs[0].first[1],
                                     r.lhs[0].first[2], fam.d);
                Int bound = r.rhs / r.lhs[0].second;
                if (bound < sys.cap[idx]) sys.cap[idx] = bound;
            }
            sys.ineqs.push_back(std::move(eq));
        }
    }
    if (!any) return fam;
    return solve_family(sys);
}

std::string LinkRelation::str() const {
    std::string out = multA.str() + "*" + cell_name(cellA) + spec.famA.str() + " = " +
                      multB.str() + "*" + cell_name(cellB) + spec.famB.str() +
                      "; joint integer solutions {";
    for (std::size_t i = 0; i < joint.size(); ++i)
        out += (i ? "," : "") + ("(" + joint[i].first.str() + "," + joint[i].second.str() + ")");
    out += "}";
    return out;
}

LinkRelation link_pair_count(const TripleFamily& famA, const PointSet& ptsA,
                             const TripleFamily& famB, const PointSet& ptsB,
                             const ParameterTable& pt, const LinkSpec& spec) {
    if (famA.cfg != spec.famA || famB.cfg != spec.famB)
        throw Error("BadLink", "families do not match the link specification");
    if (spec.famA.W() != spec.famB.W())
        throw Error("BadLink", "linked families must share the base-pair distance");
    if (spec.delta < 1 || spec.delta > pt.d)
        throw Error("BadLink", "link distance out of range");
    if (!ptsA.enumerated || !ptsB.enumerated)
        throw Error("BadLink", "link_pair_count needs enumerated families");

    LinkRelation rel;
    rel.spec = spec;
    // Pairs (y,z) over the base pair (u,v): y realizes famA's third vertex,
    // z realizes famB's third vertex, and d(y,z) = delta.  Counting z per y
    // uses famA's cell (V_B, U_B, delta); counting y per z uses famB's cell
    // (V_A, U_A, delta); the cell sizes are the bracketing p-numbers.
    rel.cellA = {spec.famB.V(), spec.famB.U(), spec.delta};
    rel.cellB = {spec.famA.V(), spec.famA.U(), spec.delta};
    rel.multA = pt.pnum(spec.famA.W(), spec.famA.V(), spec.famA.U());
    rel.multB = pt.pnum(spec.famB.W(), spec.famB.V(), spec.famB.U());

    std::set<Int> va, vb;
    for (const auto& p : ptsA.points) va.insert(point_cell(p, rel.cellA, famA.d));
    for (const auto& p : ptsB.points) vb.insert(point_cell(p, rel.cellB, famB.d));
    for (const Int& a : va)
        for (const Int& b : vb)
            if (rel.multA * a == rel.multB * b) rel.joint.emplace_back(a, b);

    if (rel.joint.empty())
        throw Infeasible("pair count " + rel.str() + " has no integer solution",
                         {"link:" + spec.famA.str() + "-" + spec.famB.str() + "-d" +
                          std::to_string(spec.delta)});

    auto all_equal = [](auto get, const auto& v) {
        for (const auto& x : v)
            if (get(x) != get(v.front())) return false;
        return true;
    };
    auto derived_rule = [&](TripleConfig cfg, std::array<int, 3> cell, const Int& val) {
        ConstraintRule r;
        r.id = "link-d" + std::to_string(spec.delta) + "-" +
               std::to_string(cfg.duv) + std::to_string(cfg.duw) + std::to_string(cfg.dvw) +
               "-cell" + std::to_string(cell[0]) + std::to_string(cell[1]) +
               std::to_string(cell[2]);
        r.config = cfg;
        r.compare = RuleCompare::Equal;
        r.lhs = {{cell, Int(1)}};
        r.rhs = val;
        r.category = RuleCategory::Linking;
        r.source = rel.str();
        r.note =
            "derived by double-counting pairs over the shared base pair and solving the "
            "count in integers; values are read from the family tables, which treats the "
            "entry as uniform across the configuration's triples (table-homogeneity).";
        return r;
    };
    if (all_equal([](const auto& x) { return x.first; }, rel.joint))
        rel.derived.push_back(derived_rule(spec.famA, rel.cellA, rel.joint.front().first));
    if (all_equal([](const auto& x) { return x.second; }, rel.joint))
        rel.derived.push_back(derived_rule(spec.famB, rel.cellB, rel.joint.front().second));
    return rel;
}

}  // namespace drg
