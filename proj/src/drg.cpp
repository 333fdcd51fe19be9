#include "drg/drg.hpp"

#include "drg/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace drg {

namespace {

// Tokenizing helper for the array grammar.
struct Scanner {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Int number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start)
            throw ParseError("expected a number at position " + std::to_string(start) +
                             " of '" + std::string(s) + "'");
        return Int(std::string(s.substr(start, pos - start)));
    }
    bool done() {
        skip_ws();
        return pos == s.size();
    }
};

std::vector<Int> number_list(Scanner& sc) {
    std::vector<Int> out;
    out.push_back(sc.number());
    while (sc.eat(',')) out.push_back(sc.number());
    return out;
}

}  // namespace

IntersectionArray IntersectionArray::parse(std::string_view text) {
    Scanner sc{text};
    if (!sc.eat('{')) throw ParseError("intersection array must start with '{'");
    IntersectionArray arr;
    arr.b = number_list(sc);
    if (!sc.eat(';')) throw ParseError("expected ';' between the b and c sequences");
    arr.c = number_list(sc);
    if (!sc.eat('}')) throw ParseError("intersection array must end with '}'");
    if (!sc.done()) throw ParseError("trailing characters after intersection array");
    if (arr.b.size() != arr.c.size())
        throw ParseError("need as many c_i as b_i, got " + std::to_string(arr.b.size()) +
                         " and " + std::to_string(arr.c.size()));
    if (arr.b.empty()) throw ParseError("empty intersection array");
    return arr;
}

std::string IntersectionArray::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + b[i].str();
    out += ";";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + c[i].str();
    out += "}";
    return out;
}

ParameterTable intersection_numbers(const IntersectionArray& arr) {
    int d = arr.d();
    for (const Int& x : arr.b)
        if (x <= 0) throw NonIntegralParameters("every b_i must be positive");
    for (const Int& x : arr.c)
        if (x <= 0) throw NonIntegralParameters("every c_i must be positive");
    if (arr.c[0] != 1) throw NonIntegralParameters("c_1 must equal 1");

    ParameterTable t;
    t.d = d;
    t.b.assign(d + 1, Int(0));
    t.c.assign(d + 1, Int(0));
    t.a.assign(d + 1, Int(0));
    for (int i = 0; i < d; ++i) t.b[i] = arr.b[i];
    for (int i = 1; i <= d; ++i) t.c[i] = arr.c[i - 1];
    const Int& kval = t.b[0];
    for (int i = 0; i <= d; ++i) {
        t.a[i] = kval - t.b[i] - t.c[i];
        if (t.a[i] < 0)
            throw NonIntegralParameters("a_" + std::to_string(i) + " = k - b_i - c_i is negative");
    }

    t.k.assign(d + 1, Int(1));
    for (int i = 1; i <= d; ++i) {
        Int num = t.k[i - 1] * t.b[i - 1];
        if (num % t.c[i] != 0)
            throw NonIntegralParameters("valency k_" + std::to_string(i) + " is not an integer");
        t.k[i] = num / t.c[i];
    }
    t.v = 0;
    for (const Int& x : t.k) t.v += x;

    t.p.assign(static_cast<std::size_t>(d + 1) * (d + 1) * (d + 1), Int(0));
    for (int h = 0; h <= d; ++h) t.pnum(h, 0, h) = 1;
    for (int h = 0; h <= d; ++h) {
        if (h - 1 >= 0) t.pnum(h, 1, h - 1) = t.c[h];
        t.pnum(h, 1, h) = t.a[h];
        if (h + 1 <= d) t.pnum(h, 1, h + 1) = t.b[h];
    }
    // Recurrence in the middle index:
    //   c_{i+1} p^h_{i+1,j} = b_h p^{h+1}_{ij} + (a_h - a_i) p^h_{ij}
    //                       + c_h p^{h-1}_{ij} - b_{i-1} p^h_{i-1,j}
    for (int i = 1; i < d; ++i)
        for (int h = 0; h <= d; ++h)
            for (int j = 0; j <= d; ++j) {
                Int s = (t.a[h] - t.a[i]) * t.pnum(h, i, j);
                if (h + 1 <= d) s += t.b[h] * t.pnum(h + 1, i, j);
                if (h - 1 >= 0) s += t.c[h] * t.pnum(h - 1, i, j);
                if (i - 1 >= 0) s -= t.b[i - 1] * t.pnum(h, i - 1, j);
                if (s % t.c[i + 1] != 0)
                    throw NonIntegralParameters(
                        "p^" + std::to_string(h) + "_{" + std::to_string(i + 1) + "," +
                        std::to_string(j) + "} is not an integer");
                Int val = s / t.c[i + 1];
                if (val < 0)
                    throw NonIntegralParameters(
                        "p^" + std::to_string(h) + "_{" + std::to_string(i + 1) + "," +
                        std::to_string(j) + "} is negative");
                t.pnum(h, i + 1, j) = val;
            }
    return t;
}

Spectrum spectrum(const ParameterTable& pt) {
    int d = pt.d;
    RatMatrix L(d + 1, d + 1);
    for (int i = 0; i <= d; ++i) {
        L.at(i, i) = Rat(pt.a[i]);
        if (i + 1 <= d) L.at(i, i + 1) = Rat(pt.b[i]);
        if (i - 1 >= 0) L.at(i, i - 1) = Rat(pt.c[i]);
    }
    auto roots = char_poly_roots(L);
    if (static_cast<int>(roots.size()) != d + 1)
        throw NonIntegralMultiplicity("expected " + std::to_string(d + 1) +
                                      " distinct eigenvalues, found " +
                                      std::to_string(roots.size()));

    Spectrum sp;
    for (auto& [theta, mult] : roots) {
        (void)mult;
        // Standard sequence u_0..u_d for this eigenvalue.
        std::vector<Rat> u(d + 1);
        u[0] = 1;
        u[1] = theta / Rat(pt.k[1]);
        for (int i = 1; i < d; ++i)
            u[i + 1] = (theta * u[i] - Rat(pt.c[i]) * u[i - 1] - Rat(pt.a[i]) * u[i]) / Rat(pt.b[i]);
        Rat denom = 0;
        for (int i = 0; i <= d; ++i) denom += Rat(pt.k[i]) * u[i] * u[i];
        Rat m = Rat(pt.v) / denom;
        if (!is_integer(m) || m <= 0)
            throw NonIntegralMultiplicity("multiplicity of eigenvalue " + to_string(theta) +
                                          " is " + to_string(m));
        sp.theta.push_back(theta);
        sp.mult.push_back(numerator(m));
    }
    Int total = 0;
    for (const Int& m : sp.mult) total += m;
    if (total != pt.v)
        throw NonIntegralMultiplicity("multiplicities sum to " + total.str() +
                                      ", expected " + pt.v.str());
    return sp;
}

Eigenmatrices eigenmatrices(const ParameterTable& pt, const Spectrum& sp) {
    int d = pt.d;
    Eigenmatrices em;
    em.P = RatMatrix(d + 1, d + 1);
    for (int r = 0; r <= d; ++r) {
        const Rat& theta = sp.theta[r];
        std::vector<Rat> u(d + 1);
        u[0] = 1;
        u[1] = theta / Rat(pt.k[1]);
        for (int i = 1; i < d; ++i)
            u[i + 1] = (theta * u[i] - Rat(pt.c[i]) * u[i - 1] - Rat(pt.a[i]) * u[i]) / Rat(pt.b[i]);
        for (int i = 0; i <= d; ++i) em.P.at(r, i) = Rat(pt.k[i]) * u[i];
    }
    em.Q = em.P.inverse();
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) em.Q.at(i, j) *= Rat(pt.v);
    return em;
}

KreinTable krein_table(const ParameterTable& pt, const Spectrum& sp,
                       const Eigenmatrices& em) {
    int d = pt.d;
    KreinTable kt;
    kt.d = d;
    kt.q.assign(static_cast<std::size_t>(d + 1) * (d + 1) * (d + 1), Rat(0));
    for (int h = 0; h <= d; ++h)
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j <= d; ++j) {
                Rat s = 0;
                for (int l = 0; l <= d; ++l)
                    s += em.P.at(i, l) * em.P.at(j, l) * em.P.at(h, l) /
                         (Rat(pt.k[l]) * Rat(pt.k[l]));
                Rat q = Rat(sp.mult[i]) * Rat(sp.mult[j]) * s / Rat(pt.v);
                if (q < 0)
                    throw NegativeKrein("q^" + std::to_string(h) + "_{" + std::to_string(i) +
                                        "," + std::to_string(j) + "} = " + to_string(q));
                kt.q[(static_cast<std::size_t>(h) * (d + 1) + i) * (d + 1) + j] = q;
                if (q == 0) kt.vanishing.push_back({h, i, j});
            }
    std::sort(kt.vanishing.begin(), kt.vanishing.end());
    return kt;
}

std::string SrgParams::str() const {
    return "(" + v.str() + "," + k.str() + "," + lambda.str() + "," + mu.str() + ")";
}

SrgParams distance_graph_srg_params(const ParameterTable& pt, int i) {
    if (i < 1 || i > pt.d) throw Error("BadIndex", "distance class out of range");
    SrgParams out;
    out.v = pt.v;
    out.k = pt.k[i];
    out.lambda = pt.pnum(i, i, i);
    bool have_mu = false;
    for (int j = 0; j <= pt.d; ++j) {
        if (j == 0 || j == i) continue;
        const Int& mu = pt.pnum(j, i, i);
        if (!have_mu) {
            out.mu = mu;
            have_mu = true;
        } else if (mu != out.mu) {
            throw NotSRGLike("distance-" + std::to_string(i) +
                             " graph: common-neighbor counts p^j_{ii} disagree across j (" +
                             out.mu.str() + " vs " + mu.str() + ")");
        }
    }
    if (!have_mu) throw NotSRGLike("diameter too small to define mu");
    return out;
}

}  // namespace drg
