#pragma once

#include "drg/matrix.hpp"
#include "drg/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace drg {

// Intersection array {b0,...,b_{d-1}; c1,...,cd} of a distance-regular graph.
struct IntersectionArray {
    std::vector<Int> b;  // b[0..d-1]
    std::vector<Int> c;  // c[0..d-1] holds c_1..c_d

    int d() const { return static_cast<int>(b.size()); }

    // Grammar: '{' b0 ',' ... ',' b_{d-1} ';' c1 ',' ... ',' cd '}' with
    // optional whitespace between tokens.
    static IntersectionArray parse(std::string_view text);
    std::string str() const;  // canonical: no whitespace

    bool operator==(const IntersectionArray&) const = default;
};

// All intersection numbers p^h_{ij} of the scheme, plus the derived scalars.
struct ParameterTable {
    int d = 0;
    Int v;
    std::vector<Int> k;        // k[0..d], k[0] = 1
    std::vector<Int> a, b, c;  // index 0..d with b[d] = 0, c[0] = 0
    std::vector<Int> p;        // p^h_{ij} flattened

    const Int& pnum(int h, int i, int j) const {
        return p[(static_cast<std::size_t>(h) * (d + 1) + i) * (d + 1) + j];
    }
    Int& pnum(int h, int i, int j) {
        return p[(static_cast<std::size_t>(h) * (d + 1) + i) * (d + 1) + j];
    }
};

// Runs the standard three-term recurrence; every p^h_{ij} must come out a
// nonnegative integer or the array admits no graph (NonIntegralParameters).
ParameterTable intersection_numbers(const IntersectionArray& arr);

// Eigenvalues of the scheme with exact multiplicities, sorted descending;
// theta[0] is the valency.  Throws IrrationalSpectrum when the tridiagonal
// characteristic polynomial does not split over Q, NonIntegralMultiplicity
// when a multiplicity is not a positive integer.
struct Spectrum {
    std::vector<Rat> theta;
    std::vector<Int> mult;
};
Spectrum spectrum(const ParameterTable& pt);

// First and second eigenmatrices.  Row r of P lists k_i u_i(theta_r); Q is
// defined by P Q = v I.  Invariants: row 0 of P is the valencies, column 0 of
// Q is all ones, row 0 of Q is the multiplicities.
struct Eigenmatrices {
    RatMatrix P, Q;
};
Eigenmatrices eigenmatrices(const ParameterTable& pt, const Spectrum& sp);

// Krein parameters q^h_{ij} with the vanishing set flagged.  Throws
// NegativeKrein if any parameter is negative (no graph exists then).
struct KreinTable {
    int d = 0;
    std::vector<Rat> q;                        // flattened like ParameterTable::p
    std::vector<std::array<int, 3>> vanishing; // (h,i,j) with q^h_{ij} = 0, sorted

    const Rat& qnum(int h, int i, int j) const {
        return q[(static_cast<std::size_t>(h) * (d + 1) + i) * (d + 1) + j];
    }
};
KreinTable krein_table(const ParameterTable& pt, const Spectrum& sp,
                       const Eigenmatrices& em);

// Strongly-regular parameters of the distance-i graph, read off the p-table:
// lambda = p^i_{ii}, and mu = p^j_{ii} provided the value is the same for
// every j outside {0,i} (otherwise NotSRGLike).
struct SrgParams {
    Int v, k, lambda, mu;
    bool operator==(const SrgParams&) const = default;
    std::string str() const;
};
SrgParams distance_graph_srg_params(const ParameterTable& pt, int i);

}  // namespace drg
