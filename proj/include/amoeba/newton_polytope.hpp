#pragma once

#include <vector>

#include "amoeba/polynomial.hpp"

namespace amoeba {

/// Supporting half-space <normal, s> <= support of a facet. The normal is
/// primitive (gcd of entries 1) and points outward.
struct Facet {
    Exponent normal;
    long support = 0;

    friend bool operator==(const Facet&, const Facet&) = default;
};

/// Full-dimensional lattice polytope in dimension 1, 2 or 3.
///
/// Vertices are counterclockwise in 2-D (starting from the lowest, then
/// leftmost vertex) and lexicographically sorted in 1-D and 3-D. In 2-D facet
/// k is the edge from vertex k to vertex k+1.
struct NewtonPolytope {
    int dim = 0;
    std::vector<Exponent> vertices;
    std::vector<Facet> facets;
    std::vector<Exponent> lattice_points;

    /// True when <B_j, s> <= m_j for every facet.
    bool contains(const Exponent& s) const;

    /// Largest violation max_j (<B_j, s> - m_j) of a real point; <= 0 inside.
    double facet_violation(const std::vector<double>& s) const;
};

/// Convex hull of a finite point set, with its lattice points enumerated by
/// scanning the bounding box. Throws DomainError for lower-dimensional input.
NewtonPolytope convex_hull(const std::vector<Exponent>& points);

/// Newton polytope of a nonzero polynomial.
template <class Coeff>
NewtonPolytope newton_polytope(const LaurentPolynomial<Coeff>& p) {
    if (p.is_zero()) throw DomainError("Newton polytope of the zero polynomial");
    return convex_hull(p.support());
}

}  // namespace amoeba
