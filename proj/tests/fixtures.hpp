#pragma once

// Polynomials and polygons shared by the unit and acceptance tests.

namespace fixtures {

inline const char* const kP1 = "1+x+y+xy+y^2+x^2*y";
inline const char* const kP2 = "1+x+3y+xy+y^2+x^2*y";
inline const char* const kP3 = "1+x+y+4xy+y^2+x^2*y";
inline const char* const kP4 = "1+x+3y+4xy+y^2+x^2*y";
inline const char* const kQuadFixtures[] = {kP1, kP2, kP3, kP4};

/// Lattice polygon with four vertices and six lattice points.
inline const char* const kPolygon = "(0,0),(1,0),(2,1),(0,2)";
inline const char* const kPolygonHyperpoly = "1+4*x+6*y+24*x*y+12*x^2*y+2*y^2";
inline const char* const kPolygonPhi = "1/(Gamma(s+1)Gamma(t+1)Gamma(-s-2t+5)Gamma(-s+t+2))";

/// Hexagon with 23 lattice points and its hypergeometric polynomial.
inline const char* const kHexagon = "(2,0),(4,2),(4,4),(2,6),(0,4),(0,2)";
inline const char* const kHexagonHyperpoly =
    "2x^2+20xy+72x^2y+20x^3y+5y^2+160xy^2+450x^2y^2+160x^3y^2+5x^4y^2+12y^3+300xy^3+800x^2y^3+300x^3y^3+"
    "12x^4y^3+5y^4+160xy^4+450x^2y^4+160x^3y^4+5x^4y^4+20xy^5+72x^2y^5+20x^3y^5+2x^2y^6";

inline const char* const kOctahedron = "(2,2,0),(2,0,2),(0,2,2),(4,2,2),(2,4,2),(2,2,4)";
inline const char* const kOctahedronHyperpoly =
    "x^2y^2+36x^2yz+36xy^2z+256x^2y^2z+36x^3y^2z+36x^2y^3z+x^2z^2+36xyz^2+256x^2yz^2+36x^3yz^2+y^2z^2+"
    "256xy^2z^2+1296x^2y^2z^2+256x^3y^2z^2+x^4y^2z^2+36xy^3z^2+256x^2y^3z^2+36x^3y^3z^2+x^2y^4z^2+36x^2yz^3+"
    "36xy^2z^3+256x^2y^2z^3+36x^3y^2z^3+36x^2y^3z^3+x^2y^2z^4";

/// A 27-term polynomial solving the Horn system of a numerator-Gamma
/// coefficient (up to the monomial factor x^3 y^2).
inline const char* const kBigHorn =
    "-456456x^3+488864376x^2y-28756728x^3y+25420947552x^2y^2-244432188x^3y^2+3003x^4y^2-119841609888xy^3+"
    "127104737760x^2y^3-465585120x^3y^3+6006x^4y^3+1396755360y^4-508418951040xy^4+139815211536x^2y^4-"
    "232792560x^3y^4+1729x^4y^4+4190266080y^5-355893265728xy^5+41611670100x^2y^5-29628144x^3y^5+57x^4y^5+"
    "698377680y^6-58663725120xy^6+3328933608x^2y^6-705432x^3y^6-2327925600xy^7+55023696x^2y^7-16930368xy^8";
inline const char* const kBigHornPhi = "Gamma(s+t-4)Gamma(-4s+t-16)Gamma(-3s-2t-5)Gamma(3s-t-3)Gamma(2s+t-5)";

/// Trivariate polynomial whose amoeba is cut by log|z| = 5.
inline const char* const kTrivariate = "1+3y+y^2+6xy+x^2y+xyz+xyz^2";

}  // namespace fixtures
