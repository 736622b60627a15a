#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "amoeba/amoeba_maps.hpp"
#include "amoeba/hypergeom.hpp"
#include "amoeba/topology.hpp"

namespace amoeba {

/// "%.15g"; infinities print as "inf" / "-inf".
std::string format_double(double v);

/// Header `log_abs_x,log_abs_y` (or `mu_1,mu_2` for moment clouds), plus a
/// `u` column when the cloud carries parameters. Rows are written in the
/// cloud's order; sweeps already return them sorted.
void write_cloud_csv(std::ostream& out, const PointCloud& cloud);

/// Inverse of write_cloud_csv; throws ParseError on malformed rows.
PointCloud read_cloud_csv(std::istream& in);

/// `re_x,im_x,re_y,im_y,residual`; three-coordinate witnesses add
/// `re_z,im_z` (or `re_u,im_u` for contour clouds) before the residual.
void write_witness_csv(std::ostream& out, const PointCloud& cloud);

/// Polynomial given as [{"exp":[i,j],"num":p,"den":q}, ...]; "den" defaults
/// to 1 and "num"/"den" may be integers or decimal strings.
ExactPolynomial parse_polynomial_json(std::string_view text, int nvars);

/// JSON when the text starts with '[', the text grammar otherwise.
ExactPolynomial parse_polynomial_any(std::string_view text, int nvars);

nlohmann::json to_json(const Facet& facet);
nlohmann::json to_json(const GammaFactor& factor);

/// {normals, m, phi_factors, horn_operators, verified} plus the polynomial
/// and the full phi.
nlohmann::json hyperpoly_report(const NewtonPolytope& polytope, const OreSatoCoefficient& phi,
                                const ExactPolynomial& p, const HornMembershipReport& verification);

/// {count, bounded, unbounded, vertices, lattice_points, classification,
/// sampling}.
nlohmann::json topology_report(const TopologyReport& report, const TopologyOptions& options);

/// Label matrix as a binary PGM: occupied cells black, components in
/// distinct grey levels; the top row is the largest y.
void write_label_pgm(std::ostream& out, const GridRaster& raster, const ComponentLabels& labels);

/// Whole-file helpers; throw Error when the path cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace amoeba
