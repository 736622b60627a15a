#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "amoeba/amoeba_maps.hpp"
#include "amoeba/contour.hpp"
#include "amoeba/errors.hpp"
#include "amoeba/hypergeom.hpp"
#include "amoeba/io.hpp"
#include "amoeba/parallel.hpp"
#include "amoeba/parse.hpp"
#include "amoeba/svg.hpp"
#include "amoeba/topology.hpp"

using namespace amoeba;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitWarning = 2;

struct Common {
    std::string poly;
    std::string poly_file;
    double a = -5.0, b = 5.0;
    int n_r = 2000, n_phi = 180;
    bool linear = false;
    bool raw = false;
    std::string out, svg, witness;
    double tol = -1.0;
    unsigned threads = 0;

    unsigned thread_count() const { return threads ? threads : default_thread_count(); }

    ExactPolynomial polynomial(int nvars) const {
        if (!poly_file.empty()) return parse_polynomial_any(read_file(poly_file), nvars);
        if (poly.empty()) throw Error("a polynomial is required (-p or --file)");
        return parse_polynomial_any(poly, nvars);
    }

    SamplingGrid grid() const {
        SamplingGrid g{a, b, n_r, n_phi, linear ? RadiusSpacing::linear : RadiusSpacing::logarithmic};
        g.validate();
        return g;
    }

    SweepOptions sweep() const {
        SweepOptions o;
        if (tol > 0) o.tol = tol;
        o.dedup = !raw;
        o.threads = thread_count();
        return o;
    }
};

void add_polynomial(CLI::App* app, Common& c) {
    app->add_option("-p,--poly", c.poly, "Polynomial, e.g. \"1+x+3y+4xy+y^2+x^2*y\", or a JSON term list");
    app->add_option("--file", c.poly_file, "Read the polynomial from a file");
}

void add_grid(CLI::App* app, Common& c) {
    app->add_option("--a", c.a, "Lower log-radius bound")->capture_default_str();
    app->add_option("--b", c.b, "Upper log-radius bound")->capture_default_str();
    app->add_option("--nr", c.n_r, "Number of radii")->capture_default_str()->check(CLI::Range(2, 1 << 24));
    app->add_option("--nphi", c.n_phi, "Number of angles")->capture_default_str()->check(CLI::Range(2, 1 << 24));
    app->add_flag("--linear-radii", c.linear, "Space radii uniformly in |x| instead of log|x|");
}

void add_output(CLI::App* app, Common& c) {
    app->add_flag("--raw", c.raw, "Skip deduplication of nearby points");
    app->add_option("-o,--out", c.out, "CSV output (stdout when omitted)");
    app->add_option("--svg", c.svg, "SVG scatter plot");
    app->add_option("--witness", c.witness, "Witness CSV sidecar");
    app->add_option("--tol", c.tol, "Relative residual tolerance");
    app->add_option("--threads", c.threads, "Worker threads (default: AMOEBA_THREADS or all cores)");
}

std::string to_csv(const PointCloud& cloud) {
    std::ostringstream ss;
    write_cloud_csv(ss, cloud);
    return ss.str();
}

int emit_cloud(const Common& c, const PointCloud& cloud, SvgStyle style) {
    const std::string csv = to_csv(cloud);
    if (c.out.empty()) {
        std::cout << csv;
    } else {
        write_file(c.out, csv);
    }
    if (!c.witness.empty()) {
        std::ostringstream ss;
        write_witness_csv(ss, cloud);
        write_file(c.witness, ss.str());
    }
    if (!c.svg.empty() && !cloud.empty()) write_file(c.svg, render_svg(cloud, style));

    const SkipReport& s = cloud.skips;
    std::cerr << cloud.size() << " points; samples " << s.samples << ", zero roots " << s.zero_roots
              << ", degree drops " << s.degree_drops << ", nonconverged " << s.nonconverged << ", rejected "
              << s.rejected << '\n';
    if (cloud.empty()) {
        std::cerr << "warning: no points were produced\n";
        return kExitWarning;
    }
    if (s.nonconverged > 0) {
        std::cerr << "warning: some root iterations did not converge\n";
        return kExitWarning;
    }
    return kExitOk;
}

Box parse_box(const std::string& text) {
    Box box;
    if (text.empty()) return box;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf", &box.x_min, &box.x_max, &box.y_min, &box.y_max) != 4) {
        throw Error("--box expects xmin,xmax,ymin,ymax");
    }
    if (box.degenerate()) throw DomainError("--box is degenerate");
    return box;
}

std::vector<std::array<double, 2>> overlay_of(const NewtonPolytope& n) {
    std::vector<std::array<double, 2>> out;
    for (const auto& v : n.vertices) out.push_back({double(v[0]), double(v[1])});
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Amoebas of polynomials, their contours and hypergeometric polynomials with optimal amoebas"};
    app.require_subcommand(1);
    Common c;

    auto* amoeba_cmd = app.add_subcommand("amoeba", "Sample the amoeba of a bivariate polynomial");
    add_polynomial(amoeba_cmd, c);
    add_grid(amoeba_cmd, c);
    add_output(amoeba_cmd, c);

    auto* compact_cmd = app.add_subcommand("compactified", "Image of the zero set under the moment map");
    add_polynomial(compact_cmd, c);
    add_grid(compact_cmd, c);
    add_output(compact_cmd, c);

    ContourParams cp;
    bool no_reciprocal = false;
    bool print_eliminants = false;
    auto* contour_cmd = app.add_subcommand("contour", "Contour of the amoeba via elimination");
    add_polynomial(contour_cmd, c);
    add_output(contour_cmd, c);
    contour_cmd->add_option("--u-min", cp.u_min, "First slope")->capture_default_str();
    contour_cmd->add_option("--u-max", cp.u_max, "Last slope")->capture_default_str();
    contour_cmd->add_option("--u-step", cp.u_step, "Slope step")->capture_default_str();
    contour_cmd->add_flag("--no-reciprocal", no_reciprocal, "Skip the sweep over v = 1/u in [-1, 1]");
    contour_cmd->add_flag("--eliminants", print_eliminants, "Print the eliminated polynomials to stderr");

    double log_abs_z = 0.0;
    int n_phi_z = 1;
    auto* section_cmd = app.add_subcommand("section", "Section of a 3-D amoeba by a plane log|z| = const");
    add_polynomial(section_cmd, c);
    add_grid(section_cmd, c);
    add_output(section_cmd, c);
    section_cmd->add_option("--log-abs-z", log_abs_z, "Value of log|z|")->required();
    section_cmd->add_option("--nphi-z", n_phi_z, "Number of arg(z) samples")->capture_default_str()->check(
        CLI::PositiveNumber);

    std::string polygon, report_path;
    auto* hyper_cmd = app.add_subcommand("hyperpoly", "Hypergeometric polynomial with a given Newton polytope");
    hyper_cmd->add_option("--polygon", polygon, "Lattice points spanning the polytope, e.g. \"(0,0),(1,0),(2,1)\"")
        ->required();
    hyper_cmd->add_option("--report", report_path, "Write the JSON report here instead of stdout");

    std::string in_csv, box_text, pgm_path;
    std::vector<int> res{800, 800};
    int dilation = 1;
    auto* topo_cmd = app.add_subcommand("topology", "Count complement components of a point cloud");
    topo_cmd->add_option("--in", in_csv, "Cloud CSV (as written by the amoeba subcommand)");
    add_polynomial(topo_cmd, c);
    add_grid(topo_cmd, c);
    topo_cmd->add_option("--threads", c.threads, "Worker threads");
    topo_cmd->add_option("--polygon", polygon, "Newton polygon points (default: that of -p)");
    topo_cmd->add_option("--box", box_text, "xmin,xmax,ymin,ymax (default -5,5,-5,5)");
    topo_cmd->add_option("--res", res, "Raster resolution: n or nx ny")->expected(1, 2);
    topo_cmd->add_option("--dilation", dilation, "Chebyshev dilation of occupied cells")->capture_default_str()->check(
        CLI::NonNegativeNumber);
    topo_cmd->add_option("--pgm", pgm_path, "Dump the component labels as a PGM image");
    topo_cmd->add_option("-o,--out", report_path, "Write the JSON report here instead of stdout");

    std::string phi_text, offset_text;
    int nvars = 2, radius = 4;
    auto* verify_cmd = app.add_subcommand("verify", "Check that a polynomial solves the Horn system of phi");
    add_polynomial(verify_cmd, c);
    verify_cmd->add_option("--phi", phi_text, "Ore-Sato coefficient, e.g. \"1/(Gamma(s+1)Gamma(t+1))\"")->required();
    verify_cmd->add_option("--nvars", nvars, "Number of variables")->capture_default_str()->check(CLI::Range(1, 3));
    verify_cmd->add_option("--offset", offset_text, "Monomial offset b, e.g. \"(3,2)\"; searched when omitted");
    verify_cmd->add_option("--search-radius", radius, "Offset search radius")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (amoeba_cmd->parsed()) {
            const ExactPolynomial p = c.polynomial(2);
            const PointCloud cloud = amoeba2d(p, c.grid(), c.sweep());
            SvgStyle style;
            style.clip = Box{c.a, c.b, c.a, c.b};
            style.title = "amoeba of " + to_string(p);
            return emit_cloud(c, cloud, style);
        }
        if (compact_cmd->parsed()) {
            const ExactPolynomial p = c.polynomial(2);
            const PointCloud cloud = compactified_amoeba(p, c.grid(), c.sweep());
            SvgStyle style;
            style.overlay = overlay_of(newton_polytope(normalize_to_polynomial(p)));
            style.title = "compactified amoeba of " + to_string(p);
            return emit_cloud(c, cloud, style);
        }
        if (contour_cmd->parsed()) {
            const ExactPolynomial p = c.polynomial(2);
            cp.reciprocal_sweep = !no_reciprocal;
            if (c.tol > 0) cp.tol = c.tol;
            cp.dedup = !c.raw;
            cp.threads = c.thread_count();
            cp.validate();
            const ContourSystem sys = build_contour_system(p);
            const EliminationResult elim = eliminate(sys);
            if (print_eliminants) {
                std::cerr << "s(y,u) = " << to_string(elim.s_poly, "xyu") << '\n'
                          << "t(x,u) = " << to_string(elim.t_poly, "xyu") << '\n';
            }
            const PointCloud cloud = contour2d(sys, elim, cp);
            SvgStyle style;
            style.clip = Box{};
            style.title = "contour of " + to_string(p);
            return emit_cloud(c, cloud, style);
        }
        if (section_cmd->parsed()) {
            const ExactPolynomial p = c.polynomial(3);
            const PointCloud cloud = amoeba3d_section(p, log_abs_z, c.grid(), n_phi_z, c.sweep());
            SvgStyle style;
            style.clip = Box{c.a, c.b, c.a, c.b};
            style.title = "section log|z| = " + format_double(log_abs_z) + " of " + to_string(p);
            return emit_cloud(c, cloud, style);
        }
        if (hyper_cmd->parsed()) {
            const NewtonPolytope n = convex_hull(parse_point_list(polygon));
            const OreSatoCoefficient phi = ore_sato_from_polytope(n);
            const ExactPolynomial p = hypergeometric_polynomial(n);
            const HornMembershipReport rep = verify_horn_membership(p, phi);
            std::cout << to_string(p) << '\n';
            const std::string json = hyperpoly_report(n, phi, p, rep).dump(2) + "\n";
            if (report_path.empty()) {
                std::cout << json;
            } else {
                write_file(report_path, json);
            }
            return rep.ok ? kExitOk : kExitWarning;
        }
        if (topo_cmd->parsed()) {
            PointCloud cloud;
            ExactPolynomial p(2);
            const bool have_poly = !c.poly.empty() || !c.poly_file.empty();
            if (have_poly) p = c.polynomial(2);
            if (!in_csv.empty()) {
                std::istringstream ss(read_file(in_csv));
                cloud = read_cloud_csv(ss);
            } else if (have_poly) {
                cloud = amoeba2d(p, c.grid(), c.sweep());
            } else {
                throw Error("topology needs --in or a polynomial");
            }
            NewtonPolytope n;
            if (!polygon.empty()) {
                n = convex_hull(parse_point_list(polygon));
            } else if (have_poly) {
                n = newton_polytope(normalize_to_polynomial(p));
            } else {
                throw Error("topology needs --polygon or a polynomial");
            }
            TopologyOptions opt;
            opt.box = parse_box(box_text);
            opt.nx = res[0];
            opt.ny = res.size() > 1 ? res[1] : res[0];
            opt.dilation = dilation;
            opt.threads = c.thread_count();
            const GridRaster raster = rasterize(cloud, opt.box, opt.nx, opt.ny, opt.dilation, opt.threads);
            const ComponentLabels labels = complement_components(raster);
            TopologyReport rep = classify(labels.count, n);
            rep.bounded = labels.bounded;
            rep.unbounded = labels.unbounded;
            if (!pgm_path.empty()) {
                std::ostringstream ss;
                write_label_pgm(ss, raster, labels);
                write_file(pgm_path, ss.str());
            }
            nlohmann::json json = topology_report(rep, opt);
            if (in_csv.empty()) {
                json["sampling"]["grid"] = {{"a", c.a}, {"b", c.b}, {"n_r", c.n_r}, {"n_phi", c.n_phi},
                                            {"radii", c.linear ? "linear" : "logarithmic"}};
            }
            if (report_path.empty()) {
                std::cout << json.dump(2) << '\n';
            } else {
                write_file(report_path, json.dump(2) + "\n");
            }
            if (cloud.empty()) {
                std::cerr << "warning: empty point cloud\n";
                return kExitWarning;
            }
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            const ExactPolynomial p = c.polynomial(nvars);
            const OreSatoCoefficient phi = parse_ore_sato(phi_text, nvars);
            HornMembershipReport rep;
            if (!offset_text.empty()) {
                const auto lists = parse_point_list(offset_text);
                if (lists.size() != 1) throw Error("--offset expects one parenthesised point");
                rep = verify_horn_membership(p, phi, lists[0]);
            } else if (auto found = find_horn_offset(p, phi, radius)) {
                rep = *found;
            } else {
                rep = verify_horn_membership(p, phi);
            }
            nlohmann::json json = {{"verified", rep.ok},
                                   {"offset", rep.offset},
                                   {"checks", rep.checks},
                                   {"max_residual", rep.max_residual.get_str()},
                                   {"phi", to_string(phi)}};
            if (!rep.ok) json["failed"] = {{"var", rep.failed_var}, {"point", rep.failed_point}};
            nlohmann::json ops = nlohmann::json::array();
            for (const auto& op : horn_operators(phi)) {
                ops.push_back({{"var", op.var}, {"P", to_string(op.P)}, {"Q", to_string(op.Q)}});
            }
            json["horn_operators"] = ops;
            std::cout << json.dump(2) << '\n';
            return rep.ok ? kExitOk : kExitWarning;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
