#include "amoeba/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "amoeba/errors.hpp"
#include "amoeba/parallel.hpp"
#include "amoeba/parse.hpp"

namespace amoeba {

unsigned default_thread_count() {
    if (const char* env = std::getenv("AMOEBA_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

void write_cloud_csv(std::ostream& out, const PointCloud& cloud) {
    const bool with_u = !cloud.parameter.empty();
    out << (cloud.space == Space::moment ? "mu_1,mu_2" : "log_abs_x,log_abs_y") << (with_u ? ",u" : "") << '\n';
    for (std::size_t k = 0; k < cloud.points.size(); ++k) {
        out << format_double(cloud.points[k][0]) << ',' << format_double(cloud.points[k][1]);
        if (with_u) out << ',' << format_double(cloud.parameter[k]);
        out << '\n';
    }
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_double(const std::string& s, std::size_t line) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') throw ParseError("bad number '" + s + "' on CSV line " + std::to_string(line), 0);
    return v;
}

Rational json_rational(const nlohmann::json& v) {
    if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        const ExactPolynomial c = parse_polynomial(v.get<std::string>(), 1);
        if (c.size() != 1 || c.terms().begin()->first[0] != 0) throw ParseError("coefficient is not a number", 0);
        return c.terms().begin()->second;
    }
    throw ParseError("coefficient must be an integer or a string", 0);
}

}  // namespace

PointCloud read_cloud_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty CSV input", 0);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    PointCloud cloud;
    bool with_u = false;
    if (line == "log_abs_x,log_abs_y" || line == "log_abs_x,log_abs_y,u") {
        cloud.space = Space::log;
        with_u = line.size() > 19;
    } else if (line == "mu_1,mu_2" || line == "mu_1,mu_2,u") {
        cloud.space = Space::moment;
        with_u = line.size() > 9;
    } else {
        throw ParseError("unrecognised CSV header '" + line + "'", 0);
    }
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != (with_u ? 3u : 2u)) throw ParseError("wrong field count on CSV line " + std::to_string(lineno), 0);
        cloud.points.push_back({parse_double(f[0], lineno), parse_double(f[1], lineno)});
        if (with_u) cloud.parameter.push_back(parse_double(f[2], lineno));
    }
    return cloud;
}

void write_witness_csv(std::ostream& out, const PointCloud& cloud) {
    const bool three = cloud.witness_dim == 3;
    out << "re_x,im_x,re_y,im_y";
    if (three) out << (cloud.parameter.empty() ? ",re_z,im_z" : ",re_u,im_u");
    out << ",residual\n";
    for (const Witness& w : cloud.witnesses) {
        for (int i = 0; i < (three ? 3 : 2); ++i) {
            out << format_double(w.zero[i].real()) << ',' << format_double(w.zero[i].imag()) << ',';
        }
        out << format_double(w.residual) << '\n';
    }
}

ExactPolynomial parse_polynomial_json(std::string_view text, int nvars) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
    if (!doc.is_array()) throw ParseError("polynomial JSON must be an array of terms", 0);
    ExactPolynomial p(nvars);
    for (const auto& term : doc) {
        if (!term.is_object() || !term.contains("exp") || !term.contains("num")) {
            throw ParseError("each term needs \"exp\" and \"num\"", 0);
        }
        const auto& exp = term["exp"];
        if (!exp.is_array() || static_cast<int>(exp.size()) != nvars) {
            throw ParseError("exponent length must be " + std::to_string(nvars), 0);
        }
        Exponent e;
        for (const auto& v : exp) {
            if (!v.is_number_integer()) throw ParseError("exponents must be integers", 0);
            e.push_back(v.get<int>());
        }
        const Rational num = json_rational(term["num"]);
        const Rational den = term.contains("den") ? json_rational(term["den"]) : Rational(1);
        if (sgn(den) == 0) throw ParseError("zero denominator", 0);
        p.add_term(e, num / den);
    }
    if (p.is_zero()) throw ParseError("polynomial is zero", 0);
    return p;
}

ExactPolynomial parse_polynomial_any(std::string_view text, int nvars) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') return parse_polynomial_json(text, nvars);
    return parse_polynomial(text, nvars);
}

nlohmann::json to_json(const Facet& facet) {
    return {{"normal", facet.normal}, {"m", facet.support}};
}

nlohmann::json to_json(const GammaFactor& factor) {
    return {{"direction", factor.direction},
            {"shift", factor.shift.get_str()},
            {"sign", factor.sign},
            {"argument", to_string(factor.argument())}};
}

nlohmann::json hyperpoly_report(const NewtonPolytope& polytope, const OreSatoCoefficient& phi,
                                const ExactPolynomial& p, const HornMembershipReport& verification) {
    nlohmann::json normals = nlohmann::json::array(), m = nlohmann::json::array();
    for (const Facet& f : polytope.facets) {
        normals.push_back(f.normal);
        m.push_back(f.support);
    }
    nlohmann::json factors = nlohmann::json::array();
    for (const GammaFactor& g : phi.factors) factors.push_back(to_json(g));
    nlohmann::json ops = nlohmann::json::array();
    for (const HornOperatorPair& op : horn_operators(phi)) {
        ops.push_back({{"var", op.var}, {"P", to_string(op.P)}, {"Q", to_string(op.Q)}});
    }
    return {{"polynomial", to_string(p)},
            {"terms", p.size()},
            {"normals", normals},
            {"m", m},
            {"phi", to_string(phi)},
            {"phi_factors", factors},
            {"horn_operators", ops},
            {"verified", verification.ok},
            {"checks", verification.checks}};
}

nlohmann::json topology_report(const TopologyReport& report, const TopologyOptions& options) {
    return {{"count", report.count},
            {"bounded", report.bounded},
            {"unbounded", report.unbounded},
            {"vertices", report.vertices},
            {"lattice_points", report.lattice_points},
            {"classification", to_string(report.classification)},
            {"sampling",
             {{"box", {options.box.x_min, options.box.x_max, options.box.y_min, options.box.y_max}},
              {"resolution", {options.nx, options.ny}},
              {"dilation", options.dilation}}}};
}

void write_label_pgm(std::ostream& out, const GridRaster& raster, const ComponentLabels& labels) {
    out << "P5\n" << raster.nx << ' ' << raster.ny << "\n255\n";
    for (int j = raster.ny - 1; j >= 0; --j) {
        for (int i = 0; i < raster.nx; ++i) {
            const int l = labels.labels[static_cast<std::size_t>(j) * raster.nx + i];
            const unsigned char v = l < 0 ? 0 : static_cast<unsigned char>(64 + (l * 37) % 192);
            out.put(static_cast<char>(v));
        }
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace amoeba
