#include "amoeba/hypergeom.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "amoeba/parse.hpp"

namespace amoeba {

// ---------------------------------------------------------------------------
// Linear forms and factored polynomials

Rational LinearForm::evaluate(std::span<const Rational> s) const {
    Rational v = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0) v += coeffs[i] * s[i];
    }
    return v;
}

ExactPolynomial LinearForm::to_polynomial() const {
    const int n = static_cast<int>(coeffs.size());
    ExactPolynomial p = ExactPolynomial::constant(n, constant);
    for (int i = 0; i < n; ++i) {
        if (coeffs[i] == 0) continue;
        Exponent e(n, 0);
        e[i] = 1;
        p.add_term(e, Rational(coeffs[i]));
    }
    return p;
}

LinearForm LinearForm::shifted_back(int var) const {
    LinearForm out = *this;
    out.constant -= coeffs.at(var);
    return out;
}

std::string to_string(const LinearForm& form, std::string_view variables) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < form.coeffs.size(); ++i) {
        const int a = form.coeffs[i];
        if (a == 0) continue;
        if (a < 0) {
            out << '-';
        } else if (!first) {
            out << '+';
        }
        if (a != 1 && a != -1) out << (a < 0 ? -a : a);
        out << variables.at(i);
        first = false;
    }
    if (sgn(form.constant) != 0 || first) {
        if (sgn(form.constant) < 0) {
            out << '-';
        } else if (!first) {
            out << '+';
        }
        out << Rational(abs(form.constant)).get_str();
    }
    return out.str();
}

Rational FactoredPolynomial::evaluate(std::span<const Rational> s) const {
    Rational v = scale;
    for (const auto& f : factors) v *= f.evaluate(s);
    return v;
}

ExactPolynomial FactoredPolynomial::expand(int nvars) const {
    ExactPolynomial p = ExactPolynomial::constant(nvars, scale);
    for (const auto& f : factors) p = p * f.to_polynomial();
    return p;
}

std::string to_string(const FactoredPolynomial& p, std::string_view variables) {
    std::ostringstream out;
    if (p.factors.empty()) return p.scale.get_str();
    if (p.scale == -1) {
        out << '-';
    } else if (p.scale != 1) {
        out << p.scale.get_str() << '*';
    }
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
        if (i) out << '*';
        out << '(' << to_string(p.factors[i], variables) << ')';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Ore-Sato coefficients

void OreSatoCoefficient::validate() const {
    if (nvars <= 0) throw DomainError("Ore-Sato coefficient needs at least one variable");
    for (const auto& f : factors) {
        if (static_cast<int>(f.direction.size()) != nvars) throw DomainError("Gamma factor of wrong dimension");
        if (std::all_of(f.direction.begin(), f.direction.end(), [](int a) { return a == 0; })) {
            throw DomainError("Gamma factor with a zero direction");
        }
        if (f.sign != 1 && f.sign != -1) throw DomainError("Gamma factor exponent must be +1 or -1");
    }
}

std::string to_string(const OreSatoCoefficient& phi, std::string_view variables) {
    std::ostringstream num, den;
    int n_num = 0, n_den = 0;
    for (const auto& f : phi.factors) {
        std::ostringstream& out = f.sign > 0 ? num : den;
        int& count = f.sign > 0 ? n_num : n_den;
        if (count++) out << '*';
        out << "Gamma(" << to_string(f.argument(), variables) << ')';
    }
    std::string s = n_num ? num.str() : "1";
    if (n_den == 1) s += "/" + den.str();
    if (n_den > 1) s += "/(" + den.str() + ")";
    return s;
}

namespace {

class GammaParser {
public:
    GammaParser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

    std::vector<GammaFactor> parse() {
        auto out = product();
        skip();
        if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
        return out;
    }

private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool starts(std::string_view word) const { return text_.substr(pos_).starts_with(word); }

    bool item_ahead() {
        skip();
        return starts("Gamma(") || starts("G(") || starts("\xCE\x93(") || starts("(") || starts("1");
    }

    static void invert(std::vector<GammaFactor>& fs) {
        for (auto& f : fs) f.sign = -f.sign;
    }

    std::vector<GammaFactor> product() {
        std::vector<GammaFactor> out;
        bool first = true;
        while (true) {
            skip();
            bool divide = false;
            if (pos_ < text_.size() && (text_[pos_] == '*' || text_[pos_] == '/')) {
                if (first) throw ParseError("expected a factor", pos_);
                divide = text_[pos_] == '/';
                ++pos_;
            } else if (!item_ahead()) {
                if (first) throw ParseError("expected a factor", pos_);
                break;
            }
            auto fs = item();
            if (divide) invert(fs);
            out.insert(out.end(), fs.begin(), fs.end());
            first = false;
        }
        return out;
    }

    std::vector<GammaFactor> item() {
        skip();
        std::vector<GammaFactor> fs;
        if (starts("Gamma(") || starts("G(") || starts("\xCE\x93(")) {
            pos_ = text_.find('(', pos_) + 1;
            const std::size_t open = pos_;
            int depth = 1;
            while (pos_ < text_.size() && depth > 0) {
                if (text_[pos_] == '(') ++depth;
                if (text_[pos_] == ')') --depth;
                ++pos_;
            }
            if (depth != 0) throw ParseError("unbalanced parentheses", open);
            fs.push_back(linear_factor(text_.substr(open, pos_ - 1 - open), open));
        } else if (starts("(")) {
            ++pos_;
            fs = product();
            skip();
            if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
        } else if (starts("1")) {
            ++pos_;
        } else {
            throw ParseError("expected Gamma(...), '(' or 1", pos_);
        }
        skip();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip();
            const bool paren = pos_ < text_.size() && text_[pos_] == '(';
            if (paren) ++pos_;
            int sign = 1;
            if (pos_ < text_.size() && text_[pos_] == '-') {
                sign = -1;
                ++pos_;
            }
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_ || pos_ - start > 3) throw ParseError("expected a small integer power", start);
            const int power = std::stoi(std::string(text_.substr(start, pos_ - start)));
            if (paren) {
                if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
                ++pos_;
            }
            std::vector<GammaFactor> repeated;
            for (int k = 0; k < power; ++k) repeated.insert(repeated.end(), fs.begin(), fs.end());
            if (sign < 0) invert(repeated);
            fs = std::move(repeated);
        }
        return fs;
    }

    GammaFactor linear_factor(std::string_view body, std::size_t at) const {
        ExactPolynomial p(nvars_);
        try {
            p = parse_polynomial(body, nvars_, kIndexVariables);
        } catch (const ParseError& e) {
            throw ParseError(std::string("bad Gamma argument: ") + e.what(), at + e.position());
        }
        GammaFactor f;
        f.sign = 1;
        f.direction.assign(nvars_, 0);
        f.shift = 0;
        for (const auto& [e, c] : p.terms()) {
            int total = 0, which = -1;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] < 0 || e[i] > 1) throw ParseError("Gamma argument must be affine", at);
                total += e[i];
                if (e[i]) which = i;
            }
            if (total == 0) {
                f.shift = c;
            } else if (total == 1 && c.get_den() == 1 && c.get_num().fits_sint_p()) {
                f.direction[which] = static_cast<int>(c.get_num().get_si());
            } else {
                throw ParseError("Gamma argument must be affine with integer slopes", at);
            }
        }
        return f;
    }

    std::string_view text_;
    int nvars_;
    std::size_t pos_ = 0;
};

/// Writes form = lambda * N with N integer and primitive, lambda > 0; returns
/// lambda. The orientation of the form is kept.
Rational normalize(LinearForm& form) {
    const Integer den = form.constant.get_den();
    Integer g = abs(form.constant.get_num());
    for (int a : form.coeffs) g = gcd(g, Integer(a < 0 ? -a : a) * den);
    if (g == 0) return Rational(1);
    Rational factor(den, g);
    factor.canonicalize();
    for (int& a : form.coeffs) a = static_cast<int>(Rational(Rational(a) * factor).get_num().get_si());
    form.constant *= factor;
    return Rational(1) / factor;
}

LinearForm negated(LinearForm f) {
    for (int& a : f.coeffs) a = -a;
    f.constant = -f.constant;
    return f;
}

void add_rising(std::vector<LinearForm>& into, const LinearForm& base, int from, int to) {
    for (int l = from; l <= to; ++l) {
        LinearForm f = base;
        f.constant += l;
        into.push_back(std::move(f));
    }
}

}  // namespace

OreSatoCoefficient parse_ore_sato(std::string_view text, int nvars) {
    if (nvars <= 0 || nvars > static_cast<int>(kIndexVariables.size())) {
        throw DomainError("unsupported variable count " + std::to_string(nvars));
    }
    OreSatoCoefficient phi;
    phi.nvars = nvars;
    phi.factors = GammaParser(text, nvars).parse();
    phi.validate();
    return phi;
}

CoefficientRatio coefficient_ratio(const OreSatoCoefficient& phi, int var) {
    phi.validate();
    if (var < 0 || var >= phi.nvars) throw DomainError("ratio variable out of range");
    std::vector<LinearForm> num, den;
    for (const auto& f : phi.factors) {
        const int k = f.direction[var];
        if (k == 0) continue;
        const LinearForm u = f.argument();
        // Gamma(u+k)/Gamma(u) = u(u+1)...(u+k-1); for k < 0 it is 1/((u-1)...(u-|k|)).
        const bool up = (k > 0) == (f.sign > 0);
        auto& target = up ? num : den;
        if (k > 0) {
            add_rising(target, u, 0, k - 1);
        } else {
            add_rising(target, u, k, -1);
        }
    }

    CoefficientRatio out;
    Rational scale(1);
    for (auto& f : num) scale *= normalize(f);
    for (auto& f : den) scale /= normalize(f);

    // Cancel common linear factors.
    std::vector<bool> den_used(den.size(), false);
    for (auto& f : num) {
        bool cancelled = false;
        for (std::size_t i = 0; i < den.size() && !cancelled; ++i) {
            if (den_used[i]) continue;
            if (den[i] == f) {
                cancelled = true;
            } else if (den[i] == negated(f)) {
                scale = -scale;
                cancelled = true;
            }
            den_used[i] = cancelled;
        }
        if (!cancelled) out.numerator.factors.push_back(f);
    }
    for (std::size_t i = 0; i < den.size(); ++i) {
        if (!den_used[i]) out.denominator.factors.push_back(den[i]);
    }
    scale.canonicalize();
    out.numerator.scale = Rational(scale.get_num());
    out.denominator.scale = Rational(scale.get_den());
    return out;
}

std::vector<HornOperatorPair> horn_operators(const OreSatoCoefficient& phi) {
    std::vector<HornOperatorPair> out;
    for (int j = 0; j < phi.nvars; ++j) {
        CoefficientRatio r = coefficient_ratio(phi, j);
        HornOperatorPair pair;
        pair.var = j;
        pair.P = std::move(r.numerator);
        pair.Q.scale = r.denominator.scale;
        for (const auto& f : r.denominator.factors) pair.Q.factors.push_back(f.shifted_back(j));
        out.push_back(std::move(pair));
    }
    return out;
}

OreSatoCoefficient ore_sato_from_polytope(const NewtonPolytope& polytope, std::span<const Rational> shifts) {
    if (shifts.size() != polytope.facets.size()) throw DomainError("one shift per facet is required");
    OreSatoCoefficient phi;
    phi.nvars = polytope.dim;
    for (std::size_t j = 0; j < polytope.facets.size(); ++j) {
        const Facet& f = polytope.facets[j];
        long g = 0;
        for (int a : f.normal) g = std::gcd(g, static_cast<long>(a < 0 ? -a : a));
        if (g != 1) throw DomainError("facet normal is not primitive");
        GammaFactor factor;
        for (int a : f.normal) factor.direction.push_back(-a);
        factor.shift = Rational(1) - shifts[j];
        factor.sign = -1;
        phi.factors.push_back(std::move(factor));
    }
    phi.validate();
    return phi;
}

OreSatoCoefficient ore_sato_from_polytope(const NewtonPolytope& polytope) {
    std::vector<Rational> shifts;
    for (const auto& f : polytope.facets) shifts.emplace_back(-f.support);
    return ore_sato_from_polytope(polytope, shifts);
}

ExactPolynomial hypergeometric_polynomial(const NewtonPolytope& polytope) {
    std::vector<Integer> denominators;
    Integer lcm_all(1);
    for (const auto& s : polytope.lattice_points) {
        Integer d(1);
        for (const auto& f : polytope.facets) {
            long slack = f.support;
            for (int i = 0; i < polytope.dim; ++i) slack -= static_cast<long>(f.normal[i]) * s[i];
            if (slack < 0) throw DomainError("lattice point outside its polytope");
            Integer fact;
            mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(slack));
            d *= fact;
        }
        lcm_all = lcm(lcm_all, d);
        denominators.push_back(std::move(d));
    }
    ExactPolynomial p(polytope.dim);
    for (std::size_t k = 0; k < polytope.lattice_points.size(); ++k) {
        p.add_term(polytope.lattice_points[k], Rational(Integer(lcm_all / denominators[k])));
    }
    return p;
}

namespace {

HornMembershipReport check_recurrences(const ExactPolynomial& p, const std::vector<CoefficientRatio>& ratios,
                                       const Exponent& offset, bool stop_early) {
    const int n = p.nvars();
    HornMembershipReport report;
    report.offset = offset;
    std::vector<Rational> s(n);
    for (int j = 0; j < n; ++j) {
        std::set<Exponent, ColexLess> points;
        for (const auto& [e, c] : p.terms()) {
            points.insert(e);
            Exponent down = e;
            --down[j];
            points.insert(down);
        }
        for (const Exponent& pt : points) {
            for (int i = 0; i < n; ++i) s[i] = pt[i] - offset[i];
            Exponent up = pt;
            ++up[j];
            const Rational lhs = ratios[j].numerator.evaluate(s) * p.coefficient(pt);
            const Rational rhs = ratios[j].denominator.evaluate(s) * p.coefficient(up);
            ++report.checks;
            const Rational diff = abs(lhs - rhs);
            if (diff > report.max_residual) report.max_residual = diff;
            if (sgn(diff) != 0 && report.ok) {
                report.ok = false;
                report.failed_var = j;
                report.failed_point = pt;
                if (stop_early) return report;
            }
        }
    }
    return report;
}

std::vector<CoefficientRatio> all_ratios(const OreSatoCoefficient& phi) {
    std::vector<CoefficientRatio> ratios;
    for (int j = 0; j < phi.nvars; ++j) ratios.push_back(coefficient_ratio(phi, j));
    return ratios;
}

}  // namespace

HornMembershipReport verify_horn_membership(const ExactPolynomial& p, const OreSatoCoefficient& phi,
                                            const Exponent& offset) {
    if (p.nvars() != phi.nvars) throw DomainError("polynomial and Ore-Sato coefficient differ in dimension");
    const Exponent b = offset.empty() ? Exponent(p.nvars(), 0) : offset;
    if (static_cast<int>(b.size()) != p.nvars()) throw DomainError("offset has wrong dimension");
    return check_recurrences(p, all_ratios(phi), b, false);
}

std::optional<HornMembershipReport> find_horn_offset(const ExactPolynomial& p, const OreSatoCoefficient& phi,
                                                     int radius) {
    if (p.nvars() != phi.nvars) throw DomainError("polynomial and Ore-Sato coefficient differ in dimension");
    const int n = p.nvars();
    const auto ratios = all_ratios(phi);
    for (int r = 0; r <= radius; ++r) {
        // Offsets of max-norm exactly r, in lexicographic order.
        Exponent b(n, -r);
        while (true) {
            const int norm = std::transform_reduce(b.begin(), b.end(), 0, [](int x, int y) { return std::max(x, y); },
                                                   [](int v) { return v < 0 ? -v : v; });
            if (norm == r && check_recurrences(p, ratios, b, true).ok) {
                return check_recurrences(p, ratios, b, false);
            }
            int i = n - 1;
            while (i >= 0 && b[i] == r) {
                b[i] = -r;
                --i;
            }
            if (i < 0) break;
            ++b[i];
        }
    }
    return std::nullopt;
}

}  // namespace amoeba
