#include "amoeba/parse.hpp"

#include <cctype>
#include <sstream>

namespace amoeba {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string digits() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    /// Unsigned integer, fraction or decimal literal.
    Rational number() {
        const std::size_t start = pos_;
        std::string whole = digits();
        Rational value;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            const std::string frac = digits();
            if (whole.empty() && frac.empty()) throw ParseError("malformed decimal", start);
            Integer num(whole.empty() ? "0" : whole);
            Integer den(1);
            for (char ch : frac) {
                num = num * 10 + (ch - '0');
                den *= 10;
            }
            value = Rational(num, den);
        } else {
            if (whole.empty()) throw ParseError("expected a number", start);
            value = Rational(Integer(whole));
        }
        if (peek() == '/') {
            ++pos_;
            const std::string den = digits();
            if (den.empty()) fail("expected a denominator");
            Integer d(den);
            if (d == 0) fail("zero denominator");
            value /= Rational(d);
        }
        value.canonicalize();
        return value;
    }

    int signed_integer() {
        bool paren = accept('(');
        int sign = 1;
        if (accept('-')) {
            sign = -1;
        } else {
            accept('+');
        }
        const std::size_t start = pos_;
        const std::string d = digits();
        if (d.empty()) throw ParseError("expected an integer exponent", start);
        if (d.size() > 6) throw ParseError("exponent too large", start);
        if (paren) expect(')');
        return sign * std::stoi(d);
    }

    std::size_t pos() const { return pos_; }
    bool at_raw(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
    void advance() { ++pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ExactPolynomial parse_polynomial(std::string_view text, int nvars, std::string_view variables) {
    if (nvars <= 0 || nvars > static_cast<int>(variables.size())) {
        throw DomainError("unsupported variable count " + std::to_string(nvars));
    }
    Cursor in(text);
    ExactPolynomial p(nvars);
    if (in.done()) in.fail("empty polynomial");

    bool first = true;
    while (!in.done()) {
        int sign = 1;
        if (in.accept('+')) {
        } else if (in.accept('-')) {
            sign = -1;
        } else if (!first) {
            in.fail("expected '+' or '-'");
        }
        first = false;

        Rational coeff(sign);
        Exponent e(nvars, 0);
        bool have_factor = false;
        while (true) {
            const char c = in.peek();
            if (have_factor && c == '*') {
                in.advance();
                const char next = in.peek();
                if (!(std::isdigit(static_cast<unsigned char>(next)) || next == '.' ||
                      std::isalpha(static_cast<unsigned char>(next)))) {
                    in.fail("expected a factor after '*'");
                }
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                coeff *= in.number();
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                const std::size_t at = in.pos();
                const auto idx = variables.find(c);
                if (idx == std::string_view::npos) throw ParseError(std::string("unknown variable '") + c + "'", at);
                if (static_cast<int>(idx) >= nvars) {
                    throw ParseError(std::string("variable '") + c + "' outside the " + std::to_string(nvars) +
                                         "-variable ring",
                                     at);
                }
                in.advance();
                int power = 1;
                if (in.accept('^')) power = in.signed_integer();
                e[idx] += power;
            } else {
                break;
            }
            have_factor = true;
        }
        if (!have_factor) in.fail("expected a term");
        p.add_term(e, coeff);
    }
    if (p.is_zero()) throw ParseError("zero polynomial after merging terms", text.size());
    return p;
}

std::string to_string(const ExactPolynomial& p, std::string_view variables) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = sgn(c) < 0;
        const Rational mag = abs(c);
        if (negative) {
            out << '-';
        } else if (!first) {
            out << '+';
        }
        first = false;

        bool constant = true;
        for (int v : e) constant = constant && v == 0;
        bool need_star = false;
        if (mag != 1 || constant) {
            out << mag.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << '*';
            out << variables.at(i);
            if (e[i] != 1) out << '^' << e[i];
            need_star = true;
        }
    }
    return out.str();
}

std::vector<Exponent> parse_point_list(std::string_view text) {
    Cursor in(text);
    std::vector<Exponent> points;
    while (!in.done()) {
        if (!points.empty()) in.expect(',');
        in.expect('(');
        Exponent pt;
        do {
            int sign = 1;
            if (in.accept('-')) {
                sign = -1;
            } else {
                in.accept('+');
            }
            const std::size_t start = in.pos();
            const std::string d = in.digits();
            if (d.empty() || d.size() > 9) throw ParseError("expected an integer coordinate", start);
            pt.push_back(sign * std::stoi(d));
        } while (in.accept(','));
        in.expect(')');
        if (!points.empty() && pt.size() != points.front().size()) in.fail("points of mixed dimension");
        points.push_back(std::move(pt));
    }
    if (points.empty()) throw ParseError("empty point list", 0);
    return points;
}

}  // namespace amoeba
