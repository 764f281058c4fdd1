#include <cctype>
#include <optional>

#include "canonform/domain.hpp"

namespace canonform {

namespace {

class ScalarReader {
public:
    explicit ScalarReader(std::string_view text) : text_(text) {}

    bool done() const { return pos_ == text_.size(); }
    std::size_t column() const { return pos_ + 1; }

    char peek() const { return done() ? '\0' : text_[pos_]; }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    std::optional<Integer> digits() {
        std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) return std::nullopt;
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    /// int ('/' posint)?
    std::optional<Rational> unsigned_rational(bool& had_slash) {
        auto num = digits();
        if (!num) return std::nullopt;
        if (!accept('/')) return Rational(*num);
        had_slash = true;
        auto den = digits();
        if (!den) fail("expected denominator after '/'");
        if (*den == 0) fail("zero denominator");
        Rational q(*num, *den);
        q.canonicalize();
        return q;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(ErrorKind::Parse, what + " in scalar '" + std::string(text_) + "'", 0,
                         column());
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

struct Parsed {
    Polynomial value;
    bool had_slash = false;
    bool had_x = false;
    int terms = 0;
};

// term := coef | coef '*' 'x' ('^' k)? | 'x' ('^' k)?
Parsed parse_polynomial(std::string_view text) {
    ScalarReader in(text);
    Parsed out;
    if (in.done()) in.fail("empty scalar");
    bool first = true;
    while (!in.done()) {
        bool negative = false;
        if (in.accept('-'))
            negative = true;
        else if (!in.accept('+') && !first)
            in.fail("expected '+' or '-'");
        first = false;

        Rational coef = 1;
        bool has_coef = false;
        if (auto c = in.unsigned_rational(out.had_slash)) {
            coef = *c;
            has_coef = true;
        }
        std::size_t degree = 0;
        bool want_x = !has_coef || in.peek() == '*';
        if (has_coef && in.peek() == '*') in.accept('*');
        if (want_x) {
            if (!in.accept('x')) in.fail(has_coef ? "expected 'x' after '*'" : "expected a term");
            out.had_x = true;
            degree = 1;
            if (in.accept('^')) {
                auto k = in.digits();
                if (!k) in.fail("expected exponent after '^'");
                if (!k->fits_ulong_p() || *k > 100000) in.fail("exponent too large");
                degree = k->get_ui();
            }
        }
        if (negative) coef = -coef;
        out.value += Polynomial::monomial(coef, degree);
        ++out.terms;
    }
    return out;
}

}  // namespace

Elem parse_scalar(std::string_view text, Ring ring) {
    Parsed p = parse_polynomial(text);
    const std::string shown(text);
    switch (ring) {
        case Ring::QX: return Elem(std::move(p.value));
        case Ring::Q:
            if (p.had_x)
                throw ParseError(ErrorKind::RingMismatch, "'" + shown + "' is not an element of Q");
            if (p.terms != 1) throw ParseError(ErrorKind::Parse, "malformed rational '" + shown + "'");
            return Elem(p.value.coeff(0));
        case Ring::Z:
            if (p.had_x || p.had_slash)
                throw ParseError(ErrorKind::RingMismatch, "'" + shown + "' is not an element of Z");
            if (p.terms != 1) throw ParseError(ErrorKind::Parse, "malformed integer '" + shown + "'");
            return Elem(Integer(p.value.coeff(0).get_num()));
    }
    throw Error(ErrorKind::Internal, "bad ring tag");
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        Rational mag = abs(c[k]);
        if (c[k] < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += 'x';
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::string to_string(const Elem& value) {
    switch (value.ring()) {
        case Ring::Z: return value.as_int().get_str();
        case Ring::Q: return to_string(value.as_rat());
        case Ring::QX: return to_string(value.as_poly());
    }
    return "?";
}

}  // namespace canonform
