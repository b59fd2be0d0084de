#include "esf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>

namespace esf {

namespace {

constexpr std::uint64_t kMaxExponent = 1u << 20;

std::uint32_t checked_exp_add(std::uint32_t a, std::uint32_t b) {
    std::uint64_t s = std::uint64_t(a) + b;
    if (s > kMaxExponent)
        throw Error(ErrorKind::internal, "monomial exponent exceeds supported range");
    return static_cast<std::uint32_t>(s);
}

} // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
    return Monomial{checked_exp_add(a.ex, b.ex), checked_exp_add(a.ey, b.ey)};
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a))
        throw Error(ErrorKind::internal, "monomial quotient of non-divisible monomials");
    return Monomial{a.ex - b.ex, a.ey - b.ey};
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::string s;
    if (ex > 0) {
        s += "x";
        if (ex > 1) s += "^" + std::to_string(ex);
    }
    if (ey > 0) {
        if (!s.empty()) s += "*";
        s += "y";
        if (ey > 1) s += "^" + std::to_string(ey);
    }
    return s;
}

Poly::Poly(Rat constant) {
    if (!constant.is_zero()) terms_.push_back({Monomial{0, 0}, std::move(constant)});
}

Poly Poly::monomial(Monomial m, Rat coeff) {
    Poly p;
    if (!coeff.is_zero()) p.terms_.push_back({m, std::move(coeff)});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    Poly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return LocalOrder::greater(a.first, b.first);
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.second.is_zero(); });
    terms_ = std::move(out);
}

const Poly::Term& Poly::leading() const {
    if (terms_.empty())
        throw Error(ErrorKind::internal, "leading term of the zero polynomial");
    return terms_.front();
}

Rat Poly::coeff(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.first == m) return t.second;
    return Rat(0);
}

ExtNat Poly::order_of_vanishing() const {
    if (terms_.empty()) return ExtNat::infinite();
    // leading term has minimal total degree by the local order
    return ExtNat::finite(terms_.front().first.total_degree());
}

std::uint64_t Poly::max_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
    return d;
}

std::uint32_t Poly::degree_in_x() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.ex);
    return d;
}

std::uint32_t Poly::degree_in_y() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.ey);
    return d;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    // merge of two descending term lists
    Poly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = LocalOrder::cmp(a.terms_[i].first, b.terms_[j].first);
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            Rat s = a.terms_[i].second + b.terms_[j].second;
            if (!s.is_zero()) r.terms_.push_back({a.terms_[i].first, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    std::map<Monomial, Rat, LocalOrder> acc;
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            Monomial m = ta.first * tb.first;
            Rat c = ta.second * tb.second;
            auto [it, inserted] = acc.emplace(m, c);
            if (!inserted) it->second += c;
        }
    Poly r;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    if (c.is_zero()) return Poly();
    Poly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

Poly Poly::mul_monomial(const Monomial& m, const Rat& c) const {
    if (c.is_zero()) return Poly();
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.first * m, t.second * c});
    return r;
}

Poly Poly::pow(std::uint64_t e) const {
    Poly r = Poly::one();
    Poly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Poly Poly::swap_xy() const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({Monomial{t.first.ey, t.first.ex}, t.second});
    return from_terms(std::move(ts));
}

Rat Poly::evaluate(const Rat& x, const Rat& y) const {
    Rat acc(0);
    for (const auto& t : terms_)
        acc += t.second * x.pow(t.first.ex) * y.pow(t.first.ey);
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Rat inv = Rat(1) / leading_coeff();
    return scaled(inv);
}

Poly Poly::content_normalized() const {
    if (is_zero()) return *this;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& t : terms_)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.den().get_mpz_t());
    for (const auto& t : terms_) {
        mpz_class n = t.second.num() * (den_lcm / t.second.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd); // positive
    return scaled(scale);
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c.abs();
        if (first) {
            if (c.sign() < 0) s += "-";
            first = false;
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        if (m.is_one()) {
            s += a.str();
        } else {
            if (!(a == Rat(1))) {
                s += a.str();
                s += "*";
            }
            s += m.str();
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly partial_derivative(const Poly& f, Var v) {
    std::vector<Poly::Term> ts;
    for (const auto& [m, c] : f.terms()) {
        if (v == Var::x) {
            if (m.ex == 0) continue;
            ts.push_back({Monomial{m.ex - 1, m.ey}, c * Rat(long(m.ex))});
        } else {
            if (m.ey == 0) continue;
            ts.push_back({Monomial{m.ex, m.ey - 1}, c * Rat(long(m.ey))});
        }
    }
    return Poly::from_terms(std::move(ts));
}

// --- parser ------------------------------------------------------------

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw Error(ErrorKind::syntax,
                    msg + " at position " + std::to_string(at), at);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            fail(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    mpz_class parse_natural() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number", start);
        return mpz_class(text.substr(start, pos - start));
    }

    std::uint32_t parse_exponent() {
        skip_ws();
        std::size_t start = pos;
        mpz_class e = parse_natural();
        if (e > kMaxExponent) fail("exponent too large", start);
        return static_cast<std::uint32_t>(e.get_ui());
    }

    // expression = [sign] term { ("+"|"-") term }
    Poly parse_expression() {
        skip_ws();
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        Poly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (accept('+')) acc += parse_term();
            else if (accept('-')) acc -= parse_term();
            else break;
        }
        return acc;
    }

    // term = factor { "*" factor }
    Poly parse_term() {
        Poly acc = parse_factor();
        while (accept('*')) acc *= parse_factor();
        return acc;
    }

    // factor = base [ "^" natural ]
    Poly parse_factor() {
        Poly base = parse_base();
        if (accept('^')) {
            std::uint32_t e = parse_exponent();
            return base.pow(e);
        }
        return base;
    }

    // base = rational | "x" | "y" | "(" expression ")"
    Poly parse_base() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Poly inner = parse_expression();
            expect(')');
            return inner;
        }
        if (c == 'x') {
            ++pos;
            return Poly::variable_x();
        }
        if (c == 'y') {
            ++pos;
            return Poly::variable_y();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = parse_natural();
            if (accept('/')) {
                std::size_t dpos = pos;
                mpz_class den = parse_natural();
                if (den == 0) fail("zero denominator", dpos);
                return Poly(Rat(num, den));
            }
            return Poly(Rat(num));
        }
        fail(std::string("unexpected character '") + c + "'", pos);
    }
};

} // namespace

Poly parse_poly(const std::string& text) {
    Parser p(text);
    p.skip_ws();
    if (p.pos >= text.size())
        throw Error(ErrorKind::syntax, "empty polynomial text", 0);
    Poly result = p.parse_expression();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail("trailing input", p.pos);
    return result;
}

} // namespace esf
