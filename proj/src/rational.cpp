#include "esf/rational.hpp"

#include <cctype>
#include <ostream>

namespace esf {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::syntax: return "syntax";
        case ErrorKind::not_at_origin: return "not-at-origin";
        case ErrorKind::not_isolated: return "not-isolated";
        case ErrorKind::unknown_type: return "unknown-type";
        case ErrorKind::parity: return "parity";
        case ErrorKind::missing_override: return "missing-override";
        case ErrorKind::invariant_violation: return "invariant-violation";
        case ErrorKind::inexact_degree: return "inexact-degree";
        case ErrorKind::missing_invariant: return "missing-invariant";
        case ErrorKind::arity_mismatch: return "arity-mismatch";
        case ErrorKind::not_rank_one: return "not-rank-one";
        case ErrorKind::beta_range: return "beta-range";
        case ErrorKind::domain: return "domain";
        case ErrorKind::config: return "config";
        case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

Rat Rat::from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(ErrorKind::syntax, "empty rational literal");

    auto slash = s.find('/');
    auto check_int = [&](const std::string& part, bool allow_sign) {
        if (part.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (part[0] == '+' || part[0] == '-')) i = 1;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };

    if (slash == std::string::npos) {
        if (!check_int(s, true))
            throw Error(ErrorKind::syntax, "invalid rational literal '" + text + "'");
        return Rat(mpq_class(mpz_class(s)));
    }
    std::string ns = s.substr(0, slash);
    std::string ds = s.substr(slash + 1);
    if (!check_int(ns, true) || !check_int(ds, false))
        throw Error(ErrorKind::syntax, "invalid rational literal '" + text + "'");
    mpz_class num(ns), den(ds);
    if (den == 0) throw Error(ErrorKind::syntax, "zero denominator in '" + text + "'");
    return Rat(num, den);
}

Rat Rat::pow(unsigned long e) const {
    mpq_class r(1);
    mpq_class base = v_;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return Rat(r);
}

std::string Rat::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        s += '/';
        s += v_.get_den().get_str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::ostream& operator<<(std::ostream& os, const ExtNat& e) { return os << e.str(); }

} // namespace esf
