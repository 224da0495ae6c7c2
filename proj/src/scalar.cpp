#include "cs/scalar.hpp"

#include <cctype>
#include <ostream>

namespace cs {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

mpq_class parse_rational_token(const std::string& tok, const std::string& whole) {
    // [sign] digits [ '/' digits ]
    if (tok.empty() || tok == "+" || tok == "-")
        throw ParseError("malformed scalar '" + whole + "'");
    std::size_t pos = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
    std::string num, den;
    std::string* cur = &num;
    for (; pos < tok.size(); ++pos) {
        char c = tok[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            cur->push_back(c);
        } else if (c == '/' && cur == &num) {
            cur = &den;
        } else {
            throw ParseError("malformed scalar '" + whole + "'");
        }
    }
    if (num.empty() || (cur == &den && den.empty()))
        throw ParseError("malformed scalar '" + whole + "'");
    mpz_class n(num);
    if (tok[0] == '-') n = -n;
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(den);
    if (d == 0) throw ParseError("zero denominator in '" + whole + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

std::string rat_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

std::string Scalar::str() const {
    if (im_ == 0) return rat_str(re_);
    std::string out = rat_str(re_);
    if (im_ > 0)
        out += "+" + rat_str(im_) + "i";
    else
        out += "-" + rat_str(mpq_class(-im_)) + "i";
    return out;
}

Scalar Scalar::parse(const std::string& text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty scalar");
    if (s.back() == 'i') {
        std::string body = s.substr(0, s.size() - 1);
        std::size_t sep = std::string::npos;
        for (std::size_t pos = 1; pos < body.size(); ++pos) {
            if (body[pos] == '+' || body[pos] == '-') {
                sep = pos;
                break;
            }
        }
        if (sep == std::string::npos) {
            // pure imaginary: "i", "-i", "3/4i"
            if (body.empty() || body == "+") return Scalar(mpq_class(0), mpq_class(1));
            if (body == "-") return Scalar(mpq_class(0), mpq_class(-1));
            return Scalar(mpq_class(0), parse_rational_token(body, text));
        }
        mpq_class re = parse_rational_token(body.substr(0, sep), text);
        std::string imtok = body.substr(sep);
        mpq_class im;
        if (imtok == "+")
            im = 1;
        else if (imtok == "-")
            im = -1;
        else
            im = parse_rational_token(imtok, text);
        return Scalar(std::move(re), std::move(im));
    }
    return Scalar(parse_rational_token(s, text));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace cs
