#include "lieobs/rational.hpp"
#include "lieobs/errors.hpp"

#include <cstddef>

namespace lieobs {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

mpz_class parse_integer(const std::string& text) {
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    if (!all_digits(body))
        throw ParseError("invalid rational literal: '" + text + "'");
    mpz_class value(body, 10);
    return negative ? mpz_class(-value) : value;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer(text));
    }
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator in rational literal: '" + text + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

Vec basis_vec(std::size_t n, std::size_t i) {
    Vec v(n, Rational(0));
    v[i] = 1;
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Rational& s, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

void axpy(Vec& a, const Rational& s, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
}

Rational dot(const Vec& a, const Vec& b) {
    Rational r(0);
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

Vec concat(const Vec& a, const Vec& b) {
    Vec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

} // namespace lieobs
