#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spinstat {

using Int = boost::multiprecision::cpp_int;
// cpp_rational keeps values in lowest terms with positive denominator, so
// structural equality is value equality.
using Rational = boost::multiprecision::cpp_rational;

struct scalar_format_error : std::runtime_error {
    explicit scalar_format_error(const std::string& what) : std::runtime_error(what) {}
};

/// Element of Q(i): re + im*i with exact rational components.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(long r) : re(r) {}
    GaussianRational(int r) : re(r) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational operator-() const { return {-re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    GaussianRational inverse() const {
        Rational n = re * re + im * im;
        if (n == 0) throw std::domain_error("division by zero in Q(i)");
        return {re / n, -im / n};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

namespace detail {

inline std::string rational_to_string(const Rational& r) {
    Int n = boost::multiprecision::numerator(r);
    Int d = boost::multiprecision::denominator(r);
    std::string s = n.str();
    if (d != 1) s += "/" + d.str();
    return s;
}

}  // namespace detail

/// Canonical rendering: "a/b" for real values, "a/b+c/d*i" otherwise.  The
/// denominator is omitted when it equals 1; the imaginary numerator carries
/// its own sign after the '+' separator (e.g. "1/2+-1/3*i").
inline std::string to_string(const GaussianRational& z) {
    if (z.im == 0) return detail::rational_to_string(z.re);
    return detail::rational_to_string(z.re) + "+" + detail::rational_to_string(z.im) + "*i";
}

namespace detail {

inline Rational parse_rational_token(const std::string& tok) {
    if (tok.empty()) throw scalar_format_error("empty rational");
    std::size_t pos = 0;
    bool neg = false;
    if (tok[pos] == '+' || tok[pos] == '-') {
        neg = tok[pos] == '-';
        ++pos;
    }
    if (pos >= tok.size()) throw scalar_format_error("sign without digits: '" + tok + "'");
    std::size_t slash = tok.find('/', pos);
    std::string num_s = tok.substr(pos, slash == std::string::npos ? std::string::npos : slash - pos);
    if (num_s.empty() || num_s.find_first_not_of("0123456789") != std::string::npos)
        throw scalar_format_error("bad numerator in '" + tok + "'");
    Int num(num_s);
    Int den = 1;
    if (slash != std::string::npos) {
        std::string den_s = tok.substr(slash + 1);
        if (den_s.empty() || den_s.find_first_not_of("0123456789") != std::string::npos)
            throw scalar_format_error("bad denominator in '" + tok + "'");
        den = Int(den_s);
        if (den == 0) throw scalar_format_error("zero denominator in '" + tok + "'");
    }
    if (neg) num = -num;
    return Rational(num, den);
}

}  // namespace detail

/// Parses the canonical scalar grammar:
///   scalar   := rational | rational '+' rational '*i'
///   rational := ['+'|'-'] digits ['/' digits]
inline GaussianRational parse_scalar(const std::string& text) {
    if (text.empty()) throw scalar_format_error("empty scalar");
    // Split at the '+' that separates real and imaginary parts.  A leading
    // sign on the real numerator is not a separator.
    std::size_t sep = std::string::npos;
    for (std::size_t k = 1; k < text.size(); ++k) {
        if (text[k] == '+') { sep = k; break; }
    }
    if (sep == std::string::npos) {
        if (text.find('i') != std::string::npos)
            throw scalar_format_error("imaginary part must be written 'a/b+c/d*i': '" + text + "'");
        return GaussianRational(detail::parse_rational_token(text));
    }
    std::string real_part = text.substr(0, sep);
    std::string rest = text.substr(sep + 1);
    if (rest.size() < 2 || rest.substr(rest.size() - 2) != "*i")
        throw scalar_format_error("expected '*i' suffix: '" + text + "'");
    std::string imag_part = rest.substr(0, rest.size() - 2);
    return {detail::parse_rational_token(real_part), detail::parse_rational_token(imag_part)};
}

}  // namespace spinstat
