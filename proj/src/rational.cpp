#include "kemeny/rational.hpp"

#include "kemeny/errors.hpp"

#include <cctype>
#include <string>

namespace kemeny {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den) {
    return make_rational(BigInt(num), BigInt(den));
}

BigInt to_bigint(__int128 value) {
    const bool negative = value < 0;
    unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(value)
                                     : static_cast<unsigned __int128>(value);
    const auto hi = static_cast<unsigned long>(mag >> 64);
    const auto lo = static_cast<unsigned long>(mag);
    BigInt out(hi);
    out <<= 64;
    out += lo;
    if (negative) out = -out;
    return out;
}

BigInt to_bigint(std::int64_t value) {
    return BigInt(static_cast<long>(value));
}

BigInt floor_of(const Rational& x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

BigInt ceil_of(const Rational& x) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::string to_exact_string(const Rational& x) { return x.get_str(); }

namespace {

BigInt pow10(long e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return p;
}

// Largest e with 10^e <= a, for a > 0.
long decimal_exponent(const Rational& a) {
    long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
    auto at_least = [&](long k) {
        return k >= 0 ? a >= Rational(pow10(k)) : a * Rational(pow10(-k)) >= 1;
    };
    while (!at_least(e)) --e;
    while (at_least(e + 1)) ++e;
    return e;
}

}  // namespace

std::string to_decimal_string(const Rational& x, int significant_digits) {
    if (significant_digits < 1) throw PreconditionError("need at least one significant digit");
    if (x == 0) return "0";
    const Rational a = abs(x);
    long e = decimal_exponent(a);
    const long shift = significant_digits - 1 - e;
    Rational scaled = shift >= 0 ? Rational(a * Rational(pow10(shift))) : Rational(a / Rational(pow10(-shift)));
    BigInt digits = floor_of(scaled + Rational(1, 2));
    if (digits == pow10(significant_digits)) {
        digits = pow10(significant_digits - 1);
        ++e;
    }
    std::string s = digits.get_str();
    std::string out = x < 0 ? "-" : "";
    const long d = significant_digits;
    if (e >= -6 && e < 21) {
        if (e >= d - 1) {
            out += s + std::string(static_cast<std::size_t>(e - d + 1), '0');
        } else if (e >= 0) {
            out += s.substr(0, static_cast<std::size_t>(e + 1)) + "." +
                   s.substr(static_cast<std::size_t>(e + 1));
        } else {
            out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s;
        }
    } else {
        out += s.substr(0, 1);
        if (d > 1) out += "." + s.substr(1);
        out += e < 0 ? "e-" : "e+";
        const std::string exp = std::to_string(e < 0 ? -e : e);
        out += (exp.size() < 2 ? "0" : "") + exp;
    }
    return out;
}

Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw FormatError("not a rational number: '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num, den;
        if (num.set_str(std::string(text.substr(0, slash)), 10) != 0 ||
            den.set_str(std::string(text.substr(slash + 1)), 10) != 0 || den == 0) {
            return fail();
        }
        return make_rational(num, den);
    }
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
    std::string mantissa;
    long frac_digits = 0;
    bool seen_point = false;
    for (; i < text.size() && text[i] != 'e' && text[i] != 'E'; ++i) {
        const char ch = text[i];
        if (ch == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            mantissa += ch;
            if (seen_point) ++frac_digits;
        } else {
            return fail();
        }
    }
    if (mantissa.empty()) return fail();
    long exponent = 0;
    if (i < text.size()) {
        std::string exp_text(text.substr(i + 1));
        if (exp_text.empty()) return fail();
        std::size_t used = 0;
        try {
            exponent = std::stol(exp_text, &used);
        } catch (const std::exception&) {
            return fail();
        }
        if (used != exp_text.size()) return fail();
    }
    Rational value{BigInt(mantissa, 10)};
    const long scale = exponent - frac_digits;
    value = scale >= 0 ? Rational(value * Rational(pow10(scale))) : Rational(value / Rational(pow10(-scale)));
    return negative ? Rational(-value) : value;
}

double to_double(const Rational& x) { return x.get_d(); }

}  // namespace kemeny
