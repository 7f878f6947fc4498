#include "fsem/number.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace fsem {

namespace {

// Enough digits of pi for a 256-bit mantissa.
constexpr const char* kPiDigits =
    "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798";

mpf_class make_float(const mpf_class& v)
{
    mpf_class r(0, kFloatBits);
    r = v;
    return r;
}

mpf_class make_float(const mpq_class& v)
{
    return mpf_class(v, kFloatBits);
}

mpz_class pow10(unsigned e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Real Real::from_double(double d)
{
    if (!std::isfinite(d)) {
        throw std::invalid_argument("Real::from_double: non-finite value");
    }
    return Real(mpq_class(d));
}

Real Real::from_float(const mpf_class& f)
{
    Real r;
    r.v_ = make_float(f);
    return r;
}

Real Real::parse(std::string_view text)
{
    std::string s(text);
    auto bad = [&]() { return std::invalid_argument("Real::parse: malformed number '" + s + "'"); };
    if (s.empty()) {
        throw bad();
    }
    if (auto slash = s.find('/'); slash != std::string::npos) {
        try {
            mpz_class num(s.substr(0, slash), 10);
            mpz_class den(s.substr(slash + 1), 10);
            if (den == 0) {
                throw bad();
            }
            return Real(mpq_class(num, den));
        } catch (const std::invalid_argument&) {
            throw bad();
        }
    }
    std::size_t i = 0;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
        negative = s[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    bool seen_digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_point) {
                ++frac_digits;
            }
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) {
        throw bad();
    }
    long exponent = 0;
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') {
            throw bad();
        }
        ++i;
        std::size_t used = 0;
        try {
            exponent = std::stol(s.substr(i), &used);
        } catch (const std::exception&) {
            throw bad();
        }
        if (i + used != s.size()) {
            throw bad();
        }
    }
    long shift = exponent - frac_digits;
    if (shift > 10000 || shift < -10000) {
        throw bad();
    }
    mpq_class q{mpz_class(digits, 10)};
    if (shift >= 0) {
        q *= pow10(static_cast<unsigned>(shift));
    } else {
        q /= pow10(static_cast<unsigned>(-shift));
    }
    q.canonicalize();
    return Real(negative ? mpq_class(-q) : q);
}

Real Real::pi()
{
    return from_float(mpf_class(kPiDigits, kFloatBits));
}

Real Real::sqrt(const Real& x)
{
    if (x.sign() < 0) {
        throw std::domain_error("Real::sqrt: negative argument");
    }
    mpf_class r(0, kFloatBits);
    mpf_sqrt(r.get_mpf_t(), x.to_mpf().get_mpf_t());
    return from_float(r);
}

const mpq_class& Real::rational() const
{
    if (!is_exact()) {
        throw std::logic_error("Real::rational: value is not exact");
    }
    return std::get<mpq_class>(v_);
}

mpf_class Real::to_mpf() const
{
    if (is_exact()) {
        return make_float(std::get<mpq_class>(v_));
    }
    return std::get<mpf_class>(v_);
}

long double Real::to_ld() const
{
    // Split into mantissa and binary exponent so huge or tiny rationals do not
    // overflow the intermediate double.
    mpf_class f = to_mpf();
    if (f == 0) {
        return 0.0L;
    }
    long exp2 = 0;
    double mant = mpf_get_d_2exp(&exp2, f.get_mpf_t());
    mpf_class rest(0, kFloatBits);
    mpf_class scaled(0, kFloatBits);
    if (exp2 >= 0) {
        mpf_div_2exp(scaled.get_mpf_t(), f.get_mpf_t(), static_cast<mp_bitcnt_t>(exp2));
    } else {
        mpf_mul_2exp(scaled.get_mpf_t(), f.get_mpf_t(), static_cast<mp_bitcnt_t>(-exp2));
    }
    rest = scaled - mant;
    long double m = static_cast<long double>(mant) + static_cast<long double>(rest.get_d());
    return std::ldexp(m, static_cast<int>(exp2));
}

int Real::sign() const
{
    if (is_exact()) {
        return sgn(std::get<mpq_class>(v_));
    }
    return sgn(std::get<mpf_class>(v_));
}

Real Real::operator-() const
{
    Real r;
    if (is_exact()) {
        r.v_ = mpq_class(-std::get<mpq_class>(v_));
    } else {
        r.v_ = make_float(mpf_class(-std::get<mpf_class>(v_)));
    }
    return r;
}

Real& Real::operator+=(const Real& o)
{
    if (is_exact() && o.is_exact()) {
        std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
    } else {
        mpf_class r(0, kFloatBits);
        r = to_mpf() + o.to_mpf();
        v_ = r;
    }
    return *this;
}

Real& Real::operator-=(const Real& o)
{
    if (is_exact() && o.is_exact()) {
        std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
    } else {
        mpf_class r(0, kFloatBits);
        r = to_mpf() - o.to_mpf();
        v_ = r;
    }
    return *this;
}

Real& Real::operator*=(const Real& o)
{
    if (is_exact() && o.is_exact()) {
        std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
    } else {
        mpf_class r(0, kFloatBits);
        r = to_mpf() * o.to_mpf();
        v_ = r;
    }
    return *this;
}

Real& Real::operator/=(const Real& o)
{
    if (o.is_zero()) {
        throw std::domain_error("Real: division by zero");
    }
    if (is_exact() && o.is_exact()) {
        std::get<mpq_class>(v_) /= std::get<mpq_class>(o.v_);
    } else {
        mpf_class r(0, kFloatBits);
        r = to_mpf() / o.to_mpf();
        v_ = r;
    }
    return *this;
}

int compare(const Real& a, const Real& b)
{
    if (a.is_exact() && b.is_exact()) {
        return cmp(std::get<mpq_class>(a.v_), std::get<mpq_class>(b.v_));
    }
    return cmp(a.to_mpf(), b.to_mpf());
}

std::string Real::to_string() const
{
    if (!is_exact()) {
        mp_exp_t exp10 = 0;
        std::string digits = std::get<mpf_class>(v_).get_str(exp10, 10, 40);
        if (digits.empty()) {
            return "0";
        }
        bool negative = digits[0] == '-';
        if (negative) {
            digits.erase(0, 1);
        }
        std::string out = negative ? "-0." : "0.";
        out += digits;
        out += "e" + std::to_string(static_cast<long>(exp10));
        return out;
    }
    const mpq_class& q = std::get<mpq_class>(v_);
    // A reduced fraction has a terminating decimal iff its denominator is 2^a 5^b.
    mpz_class den = q.get_den();
    unsigned twos = 0;
    unsigned fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        den /= 5;
        ++fives;
    }
    if (den != 1) {
        return q.get_str(10);
    }
    unsigned scale = std::max(twos, fives);
    mpz_class scaled_num = q.get_num() * pow10(scale) / q.get_den();
    bool negative = scaled_num < 0;
    if (negative) {
        scaled_num = -scaled_num;
    }
    std::string digits = scaled_num.get_str(10);
    if (scale > 0) {
        if (digits.size() <= scale) {
            digits.insert(0, scale - digits.size() + 1, '0');
        }
        digits.insert(digits.size() - scale, ".");
    }
    return negative ? "-" + digits : digits;
}

Real pow(const Real& base, unsigned exponent)
{
    Real result(1);
    Real b = base;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= b;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            b *= b;
        }
    }
    return result;
}

mpz_class binomial(unsigned n, unsigned k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class factorial(unsigned n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Complex& Complex::operator+=(const Complex& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Complex& Complex::operator-=(const Complex& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Complex& Complex::operator*=(const Complex& o)
{
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    Real re = re_ * o.re_ - im_ * o.im_;
    Real im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Complex& Complex::operator/=(const Complex& o)
{
    if (o.is_zero()) {
        throw std::domain_error("Complex: division by zero");
    }
    if (o.im_.is_zero()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    Real den = o.re_ * o.re_ + o.im_ * o.im_;
    Real re = (re_ * o.re_ + im_ * o.im_) / den;
    Real im = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

mpq_class to_exact(const Real& x)
{
    if (x.is_exact()) {
        return x.rational();
    }
    mpq_class q;
    mpq_set_f(q.get_mpq_t(), x.to_mpf().get_mpf_t());
    return q;
}

}  // namespace fsem
