#pragma once

/**
 * @file number.hpp
 * @brief Scalars that stay exact rationals until an irrational constant enters.
 *
 * A Real holds either an exact GMP rational or a 256-bit GMP float. Arithmetic
 * between two exact values is exact; as soon as one operand is a float the
 * result is a float. Irrational constants (pi, square roots) are only ever
 * produced as floats.
 *
 * Complex is a pair of Reals and carries the coefficients of Gaussian
 * polynomials, which become complex under the Fourier transform.
 */

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>
#include <variant>

namespace fsem {

/// Working precision (bits) of the float branch of Real.
inline constexpr mp_bitcnt_t kFloatBits = 256;

class Real {
public:
    Real() : v_(mpq_class(0)) {}
    Real(int v) : v_(mpq_class(v)) {}
    Real(long v) : v_(mpq_class(v)) {}
    Real(const mpq_class& q) : v_(q) { std::get<mpq_class>(v_).canonicalize(); }
    Real(const mpz_class& z) : v_(mpq_class(z)) {}

    /// Exact dyadic rational equal to the given double (which must be finite).
    static Real from_double(double d);
    /// Float-branch value at working precision.
    static Real from_float(const mpf_class& f);
    /// Parse "p/q", "-12", "0.125" or "1e-8" exactly.
    static Real parse(std::string_view text);
    static Real pi();
    static Real sqrt(const Real& x);

    bool is_exact() const { return std::holds_alternative<mpq_class>(v_); }
    /// The exact value; throws std::logic_error on the float branch.
    const mpq_class& rational() const;
    mpf_class to_mpf() const;
    long double to_ld() const;
    double to_double() const { return static_cast<double>(to_ld()); }

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    Real abs() const { return sign() < 0 ? -*this : *this; }

    Real operator-() const;
    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }

    /// Exact comparison when both sides are exact; otherwise compares at float precision.
    friend int compare(const Real& a, const Real& b);
    friend bool operator==(const Real& a, const Real& b) { return compare(a, b) == 0; }
    friend bool operator<(const Real& a, const Real& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return compare(a, b) >= 0; }

    /// Exact values print as a terminating decimal when possible, otherwise "p/q";
    /// floats print with 40 significant digits.
    std::string to_string() const;

private:
    std::variant<mpq_class, mpf_class> v_;
};

Real pow(const Real& base, unsigned exponent);
/// The exact rational value of x (a float converts exactly, being binary).
mpq_class to_exact(const Real& x);
/// n choose k as an exact integer.
mpz_class binomial(unsigned n, unsigned k);
mpz_class factorial(unsigned n);

class Complex {
public:
    Complex() = default;
    Complex(int re) : re_(re) {}
    Complex(Real re) : re_(std::move(re)) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    bool is_exact() const { return re_.is_exact() && im_.is_exact(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    Complex conj() const { return {re_, -im_}; }
    std::complex<long double> to_ld() const { return {re_.to_ld(), im_.to_ld()}; }
    /// |z| in long double.
    long double abs_ld() const { return std::abs(to_ld()); }

    Complex operator-() const { return {-re_, -im_}; }
    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

private:
    Real re_;
    Real im_;
};

}  // namespace fsem
