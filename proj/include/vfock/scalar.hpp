#pragma once

// Exact coefficient rings. Every operator in the library is generic over a
// ScalarRing; two realizations are provided: Rational (arbitrary precision,
// backed by GMP) and Poly (dense univariate polynomials over Rational in one
// formal indeterminate, used to carry a parameter such as z symbolically).

#include <compare>
#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace vfock {

class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(mpq_class v);

    // Accepts "p", "-p", "p/q" with q > 0; the result is canonicalized.
    static Rational parse(std::string_view text);

    // "p" for integers, "p/q" otherwise.
    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const;
    int sign() const { return sgn(v_); }
    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    mpq_class v_;
};

Rational pow(const Rational& base, unsigned exponent);
Rational factorial(unsigned n);

class Poly {
public:
    Poly() = default;
    Poly(long c) : Poly(Rational(c)) {}
    Poly(const Rational& c);

    static Poly variable();
    static Poly from_coeffs(std::vector<Rational> coeffs);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational eval(const Rational& at) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator/=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator/(Poly a, const Rational& c) { return a /= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Quotient and remainder of Euclidean division; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    // Human-readable form, e.g. "3/2*z + 1/2".
    std::string str(std::string_view var = "z") const;

private:
    void trim();
    std::vector<Rational> c_;
};

Poly pow(const Poly& base, unsigned exponent);

template <class S>
concept ScalarRing = std::regular<S> && requires(S a, const S& b, const Rational& q) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a / q } -> std::convertible_to<S>;
    { a.is_zero() } -> std::convertible_to<bool>;
    S(q);
};

// Division that is required to be exact (Bareiss elimination): field
// division for Rational, remainder-free polynomial division for Poly.
Rational exact_div(const Rational& a, const Rational& b);
Poly exact_div(const Poly& a, const Poly& b);

template <ScalarRing S>
S scalar_pow(const S& base, unsigned exponent)
{
    S result(Rational(1));
    for (unsigned i = 0; i < exponent; ++i)
        result = result * base;
    return result;
}

inline std::string scalar_str(const Rational& q) { return q.str(); }
inline std::string scalar_str(const Poly& p) { return p.str(); }

template <class S> struct ring_name;
template <> struct ring_name<Rational> { static constexpr const char* value = "rational"; };
template <> struct ring_name<Poly> { static constexpr const char* value = "poly"; };

// Deterministic small random rationals for property sweeps. The generator is
// std::mt19937_64, whose output sequence is fixed by the standard; values are
// reduced by plain modulo so results do not depend on the library's
// distribution implementations.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, long max_num = 9, long max_den = 7)
        : rng_(seed), max_num_(max_num), max_den_(max_den) {}

    Rational any();
    Rational nonzero();
    long integer(long lo, long hi);

private:
    std::mt19937_64 rng_;
    long max_num_;
    long max_den_;
};

} // namespace vfock
