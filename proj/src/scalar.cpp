#include "vfock/scalar.hpp"

#include <cctype>

#include "vfock/errors.hpp"

namespace vfock {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational::Rational(long num, long den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v))
{
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("not a rational p/q: '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative)
        n = -n;
    return Rational(mpq_class(n, d));
}

std::string Rational::str() const
{
    return v_.get_str(10);
}

bool Rational::is_integer() const
{
    return v_.get_den() == 1;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    int c = cmp(a.v_, b.v_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational pow(const Rational& base, unsigned exponent)
{
    Rational r(1);
    for (unsigned i = 0; i < exponent; ++i)
        r *= base;
    return r;
}

Rational factorial(unsigned n)
{
    Rational r(1);
    for (unsigned i = 2; i <= n; ++i)
        r *= Rational(static_cast<long>(i));
    return r;
}

Poly::Poly(const Rational& c)
{
    if (!c.is_zero())
        c_.push_back(c);
}

Poly Poly::variable()
{
    return from_coeffs({Rational(0), Rational(1)});
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs)
{
    Poly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

const Rational& Poly::coeff(int i) const
{
    static const Rational zero;
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return zero;
    return c_[static_cast<std::size_t>(i)];
}

Rational Poly::eval(const Rational& at) const
{
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    return Poly::from_coeffs(std::move(out));
}

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly& Poly::operator/=(const Rational& c)
{
    if (c.is_zero())
        throw DomainError("division of polynomial by zero");
    for (auto& x : c_)
        x /= c;
    return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    Poly rem = a;
    if (a.degree() < b.degree())
        return {Poly(), rem};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const Rational& lead = b.c_.back();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational factor = rem.c_.back() / lead;
        quot[static_cast<std::size_t>(shift)] = factor;
        for (int i = 0; i <= b.degree(); ++i)
            rem.c_[static_cast<std::size_t>(i + shift)] -= factor * b.c_[static_cast<std::size_t>(i)];
        rem.trim();
    }
    return {Poly::from_coeffs(std::move(quot)), rem};
}

std::string Poly::str(std::string_view var) const
{
    if (c_.empty())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        bool unit = mag == Rational(1);
        if (i == 0 || !unit)
            out += mag.str();
        if (i > 0) {
            if (!unit)
                out += "*";
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

void Poly::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Poly pow(const Poly& base, unsigned exponent)
{
    Poly r(1);
    for (unsigned i = 0; i < exponent; ++i)
        r *= base;
    return r;
}

Rational exact_div(const Rational& a, const Rational& b)
{
    return a / b;
}

Poly exact_div(const Poly& a, const Poly& b)
{
    auto [q, r] = Poly::divmod(a, b);
    if (!r.is_zero())
        throw DomainError("inexact polynomial division");
    return q;
}

Rational RationalSampler::any()
{
    long num = integer(-max_num_, max_num_);
    long den = integer(1, max_den_);
    return Rational(num, den);
}

Rational RationalSampler::nonzero()
{
    for (;;) {
        Rational r = any();
        if (!r.is_zero())
            return r;
    }
}

long RationalSampler::integer(long lo, long hi)
{
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
}

} // namespace vfock
