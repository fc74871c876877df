#include <umbra/errors.hpp>
#include <umbra/rational.hpp>

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace umbra
{

Rational::Rational(long num, long den)
{
    if (den == 0) {
        throw division_by_zero("rational with zero denominator");
    }
    m_value = mpq_class(num, 1);
    m_value /= den;
    m_value.canonicalize();
}

Rational::Rational(mpq_class v) : m_value(std::move(v))
{
    if (sgn(m_value.get_den()) == 0) {
        throw division_by_zero("rational with zero denominator");
    }
    m_value.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                return false;
            }
        }
        return true;
    };

    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
    mpz_class n(strip_plus(num), 10);
    mpz_class d(std::string(den), 10);
    if (sgn(d) == 0) {
        throw division_by_zero("rational with zero denominator");
    }
    return Rational(mpq_class(n, d));
}

bool Rational::is_integer() const
{
    return m_value.get_den() == 1;
}

std::string Rational::numerator() const
{
    return m_value.get_num().get_str();
}

std::string Rational::denominator() const
{
    return m_value.get_den().get_str();
}

std::string Rational::str() const
{
    return m_value.get_str();
}

std::string Rational::latex() const
{
    if (is_integer()) {
        return numerator();
    }
    std::string out = sign() < 0 ? "-" : "";
    mpz_class num = m_value.get_num();
    out += "\\frac{" + mpz_class(::abs(num)).get_str() + "}{" + denominator() + "}";
    return out;
}

Rational Rational::pow(int e) const
{
    if (e < 0) {
        if (is_zero()) {
            throw division_by_zero("negative power of zero");
        }
        return (Rational(1) / *this).pow(-e);
    }
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), m_value.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den_mpz_t(), m_value.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(std::move(out));
}

Rational Rational::abs() const
{
    return sign() < 0 ? -*this : *this;
}

Rational &Rational::operator+=(const Rational &o)
{
    m_value += o.m_value;
    return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
    m_value -= o.m_value;
    return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
    m_value *= o.m_value;
    return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw division_by_zero("rational division by zero");
    }
    m_value /= o.m_value;
    return *this;
}

Rational Rational::operator-() const
{
    Rational out;
    out.m_value = -m_value;
    return out;
}

std::ostream &operator<<(std::ostream &os, const Rational &q)
{
    return os << q.str();
}

Rational factorial(int n)
{
    if (n < 0) {
        throw std::invalid_argument("factorial of a negative integer");
    }
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(f));
}

Rational binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) {
        return Rational(0);
    }
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(b));
}

} // namespace umbra
