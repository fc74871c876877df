#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include <umbra/polynomial.hpp>
#include <umbra/rational.hpp>

inline umbra::Rational Q(std::string_view text)
{
    return umbra::Rational::parse(text);
}

// Coefficients from the constant term upward.
inline umbra::Polynomial P(std::initializer_list<std::string_view> coeffs)
{
    std::vector<umbra::Rational> c;
    for (auto s : coeffs) {
        c.push_back(Q(s));
    }
    return umbra::Polynomial(std::move(c));
}
