// Copyright (c) the chroma authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHROMA_RATIONAL_HPP
#define CHROMA_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chroma {

/// Exact nonnegative rational. Epsilon values are kept exact so that the
/// recursion-depth formula never flips across a power-of-two boundary due to
/// floating-point rounding.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den <= 0 || num < 0) throw std::invalid_argument("rational out of domain");
        long long g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    /// Accepts "p/q" or a plain decimal such as "0.25" or ".5".
    static Rational parse(std::string_view text);

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    /// Ceiling of (*this) * k.
    long long ceil_mul(long long k) const { return (num * k + den - 1) / den; }

    bool positive() const { return num > 0; }
    bool less_than_one() const { return num < den; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        std::string p(text.substr(0, slash));
        std::string q(text.substr(slash + 1));
        if (p.empty() || q.empty()) throw std::invalid_argument("bad fraction: " + std::string(text));
        size_t used = 0;
        long long pn = std::stoll(p, &used);
        if (used != p.size()) throw std::invalid_argument("bad fraction: " + std::string(text));
        long long qn = std::stoll(q, &used);
        if (used != q.size()) throw std::invalid_argument("bad fraction: " + std::string(text));
        return Rational(pn, qn);
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        std::string digits(text);
        size_t used = 0;
        long long v = std::stoll(digits, &used);
        if (used != digits.size()) throw std::invalid_argument("bad rational: " + std::string(text));
        return Rational(v, 1);
    }
    std::string whole(text.substr(0, dot));
    std::string frac(text.substr(dot + 1));
    if (whole.empty()) whole = "0";
    if (frac.empty()) throw std::invalid_argument("bad decimal: " + std::string(text));
    // Cap denominators at 1e9 so downstream products stay inside 64 bits.
    if (frac.size() > 9) throw std::invalid_argument("decimal too long: " + std::string(text));
    for (char c : whole)
        if (c < '0' || c > '9') throw std::invalid_argument("bad decimal: " + std::string(text));
    for (char c : frac)
        if (c < '0' || c > '9') throw std::invalid_argument("bad decimal: " + std::string(text));
    long long den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    long long num = std::stoll(whole) * den + std::stoll(frac);
    return Rational(num, den);
}

}  // namespace chroma

#endif  // CHROMA_RATIONAL_HPP
