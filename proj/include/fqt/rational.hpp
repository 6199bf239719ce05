#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fqt {

/// Nonnegative exact ratio, kept in lowest terms.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    Rational() = default;
    Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
        if (d == 0) throw std::domain_error("zero denominator");
        const std::uint64_t g = std::gcd(n, d);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_integer() const noexcept { return den == 1; }
    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational&, const Rational&) = default;
};

} // namespace fqt
