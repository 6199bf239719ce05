#pragma once

#include "fqt/field.hpp"

#include <compare>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace fqt {

/// Degree of a polynomial. The zero polynomial has degree kNegInf, below every real degree.
using Degree = long;
inline constexpr Degree kNegInf = std::numeric_limits<Degree>::min();

/**
 * Dense univariate polynomial over F_q, coefficients in increasing degree order.
 *
 * Always canonical: the coefficient vector carries no trailing zero, so the zero polynomial is the empty
 * vector and two polynomials over the same field are equal iff their coefficient vectors are equal.
 */
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Elem> coeffs);

    static Poly zero(FieldPtr field) { return Poly(std::move(field)); }
    static Poly constant(FieldPtr field, Elem c);
    /// c * t^k
    static Poly monomial(FieldPtr field, std::size_t k, Elem c = 1);

    const FieldPtr& field() const noexcept { return field_; }
    std::span<const Elem> coeffs() const noexcept { return coeffs_; }
    Elem operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Elem{0}; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    Degree degree() const noexcept { return coeffs_.empty() ? kNegInf : static_cast<Degree>(coeffs_.size()) - 1; }
    Elem leading() const noexcept { return coeffs_.empty() ? Elem{0} : coeffs_.back(); }
    bool is_monic() const noexcept { return leading() == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Elem c) const;
    /// t^k * this
    Poly shifted(std::size_t k) const;
    /// this / t^k; requires the low k coefficients to vanish.
    Poly unshifted(std::size_t k) const;
    /// Scalar multiple with leading coefficient 1; zero stays zero.
    Poly monic() const;

    /// Coefficients zero-padded (or required to fit) to `width` entries.
    std::vector<Elem> dense(std::size_t width) const;

    /// Comma-separated coefficients, "0" for the zero polynomial.
    std::string to_string() const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.coeffs_ == b.coeffs_; }

    /// Canonical order: by degree, then by coefficients from the top down.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;

private:
    void canonicalize() noexcept;
    void require_same_field(const Poly& o) const;

    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

struct PolyHash {
    std::size_t operator()(const Poly& p) const noexcept;
};

} // namespace fqt
