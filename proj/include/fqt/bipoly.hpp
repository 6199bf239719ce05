#pragma once

// Bivariate model F_p[t, u] for transcendental dilates: u stands in for an element transcendental over
// F_p[t], which is all the counting for A + tA and A + uA depends on.

#include "fqt/field.hpp"
#include "fqt/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fqt {

struct BiTerm {
    unsigned i = 0;  // t-degree
    unsigned j = 0;  // u-degree
    Elem c = 0;

    friend bool operator==(const BiTerm&, const BiTerm&) = default;
};

/// Sparse polynomial in t and u over a prime field. Terms are nonzero and sorted by (j, i).
class BiPoly {
public:
    explicit BiPoly(FieldPtr field) : field_(std::move(field)) {}
    BiPoly(FieldPtr field, std::vector<BiTerm> terms);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<BiTerm>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    unsigned t_degree() const noexcept;  // 0 for the zero polynomial
    unsigned u_degree() const noexcept;

    /// Semicolon-separated "i,j,c" terms in (j, i) order; "0" for zero.
    std::string to_string() const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) noexcept { return a.terms_ == b.terms_; }
    friend std::strong_ordering operator<=>(const BiPoly& a, const BiPoly& b) noexcept;

private:
    FieldPtr field_;
    std::vector<BiTerm> terms_;
};

class BiPolySet {
public:
    explicit BiPolySet(FieldPtr field) : field_(std::move(field)) {}
    BiPolySet(FieldPtr field, std::vector<BiPoly> elements);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<BiPoly>& elements() const noexcept { return elems_; }
    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }

    friend bool operator==(const BiPolySet& a, const BiPolySet& b) noexcept { return a.elems_ == b.elems_; }

private:
    FieldPtr field_;
    std::vector<BiPoly> elems_;
};

enum class Var { T, U };

BiPolySet bi_sumset(const BiPolySet& a, const BiPolySet& b, std::uint64_t cap = 1'000'000);
/// Multiplies every element by t or u.
BiPolySet bi_dilate(const BiPolySet& a, Var v);

/// {sum_{i=1..n} a_i(t) u^i : a_i in F_p[t], deg a_i < m}, of size p^{nm}.
BiPolySet dilate_example(unsigned p, unsigned n, unsigned m, std::uint64_t cap = 1'000'000);

/// log_p of a ratio: exact when the ratio is an integral power of p.
struct LogValue {
    std::optional<std::uint64_t> exact;
    double approx = 0;
};

LogValue log_base(const Rational& x, unsigned p);

struct GrowthReport {
    std::uint64_t size = 0;
    std::uint64_t t_sum_size = 0;  // |A + tA|
    std::uint64_t u_sum_size = 0;  // |A + uA|
    Rational k1;                   // |A + tA| / |A|
    Rational k2;                   // |A + uA| / |A|
    LogValue log_k1;
    LogValue log_k2;
    LogValue log_size;
    LogValue log_product;  // log_p K1 * log_p K2
    /// log_p K1 * log_p K2 == log_p |A|: exact when all three logs are exact, else within 1e-9.
    bool product_matches_size = false;
};

GrowthReport growth_report(const BiPolySet& a, std::uint64_t cap = 1'000'000);

} // namespace fqt
