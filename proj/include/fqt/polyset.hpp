#pragma once

#include "fqt/poly.hpp"
#include "fqt/rational.hpp"

#include <cstdint>
#include <vector>

namespace fqt {

inline constexpr std::uint64_t kDefaultSetCap = 1'000'000;

/// Finite subset of F_q[t]. Elements are kept sorted in canonical order without duplicates.
class PolySet {
public:
    explicit PolySet(FieldPtr field) : field_(std::move(field)) {}
    PolySet(FieldPtr field, std::vector<Poly> elements);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Poly>& elements() const noexcept { return elems_; }
    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    bool contains(const Poly& x) const;
    Degree max_degree() const noexcept { return elems_.empty() ? kNegInf : elems_.back().degree(); }

    auto begin() const noexcept { return elems_.begin(); }
    auto end() const noexcept { return elems_.end(); }

    friend bool operator==(const PolySet& a, const PolySet& b) noexcept {
        return same_field(a.field_, b.field_) && a.elems_ == b.elems_;
    }

private:
    FieldPtr field_;
    std::vector<Poly> elems_;
};

PolySet sumset(const PolySet& a, const PolySet& b, std::uint64_t cap = kDefaultSetCap);
PolySet difference_set(const PolySet& a, const PolySet& b, std::uint64_t cap = kDefaultSetCap);
/// {c a : a in A}; c must be nonzero.
PolySet dilate(const PolySet& a, const Poly& c);
PolySet translate(const PolySet& a, const Poly& x);
/// A + A + ... + A (n copies), n >= 1.
PolySet iterated_sumset(const PolySet& a, unsigned n, std::uint64_t cap = kDefaultSetCap);

struct DoublingStats {
    std::uint64_t size = 0;
    std::uint64_t sum_size = 0;         // |A + A|
    std::uint64_t dilate_sum_size = 0;  // |A + tA|
    std::uint64_t diff_size = 0;        // |A - A|
    Rational k1;                        // |A + A| / |A|
    Rational k2;                        // |A + tA| / |A|
};

DoublingStats doubling_stats(const PolySet& a, std::uint64_t cap = kDefaultSetCap);

/**
 * Ruzsa covering: a subset X of B with B contained in A - A + X and |X| <= |A + B| / |A|.
 *
 * Greedy over B in canonical order, keeping the translates x + A pairwise disjoint. Maximality of the
 * disjoint family gives the covering, disjointness inside A + B gives the size bound. Both are re-checked
 * before returning; a failed check throws InvariantError.
 */
PolySet ruzsa_cover(const PolySet& a, const PolySet& b, std::uint64_t cap = kDefaultSetCap);

} // namespace fqt
