#pragma once

#include "fqt/poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fqt {

/**
 * A finite F_q-subspace of F_q[t], stored by its canonical degree-echelon basis: monic generators of
 * strictly increasing degree, each vanishing at the leading degree of every other generator. Two
 * subspaces are equal iff their bases are identical.
 */
class Subspace {
public:
    explicit Subspace(FieldPtr field) : field_(std::move(field)) {}

    static Subspace span(const FieldPtr& field, const std::vector<Poly>& generators);
    /// Pol(n): polynomials of degree < n.
    static Subspace pol(const FieldPtr& field, std::size_t n);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Poly>& basis() const noexcept { return basis_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    bool is_zero() const noexcept { return basis_.empty(); }
    /// Largest degree occurring in V (kNegInf for the zero space).
    Degree max_degree() const noexcept { return basis_.empty() ? kNegInf : basis_.back().degree(); }
    /// q^dim, or nullopt if it does not fit in 64 bits.
    std::optional<std::uint64_t> cardinality() const noexcept;

    bool contains(const Poly& x) const;
    /// Coordinates c with x = sum c_i basis_i, or nullopt if x is not in V.
    std::optional<std::vector<Elem>> coordinates(const Poly& x) const;
    /// The element sum c_i basis_i.
    Poly combine(const std::vector<Elem>& coords) const;

    Subspace operator+(const Subspace& w) const;
    Subspace intersect(const Subspace& w) const;
    /// {c v : v in V}; c must be nonzero.
    Subspace dilate(const Poly& c) const;
    /// t^k V
    Subspace shifted(std::size_t k) const;

    /// Every element of V in coordinate order; throws ResourceError if q^dim > cap.
    std::vector<Poly> elements(std::uint64_t cap) const;

    friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
        return same_field(a.field_, b.field_) && a.basis_ == b.basis_;
    }

private:
    Subspace(FieldPtr field, std::vector<Poly> basis) : field_(std::move(field)), basis_(std::move(basis)) {}
    void require_field(const FieldPtr& other) const;

    FieldPtr field_;
    std::vector<Poly> basis_;
};

/// dim(V + tV) - dim(V), i.e. log_q(|V + tV| / |V|).
std::size_t weak_dim(const Subspace& v);

} // namespace fqt
