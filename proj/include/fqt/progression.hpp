#pragma once

#include "fqt/polyset.hpp"
#include "fqt/structure.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fqt {

/// Generalised F_q[t]-progression x0 + Pol(n_1) x_1 + ... + Pol(n_d) x_d.
class Progression {
public:
    struct Term {
        std::size_t n = 1;
        Poly x;
    };

    Progression(Poly x0, std::vector<Term> terms);

    const FieldPtr& field() const noexcept { return x0_.field(); }
    const Poly& translate() const noexcept { return x0_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t rank() const noexcept { return terms_.size(); }
    /// n_1 + ... + n_d
    std::size_t total_length() const noexcept;
    /// q^{n_1 + ... + n_d}, or nullopt on overflow.
    std::optional<std::uint64_t> nominal_size() const noexcept;

    /// Every element x0 + sum a_i x_i with deg a_i < n_i. Throws ResourceError if q^{sum n_i} > cap.
    PolySet enumerate(std::uint64_t cap = kDefaultSetCap) const;
    /// Solves the linear system for the a_i; no enumeration.
    bool contains(const Poly& x) const;
    /// True iff all q^{sum n_i} combinations are distinct.
    bool is_proper() const;

private:
    Subspace difference_space() const;  // span{t^j x_i : j < n_i}

    Poly x0_;
    std::vector<Term> terms_;
};

Progression to_progression(const StrongDecomposition& d, const Poly& x0);

} // namespace fqt
