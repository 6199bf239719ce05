#pragma once

#include "fqt/subspace.hpp"

#include <cstdint>
#include <vector>

namespace fqt {

/// One summand Pol(d) * y of a strong decomposition.
struct Block {
    std::size_t d = 1;
    Poly y;

    /// d + deg y, the exclusive top degree reached by Pol(d) * y.
    Degree reach() const noexcept { return static_cast<Degree>(d) + y.degree(); }

    friend bool operator==(const Block&, const Block&) = default;
};

/**
 * V = Pol(d_1) y_1 (+) ... (+) Pol(d_k) y_k with d_1 + deg y_1 < ... < d_k + deg y_k.
 */
struct StrongDecomposition {
    FieldPtr field;
    std::vector<Block> blocks;

    std::size_t rank() const noexcept { return blocks.size(); }
    /// {t^j y_i : 0 <= j < d_i}, block by block.
    std::vector<Poly> generators() const;

    friend bool operator==(const StrongDecomposition& a, const StrongDecomposition& b) noexcept {
        return same_field(a.field, b.field) && a.blocks == b.blocks;
    }
};

/**
 * Strong decomposition of V with rank equal to weak_dim(V).
 *
 * Walks the echelon basis x_1, ..., x_l in increasing degree while holding a decomposition of
 * V_{<=s} = span(x_1..x_s). Adding x_{s+1}: with W = span{t^{d_i} y_i}, the space W cap V_{<=s+1} is
 * either zero, and (1, x_{s+1}) is appended, or a line spanned by a monic z = sum a_i t^{d_i} y_i. In that
 * case the block i with a_i != 0 and d_i minimal is dropped and (d_i + 1, z / t^{d_i}) appended.
 *
 * Ordering and directness are re-checked after every step; a violation throws InvariantError.
 */
StrongDecomposition decompose(const Subspace& v);

struct DecompositionReport {
    bool ordering_strict = false;
    bool direct = false;
    bool spans = false;  // the blocks span exactly V
    std::size_t rank = 0;
    std::size_t weak_dim = 0;

    bool valid() const noexcept { return ordering_strict && direct && spans; }
    bool minimal() const noexcept { return rank == weak_dim; }
};

DecompositionReport verify_decomposition(const Subspace& v, const StrongDecomposition& d);

struct OracleLimits {
    std::uint64_t max_elements = 100'000;  // cap on q^dim(V)
    std::uint64_t max_nodes = 5'000'000;   // cap on search nodes
};

/// Largest d with t^j x in V for all j < d (0 if x is not in V).
std::size_t max_block_length(const Subspace& v, const Poly& x);

/**
 * Structural dimension by exhaustive search: the least k with V = Pol(d_1) x_1 + ... + Pol(d_k) x_k,
 * sums not required to be direct. Throws ResourceError beyond `limits`.
 */
std::size_t struct_dim_oracle(const Subspace& v, const OracleLimits& limits = {});

} // namespace fqt
