#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fqt {

/// An element of F_q, encoded as the integer sum c_0 + c_1 p + ... + c_{r-1} p^{r-1}
/// of its coordinates against the power basis of the modulus root.
using Elem = std::uint8_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * The finite field F_q, q = p^r <= 256, realised as F_p[x]/(f) for a monic irreducible f of degree r.
 *
 * All arithmetic goes through tables built once at construction: full q x q addition and multiplication
 * tables (multiplication derived from log/antilog tables of a primitive element), plus negation and
 * inverse. A Field is immutable after construction and may be shared freely across threads.
 */
class Field {
public:
    static constexpr unsigned kMaxOrder = 256;

    /// Builds F_{p^r}. When `modulus` is absent and r > 1 the built-in table is consulted
    /// (q in {4, 8, 9, 16, 25, 27, 32, 49, 64}). Throws InputError on any invalid parameter.
    static FieldPtr make(unsigned p, unsigned r = 1, std::optional<std::vector<unsigned>> modulus = std::nullopt);

    /// Built-in default modulus for q = p^r, low degree first, or nullopt if none is tabulated.
    static std::optional<std::vector<unsigned>> default_modulus(unsigned p, unsigned r);

    unsigned p() const noexcept { return p_; }
    unsigned r() const noexcept { return r_; }
    unsigned q() const noexcept { return q_; }
    bool is_prime() const noexcept { return r_ == 1; }
    bool is_binary() const noexcept { return p_ == 2; }

    /// Monic modulus coefficients c_0..c_r over F_p (the identity x for prime fields).
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

    /// A fixed primitive element (generator of the multiplicative group).
    Elem generator() const noexcept { return generator_; }

    Elem add(Elem a, Elem b) const noexcept { return add_[idx(a, b)]; }
    Elem sub(Elem a, Elem b) const noexcept { return add_[idx(a, neg_[b])]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[idx(a, b)]; }
    Elem inv(Elem a) const;  // throws DivisionByZero on 0
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    /// Discrete log base generator(); undefined for 0.
    unsigned log(Elem a) const noexcept { return log_[a]; }
    Elem exp(unsigned k) const noexcept { return antilog_[k % (q_ - 1)]; }

    /// Row c of the multiplication table: entry x holds c * x.
    std::span<const Elem> mul_row(Elem c) const noexcept {
        return {mul_.data() + static_cast<std::size_t>(c) * q_, q_};
    }
    std::span<const Elem> add_row(Elem a) const noexcept {
        return {add_.data() + static_cast<std::size_t>(a) * q_, q_};
    }
    std::span<const Elem> neg_table() const noexcept { return neg_; }

    bool contains(unsigned v) const noexcept { return v < q_; }

    /// "p^r" form, e.g. "2^3".
    std::string spec() const;

    /// Two fields are equal iff they have the same characteristic and modulus.
    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.p_ == b.p_ && a.modulus_ == b.modulus_;
    }

private:
    Field(unsigned p, unsigned r, std::vector<unsigned> modulus);

    std::size_t idx(Elem a, Elem b) const noexcept { return static_cast<std::size_t>(a) * q_ + b; }

    unsigned p_;
    unsigned r_;
    unsigned q_;
    std::vector<unsigned> modulus_;
    Elem generator_ = 1;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<Elem> inv_;
    std::vector<unsigned> log_;
    std::vector<Elem> antilog_;
};

/// Same field (by value), used for mixed-operand checks.
inline bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

bool is_prime_number(unsigned n) noexcept;

/// True iff the monic polynomial with coefficients `f` (low degree first) over F_p is irreducible.
/// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible_mod_p(const std::vector<unsigned>& f, unsigned p);

} // namespace fqt
