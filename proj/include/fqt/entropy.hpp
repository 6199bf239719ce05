#pragma once

#include "fqt/polyset.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace fqt {

inline constexpr double kProbabilityTolerance = 1e-9;

/// Finite distribution on F_q[t]; probabilities must be nonnegative and sum to 1 within 1e-9.
class Distribution {
public:
    explicit Distribution(std::vector<std::pair<Poly, double>> atoms);

    /// Uniform distribution on a nonempty set.
    static Distribution uniform(const PolySet& a);

    const std::vector<std::pair<Poly, double>>& atoms() const noexcept { return atoms_; }

private:
    std::vector<std::pair<Poly, double>> atoms_;
};

/// Shannon entropy in base `base`.
double entropy(const Distribution& d, double base);

/// Exact law of X + Y for independent uniform X on A and Y on B: each distinct sum with the number
/// of pairs producing it. Probabilities are count / (|A| |B|).
struct SumLaw {
    std::vector<Poly> values;
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
};

SumLaw sum_law(const PolySet& a, const PolySet& b, std::uint64_t cap = kDefaultSetCap);

/// Entropy of an integer-weighted law, base `base`, evaluated as log N - (1/N) sum c log c.
double entropy(const SumLaw& law, double base);

struct EntropicDistance {
    double h_sum = 0;  // H(X + Y)
    double h_a = 0;    // H(U_A) = log_q |A|
    double h_b = 0;
    double distance = 0;  // H(X + Y) - (H(X) + H(Y)) / 2
};

/// Entropic Ruzsa distance d[U_A; U_B] in base q.
EntropicDistance entropic_distance(const PolySet& a, const PolySet& b, std::uint64_t cap = kDefaultSetCap);

} // namespace fqt
