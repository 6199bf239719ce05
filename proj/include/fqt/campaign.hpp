#pragma once

#include "fqt/io.hpp"
#include "fqt/structure.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>

namespace fqt::campaign {

/// Number of k-dimensional subspaces of F_q^n (Gaussian binomial), saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(unsigned n, unsigned k, unsigned q);
/// Total number of subspaces of F_q^n.
std::uint64_t subspace_count(unsigned n, unsigned q);

/// Visits every subspace of Pol(n) once, generated directly in reduced echelon form. Throws
/// ResourceError up front if there are more than `cap` of them.
void for_each_subspace(const FieldPtr& field, unsigned n, std::uint64_t cap,
                       const std::function<void(const Subspace&)>& visit);

/// Uniform reduced echelon basis: dim uniform in [0, min(max_dim, max_degree + 1)], then a uniform
/// pivot-degree set in [0, max_degree] and uniform free coefficients.
Subspace sample_subspace(const FieldPtr& field, unsigned max_dim, unsigned max_degree, std::mt19937_64& rng);

/// Seed for sample `index` of a campaign; samples are independent of worker scheduling.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) noexcept;

struct InstanceResult {
    std::size_t dim = 0;
    std::size_t weak_dim = 0;
    std::size_t rank = 0;
    bool valid = false;    // ordering, directness, span equality
    bool minimal = false;  // rank == weak_dim
    std::optional<std::size_t> oracle;
    bool oracle_skipped = false;
    std::string error;  // invariant failure message, empty when none

    bool passed() const noexcept { return error.empty() && valid && minimal && (!oracle || *oracle == rank); }
};

/// decompose + verify_decomposition on one subspace, plus the structural oracle when `oracle` is set
/// (skipped, not failed, when the oracle hits its caps).
InstanceResult check_instance(const Subspace& v, const std::optional<OracleLimits>& oracle = std::nullopt);

struct Summary {
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    std::uint64_t oracle_checked = 0;
    std::uint64_t oracle_disagreements = 0;
    std::uint64_t oracle_skipped = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> cells;  // (dim, weak_dim) -> count
    std::vector<std::string> failure_notes;                              // first few failures

    void add(const InstanceResult& r, const std::string& label);
    bool passed() const noexcept { return failures == 0; }
};

struct ExhaustiveReport {
    std::string field;
    unsigned n = 0;
    std::uint64_t expected_total = 0;  // closed-form Gaussian binomial sum
    Summary summary;

    bool passed() const noexcept { return summary.passed() && summary.instances == expected_total; }
};

ExhaustiveReport verify_exhaustive(const FieldPtr& field, unsigned n, std::uint64_t cap = 1'000'000,
                                   const std::optional<OracleLimits>& oracle = std::nullopt);

struct CampaignConfig {
    io::FieldSpec field{2, 1, std::nullopt};
    std::uint64_t samples = 1000;
    unsigned max_dim = 8;
    unsigned max_degree = 16;
    std::uint64_t seed = 1;
    bool use_oracle = true;
    OracleLimits oracle{4096, 200'000};
    unsigned threads = 1;
};

Summary random_verify(const CampaignConfig& config);

} // namespace fqt::campaign
