#include "fqt/campaign.hpp"

#include "fqt/errors.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace fqt::campaign {

std::uint64_t gaussian_binomial(unsigned n, unsigned k, unsigned q) {
    if (k > n) return 0;
    // [n, j] = [n, j-1] (q^{n-j+1} - 1) / (q^j - 1), an integer at every step.
    unsigned __int128 g = 1;
    auto qpow = [q](unsigned e) {
        unsigned __int128 v = 1;
        for (unsigned i = 0; i < e; ++i) {
            v *= q;
            if (v > (static_cast<unsigned __int128>(1) << 100)) return v;
        }
        return v;
    };
    for (unsigned j = 1; j <= k; ++j) {
        const unsigned __int128 num = qpow(n - j + 1) - 1;
        const unsigned __int128 den = qpow(j) - 1;
        if (g > (static_cast<unsigned __int128>(1) << 64) || num > (static_cast<unsigned __int128>(1) << 63))
            return UINT64_MAX;
        g = g * num / den;
    }
    return g > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(g);
}

std::uint64_t subspace_count(unsigned n, unsigned q) {
    std::uint64_t total = 0;
    for (unsigned k = 0; k <= n; ++k) {
        const std::uint64_t g = gaussian_binomial(n, k, q);
        if (g == UINT64_MAX || total > UINT64_MAX - g) return UINT64_MAX;
        total += g;
    }
    return total;
}

void for_each_subspace(const FieldPtr& field, unsigned n, std::uint64_t cap,
                       const std::function<void(const Subspace&)>& visit) {
    const std::uint64_t total = subspace_count(n, field->q());
    if (n > 30 || total > cap) throw ResourceError("Pol(" + std::to_string(n) + ") has more than " + std::to_string(cap) + " subspaces");
    const unsigned q = field->q();

    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<unsigned> pivots;
        for (unsigned d = 0; d < n; ++d)
            if (mask >> d & 1u) pivots.push_back(d);
        // Free slots: for the generator with pivot p, every non-pivot degree below p.
        std::vector<std::pair<std::size_t, unsigned>> free;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (unsigned d = 0; d < pivots[i]; ++d)
                if (!(mask >> d & 1u)) free.emplace_back(i, d);

        std::vector<Elem> digits(free.size(), 0);
        while (true) {
            std::vector<Poly> basis;
            for (std::size_t i = 0; i < pivots.size(); ++i) {
                std::vector<Elem> c(pivots[i] + 1, 0);
                c[pivots[i]] = 1;
                basis.emplace_back(field, std::move(c));
            }
            for (std::size_t f = 0; f < free.size(); ++f) {
                if (digits[f] == 0) continue;
                std::vector<Elem> c(basis[free[f].first].coeffs().begin(), basis[free[f].first].coeffs().end());
                c[free[f].second] = digits[f];
                basis[free[f].first] = Poly(field, std::move(c));
            }
            visit(Subspace::span(field, basis));

            std::size_t k = 0;
            while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
            if (k == digits.size()) break;
        }
    }
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    // splitmix64 finaliser over seed and index
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

Subspace sample_subspace(const FieldPtr& field, unsigned max_dim, unsigned max_degree, std::mt19937_64& rng) {
    const unsigned dim_hi = std::min(max_dim, max_degree + 1);
    const unsigned dim = std::uniform_int_distribution<unsigned>(0, dim_hi)(rng);

    std::vector<unsigned> degrees(max_degree + 1);
    std::iota(degrees.begin(), degrees.end(), 0u);
    for (unsigned i = 0; i < dim; ++i) {
        const unsigned j = std::uniform_int_distribution<unsigned>(i, max_degree)(rng);
        std::swap(degrees[i], degrees[j]);
    }
    std::vector<unsigned> pivots(degrees.begin(), degrees.begin() + dim);
    std::sort(pivots.begin(), pivots.end());

    std::uniform_int_distribution<unsigned> coeff(0, field->q() - 1);
    std::vector<Poly> basis;
    for (unsigned piv : pivots) {
        std::vector<Elem> c(piv + 1, 0);
        c[piv] = 1;
        for (unsigned d = 0; d < piv; ++d)
            if (!std::binary_search(pivots.begin(), pivots.end(), d)) c[d] = static_cast<Elem>(coeff(rng));
        basis.emplace_back(field, std::move(c));
    }
    return Subspace::span(field, basis);
}

InstanceResult check_instance(const Subspace& v, const std::optional<OracleLimits>& oracle) {
    InstanceResult r;
    r.dim = v.dim();
    try {
        const StrongDecomposition d = decompose(v);
        const DecompositionReport rep = verify_decomposition(v, d);
        r.weak_dim = rep.weak_dim;
        r.rank = rep.rank;
        r.valid = rep.valid();
        r.minimal = rep.minimal();
    } catch (const InvariantError& e) {
        r.error = e.what();
        return r;
    }
    if (oracle) {
        try {
            r.oracle = struct_dim_oracle(v, *oracle);
        } catch (const ResourceError&) {
            r.oracle_skipped = true;
        }
    }
    return r;
}

void Summary::add(const InstanceResult& r, const std::string& label) {
    ++instances;
    ++cells[{r.dim, r.weak_dim}];
    if (r.oracle) {
        ++oracle_checked;
        if (*r.oracle != r.rank) ++oracle_disagreements;
    }
    if (r.oracle_skipped) ++oracle_skipped;
    if (!r.passed()) {
        ++failures;
        if (failure_notes.size() < 10) {
            std::string why = !r.error.empty() ? r.error
                              : !r.valid   ? "invalid decomposition"
                              : !r.minimal ? "rank " + std::to_string(r.rank) + " != weak_dim " + std::to_string(r.weak_dim)
                                           : "oracle " + std::to_string(*r.oracle) + " != rank " + std::to_string(r.rank);
            failure_notes.push_back(label + ": " + why);
        }
    }
}

ExhaustiveReport verify_exhaustive(const FieldPtr& field, unsigned n, std::uint64_t cap,
                                   const std::optional<OracleLimits>& oracle) {
    ExhaustiveReport rep;
    rep.field = field->spec();
    rep.n = n;
    rep.expected_total = subspace_count(n, field->q());
    for_each_subspace(field, n, cap, [&](const Subspace& v) {
        std::string label;
        for (const Poly& b : v.basis()) label += (label.empty() ? "{" : " | ") + b.to_string();
        rep.summary.add(check_instance(v, oracle), label.empty() ? "{0}" : label + "}");
    });
    return rep;
}

Summary random_verify(const CampaignConfig& config) {
    const FieldPtr field = config.field.make();
    const std::optional<OracleLimits> oracle = config.use_oracle ? std::optional(config.oracle) : std::nullopt;
    std::vector<InstanceResult> results(config.samples);

    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        for (std::uint64_t i = next++; i < config.samples; i = next++) {
            std::mt19937_64 rng(sample_seed(config.seed, i));
            results[i] = check_instance(sample_subspace(field, config.max_dim, config.max_degree, rng), oracle);
        }
    };
    const unsigned threads = std::max(1u, config.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    Summary s;
    for (std::uint64_t i = 0; i < config.samples; ++i) s.add(results[i], "sample " + std::to_string(i));
    return s;
}

} // namespace fqt::campaign
