#include "fqt/echelon.hpp"
#include "fqt/errors.hpp"
#include "fqt/structure.hpp"

#include <algorithm>
#include <map>

namespace fqt {

std::size_t max_block_length(const Subspace& v, const Poly& x) {
    if (x.is_zero()) return v.contains(x) ? static_cast<std::size_t>(-1) : 0;
    std::size_t d = 0;
    while (v.contains(x.shifted(d))) ++d;
    return d;
}

namespace {

// Candidate block Pol(dmax(x)) x, held as a reduced echelon basis in V-coordinates.
struct Candidate {
    std::vector<Row> rows;
    bool reaches_top = false;
};

class Search {
public:
    Search(const FieldPtr& field, std::size_t dim, std::vector<Candidate> cands, std::uint64_t max_nodes)
        : field_(field), dim_(dim), cands_(std::move(cands)), max_nodes_(max_nodes) {}

    bool feasible(std::size_t k) {
        target_ = k;
        // No cancellation happens above the top degree, so some block must reach it; pick that one first.
        for (std::size_t i = 0; i < cands_.size(); ++i) {
            if (!cands_[i].reaches_top) continue;
            charge();
            Echelon first(field_, dim_);
            for (const Row& r : cands_[i].rows) first.insert(r);
            top_ = i;
            if (dfs(0, 1, first)) return true;
        }
        return false;
    }

    void charge() {
        if (++nodes_ > max_nodes_) throw ResourceError("structural dimension search exceeded node cap");
    }

private:
    bool dfs(std::size_t start, std::size_t depth, const Echelon& cur) {
        if (cur.rank() == dim_) return true;
        if (depth == target_) return false;
        for (std::size_t i = start; i < cands_.size(); ++i) {
            charge();
            // Candidates are sorted by dimension, so this is the best any completion can reach.
            std::size_t bound = cur.rank();
            for (std::size_t j = i; j < cands_.size() && j < i + (target_ - depth); ++j) bound += cands_[j].rows.size();
            if (bound < dim_) return false;
            if (i == top_) continue;
            Echelon next = cur;
            bool grew = false;
            for (const Row& r : cands_[i].rows) grew |= next.insert(r);
            if (!grew) continue;
            if (dfs(i + 1, depth + 1, next)) return true;
        }
        return false;
    }

    FieldPtr field_;
    std::size_t dim_;
    std::vector<Candidate> cands_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    std::size_t target_ = 0;
    std::size_t top_ = 0;
};

} // namespace

std::size_t struct_dim_oracle(const Subspace& v, const OracleLimits& limits) {
    const std::size_t dim = v.dim();
    if (dim == 0) return 0;
    const FieldPtr& field = v.field();

    std::map<std::vector<Row>, Candidate> unique;
    for (const Poly& x : v.elements(limits.max_elements)) {
        if (!x.is_monic()) continue;
        const std::size_t dmax = max_block_length(v, x);
        Echelon ech(field, dim);
        for (std::size_t j = 0; j < dmax; ++j) {
            const auto c = v.coordinates(x.shifted(j));
            ech.insert(*c);
        }
        std::vector<Row> rows = ech.rows();
        Candidate cand{rows, !rows.empty() && pivot_of(rows.back()) == dim - 1};
        unique.emplace(std::move(rows), std::move(cand));
    }

    std::vector<Candidate> all;
    for (auto& [key, c] : unique) all.push_back(std::move(c));
    std::stable_sort(all.begin(), all.end(),
                     [](const Candidate& a, const Candidate& b) { return a.rows.size() > b.rows.size(); });

    std::uint64_t budget = limits.max_nodes;
    // Drop blocks contained in a strictly larger one; the larger block does at least as well.
    std::vector<Candidate> kept;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < all.size() && !dominated; ++j) {
            if (all[j].rows.size() <= all[i].rows.size()) break;
            if (budget-- == 0) throw ResourceError("structural dimension search exceeded node cap");
            Echelon big(field, dim);
            for (const Row& r : all[j].rows) big.insert(r);
            dominated = std::all_of(all[i].rows.begin(), all[i].rows.end(), [&](const Row& r) { return big.contains(r); });
        }
        if (!dominated) kept.push_back(all[i]);
    }

    Search run(field, dim, std::move(kept), budget);
    for (std::size_t k = 1; k <= dim; ++k)
        if (run.feasible(k)) return k;
    throw InvariantError("structural dimension search found no decomposition");
}

} // namespace fqt
