#include "fqt/structure.hpp"

#include "fqt/echelon.hpp"
#include "fqt/errors.hpp"

#include <algorithm>

namespace fqt {

std::vector<Poly> StrongDecomposition::generators() const {
    std::vector<Poly> out;
    for (const Block& b : blocks)
        for (std::size_t j = 0; j < b.d; ++j) out.push_back(b.y.shifted(j));
    return out;
}

namespace {

bool ordering_strict(const std::vector<Block>& blocks) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].d == 0 || blocks[i].y.is_zero()) return false;
        if (i > 0 && blocks[i - 1].reach() >= blocks[i].reach()) return false;
    }
    return true;
}

std::size_t total_length(const std::vector<Block>& blocks) {
    std::size_t n = 0;
    for (const Block& b : blocks) n += b.d;
    return n;
}

void check_step(const FieldPtr& field, const std::vector<Block>& blocks, std::size_t expected_dim) {
    if (!ordering_strict(blocks)) throw InvariantError("decompose: block ordering violated");
    const StrongDecomposition d{field, blocks};
    const std::size_t n = total_length(blocks);
    if (n != expected_dim || Subspace::span(field, d.generators()).dim() != n)
        throw InvariantError("decompose: sum is not direct");
}

} // namespace

StrongDecomposition decompose(const Subspace& v) {
    const FieldPtr& field = v.field();
    const Field& f = *field;
    std::vector<Block> blocks;
    const auto& basis = v.basis();

    for (std::size_t s = 0; s < basis.size(); ++s) {
        const Poly& x = basis[s];
        bool merged = false;
        if (!blocks.empty()) {
            // Rows: t^{d_i} y_i for each block, then x_1..x_{s+1}. A left-kernel vector (a, b) pairs an
            // element sum a_i t^{d_i} y_i of W with its negated expression in V_{<=s+1}.
            std::vector<Poly> tops;
            for (const Block& b : blocks) tops.push_back(b.y.shifted(b.d));
            Degree top = x.degree();
            for (const Poly& p : tops) top = std::max(top, p.degree());
            const std::size_t width = static_cast<std::size_t>(top) + 1;
            std::vector<Row> rows;
            for (const Poly& p : tops) rows.push_back(p.dense(width));
            for (std::size_t i = 0; i <= s; ++i) rows.push_back(basis[i].dense(width));

            const std::vector<Row> ker = left_kernel(field, rows, width);
            if (ker.size() > 1) throw InvariantError("decompose: W cap V_{<=s+1} has dimension > 1");
            if (ker.size() == 1) {
                std::vector<Elem> alpha(ker[0].begin(), ker[0].begin() + static_cast<std::ptrdiff_t>(blocks.size()));
                Poly z = Poly::zero(field);
                for (std::size_t i = 0; i < blocks.size(); ++i)
                    if (alpha[i] != 0) z = z + tops[i].scaled(alpha[i]);
                if (z.is_zero()) throw InvariantError("decompose: dependency among the echelon basis");
                const Elem norm = f.inv(z.leading());
                for (Elem& a : alpha) a = f.mul(a, norm);

                std::size_t pick = blocks.size();
                for (std::size_t i = 0; i < blocks.size(); ++i)
                    if (alpha[i] != 0 && (pick == blocks.size() || blocks[i].d < blocks[pick].d)) pick = i;
                const std::size_t dmin = blocks[pick].d;

                Poly y = Poly::zero(field);
                for (std::size_t j = 0; j < blocks.size(); ++j)
                    if (alpha[j] != 0) y = y + blocks[j].y.shifted(blocks[j].d - dmin).scaled(alpha[j]);
                y = y.monic();

                blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(pick));
                blocks.push_back(Block{dmin + 1, std::move(y)});
                merged = true;
            }
        }
        if (!merged) blocks.push_back(Block{1, x});
        check_step(field, blocks, s + 1);
    }
    return StrongDecomposition{field, std::move(blocks)};
}

DecompositionReport verify_decomposition(const Subspace& v, const StrongDecomposition& d) {
    if (!same_field(v.field(), d.field)) throw InputError("decomposition over a different field");
    DecompositionReport r;
    r.rank = d.rank();
    r.weak_dim = weak_dim(v);
    r.ordering_strict = ordering_strict(d.blocks);
    const Subspace spanned = Subspace::span(v.field(), d.generators());
    r.direct = spanned.dim() == total_length(d.blocks);
    r.spans = spanned == v;
    return r;
}

} // namespace fqt
