#include "fqt/rowset.hpp"

#include "fqt/errors.hpp"
#include "fqt/simd/kernels.hpp"

#include <string_view>
#include <unordered_map>

namespace fqt {

void RowMatrix::push(std::span<const Elem> r) {
    if (r.size() != width_) throw InvariantError("row width mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++count_;
}

namespace {

std::string_view key_of(std::span<const Elem> r) {
    return {reinterpret_cast<const char*>(r.data()), r.size()};
}

// Calls sink(row) for every row of lhs (op) rhs, one kernel pass per lhs row.
template <class Sink>
void for_each_pair(const Field& f, const RowMatrix& lhs, const RowMatrix& rhs, RowOp op, Sink&& sink) {
    if (lhs.width() != rhs.width()) throw InvariantError("row width mismatch in sumset");
    const std::size_t w = lhs.width();
    const std::size_t nb = rhs.rows();
    std::vector<Elem> tiled(nb * w);
    std::vector<Elem> block(nb * w);
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        // Broadcast the lhs row across the block so the kernel sees one contiguous run.
        const auto a = lhs.row(i);
        for (std::size_t j = 0; j < nb; ++j) std::copy(a.begin(), a.end(), tiled.begin() + static_cast<std::ptrdiff_t>(j * w));
        if (op == RowOp::Add)
            simd::add(f, block, tiled, rhs.data());
        else
            simd::sub(f, block, tiled, rhs.data());
        for (std::size_t j = 0; j < nb; ++j) sink(std::span<const Elem>(block.data() + j * w, w));
    }
}

} // namespace

RowMatrix row_sumset(const Field& f, const RowMatrix& lhs, const RowMatrix& rhs, RowOp op, std::uint64_t cap) {
    RowMatrix out(lhs.width());
    if (lhs.rows() == 0 || rhs.rows() == 0) return out;
    std::unordered_set<std::string> seen;
    for_each_pair(f, lhs, rhs, op, [&](std::span<const Elem> r) {
        if (seen.emplace(key_of(r)).second) {
            if (seen.size() > cap) throw ResourceError("set size exceeds cap " + std::to_string(cap));
            out.push(r);
        }
    });
    return out;
}

RowHistogram row_sum_histogram(const Field& f, const RowMatrix& lhs, const RowMatrix& rhs, std::uint64_t cap) {
    RowHistogram h{RowMatrix(lhs.width()), {}};
    std::unordered_map<std::string, std::size_t> index;
    for_each_pair(f, lhs, rhs, RowOp::Add, [&](std::span<const Elem> r) {
        auto [it, fresh] = index.emplace(key_of(r), h.counts.size());
        if (fresh) {
            if (index.size() > cap) throw ResourceError("set size exceeds cap " + std::to_string(cap));
            h.rows.push(r);
            h.counts.push_back(0);
        }
        ++h.counts[it->second];
    });
    return h;
}

} // namespace fqt
