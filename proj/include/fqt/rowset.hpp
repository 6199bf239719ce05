#pragma once

// Flat dense-row storage shared by the polynomial and bivariate set engines. Each element of a finite
// set is one fixed-width row of F_q coefficients; sums of sets become row kernels over contiguous memory.

#include "fqt/field.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace fqt {

class RowMatrix {
public:
    RowMatrix() = default;
    explicit RowMatrix(std::size_t width) : width_(width) {}

    std::size_t width() const noexcept { return width_; }
    std::size_t rows() const noexcept { return count_; }
    std::span<const Elem> row(std::size_t i) const noexcept { return {data_.data() + i * width_, width_}; }
    std::span<Elem> row(std::size_t i) noexcept { return {data_.data() + i * width_, width_}; }
    void push(std::span<const Elem> r);
    void resize_rows(std::size_t n) {
        data_.assign(n * width_, 0);
        count_ = n;
    }
    std::span<const Elem> data() const noexcept { return data_; }

private:
    std::size_t width_ = 0;
    std::size_t count_ = 0;
    std::vector<Elem> data_;
};

enum class RowOp { Add, Sub };

/// Distinct rows of { a (op) b : a in lhs, b in rhs } in first-seen order. Both matrices share a width.
/// Throws ResourceError once more than `cap` distinct rows appear.
RowMatrix row_sumset(const Field& f, const RowMatrix& lhs, const RowMatrix& rhs, RowOp op, std::uint64_t cap);

/// Multiset of sums: distinct rows of lhs + rhs with their multiplicities.
struct RowHistogram {
    RowMatrix rows;
    std::vector<std::uint64_t> counts;
};
RowHistogram row_sum_histogram(const Field& f, const RowMatrix& lhs, const RowMatrix& rhs, std::uint64_t cap);

} // namespace fqt
