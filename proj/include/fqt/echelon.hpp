#pragma once

#include "fqt/field.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace fqt {

using Row = std::vector<Elem>;

/**
 * Incrementally maintained fully reduced echelon form over F_q.
 *
 * The pivot of a row is its highest nonzero position (the degree, for polynomial rows). Every stored row
 * is monic at its pivot and vanishes at every other row's pivot, so the stored basis of a given span is
 * unique. All row updates go through the simd kernels.
 */
class Echelon {
public:
    Echelon(FieldPtr field, std::size_t width);

    std::size_t width() const noexcept { return width_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const FieldPtr& field() const noexcept { return field_; }

    /// Reduces `v` in place against the stored rows; afterwards v vanishes at every pivot.
    void reduce(std::span<Elem> v) const;

    /// Adds `v` to the span. Returns false (and leaves the form unchanged) if it was already in it.
    bool insert(std::span<const Elem> v);

    bool contains(std::span<const Elem> v) const;

    /// Stored rows ordered by increasing pivot.
    std::vector<Row> rows() const;
    std::vector<std::size_t> pivots() const;

private:
    FieldPtr field_;
    std::size_t width_;
    std::vector<Row> rows_;
    std::vector<long> row_at_pivot_;  // -1 when the column holds no pivot
};

/// Highest nonzero index of `v`, or nullopt for the zero row.
std::optional<std::size_t> pivot_of(std::span<const Elem> v) noexcept;

/// Basis of {c : sum_i c_i * rows[i] = 0}, each vector of length rows.size(), in reduced echelon form.
std::vector<Row> left_kernel(const FieldPtr& field, const std::vector<Row>& rows, std::size_t width);

} // namespace fqt
