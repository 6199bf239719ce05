#include "fqt/echelon.hpp"

#include "fqt/errors.hpp"
#include "fqt/simd/kernels.hpp"

#include <algorithm>

namespace fqt {

std::optional<std::size_t> pivot_of(std::span<const Elem> v) noexcept {
    for (std::size_t i = v.size(); i-- > 0;)
        if (v[i] != 0) return i;
    return std::nullopt;
}

Echelon::Echelon(FieldPtr field, std::size_t width)
    : field_(std::move(field)), width_(width), row_at_pivot_(width, -1) {}

void Echelon::reduce(std::span<Elem> v) const {
    if (v.size() != width_) throw InvariantError("row width mismatch in echelon reduction");
    const Field& f = *field_;
    for (const Row& row : rows_) {
        const std::size_t piv = *pivot_of(row);
        if (const Elem c = v[piv]; c != 0) simd::axpy(f, v, row, f.neg(c));
    }
}

bool Echelon::insert(std::span<const Elem> v_in) {
    Row v(v_in.begin(), v_in.end());
    reduce(v);
    const auto piv = pivot_of(v);
    if (!piv) return false;
    const Field& f = *field_;
    if (v[*piv] != 1) simd::scale(f, v, f.inv(v[*piv]));
    for (Row& row : rows_)
        if (const Elem c = row[*piv]; c != 0) simd::axpy(f, row, v, f.neg(c));
    row_at_pivot_[*piv] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

bool Echelon::contains(std::span<const Elem> v_in) const {
    Row v(v_in.begin(), v_in.end());
    reduce(v);
    return !pivot_of(v).has_value();
}

std::vector<Row> Echelon::rows() const {
    std::vector<Row> out;
    out.reserve(rows_.size());
    for (long idx : row_at_pivot_)
        if (idx >= 0) out.push_back(rows_[static_cast<std::size_t>(idx)]);
    return out;
}

std::vector<std::size_t> Echelon::pivots() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < width_; ++i)
        if (row_at_pivot_[i] >= 0) out.push_back(i);
    return out;
}

std::vector<Row> left_kernel(const FieldPtr& field, const std::vector<Row>& rows, std::size_t width) {
    // Augment row i as [e_i | rows[i]] with the identity block in the low (non-preferred) positions;
    // rows of the reduced form whose pivot lands in the identity block carry a kernel vector.
    const std::size_t m = rows.size();
    Echelon ech(field, m + width);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() > width) throw InvariantError("row wider than declared width");
        Row aug(m + width, 0);
        aug[i] = 1;
        std::copy(rows[i].begin(), rows[i].end(), aug.begin() + static_cast<std::ptrdiff_t>(m));
        ech.insert(aug);
    }
    std::vector<Row> kernel;
    for (const Row& r : ech.rows()) {
        if (*pivot_of(r) >= m) continue;
        kernel.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(m));
    }
    return kernel;
}

} // namespace fqt
