#include "fqt/simd/kernels.hpp"

namespace fqt::simd {

namespace {

void add_scalar(const Field& f, Elem* dst, const Elem* x, const Elem* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = f.add(x[i], y[i]);
}

void sub_scalar(const Field& f, Elem* dst, const Elem* x, const Elem* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = f.sub(x[i], y[i]);
}

void axpy_scalar(const Field& f, Elem* dst, const Elem* src, Elem c, std::size_t n) {
    if (c == 0) return;
    const auto row = f.mul_row(c);
    for (std::size_t i = 0; i < n; ++i) dst[i] = f.add(dst[i], row[src[i]]);
}

void scale_scalar(const Field& f, Elem* dst, Elem c, std::size_t n) {
    const auto row = f.mul_row(c);
    for (std::size_t i = 0; i < n; ++i) dst[i] = row[dst[i]];
}

constexpr Kernels kScalar{Isa::Scalar, add_scalar, sub_scalar, axpy_scalar, scale_scalar};

} // namespace

const Kernels& scalar_kernels() noexcept { return kScalar; }

} // namespace fqt::simd
