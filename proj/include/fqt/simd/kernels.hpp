#pragma once

// Data-parallel row kernels over F_q coefficient vectors.
//
// Every kernel has a scalar reference implementation. Vector variants (AVX2 on x86-64, NEON on AArch64)
// are selected once at runtime and must agree with the scalar kernels bit for bit; fields a vector
// variant cannot handle (odd-characteristic extensions, large q) are forwarded to the scalar code.

#include "fqt/field.hpp"

#include <cstddef>
#include <span>
#include <string_view>

namespace fqt::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;

struct Kernels {
    Isa isa;
    // dst[i] = x[i] + y[i]
    void (*add)(const Field&, Elem* dst, const Elem* x, const Elem* y, std::size_t n);
    // dst[i] = x[i] - y[i]
    void (*sub)(const Field&, Elem* dst, const Elem* x, const Elem* y, std::size_t n);
    // dst[i] += c * src[i]
    void (*axpy)(const Field&, Elem* dst, const Elem* src, Elem c, std::size_t n);
    // dst[i] *= c
    void (*scale)(const Field&, Elem* dst, Elem c, std::size_t n);
};

const Kernels& scalar_kernels() noexcept;

/// Vector kernels for `isa` if compiled in and supported by this CPU, else nullptr.
const Kernels* kernels_for(Isa isa) noexcept;

/// Best available kernel set. Honours FQT_SIMD=scalar|avx2|neon in the environment on first use.
const Kernels& active() noexcept;

/// Overrides the active kernel set (tests and benchmarks). Returns false if `isa` is unavailable.
bool select(Isa isa) noexcept;

inline void add(const Field& f, std::span<Elem> dst, std::span<const Elem> x, std::span<const Elem> y) {
    active().add(f, dst.data(), x.data(), y.data(), dst.size());
}
inline void sub(const Field& f, std::span<Elem> dst, std::span<const Elem> x, std::span<const Elem> y) {
    active().sub(f, dst.data(), x.data(), y.data(), dst.size());
}
inline void axpy(const Field& f, std::span<Elem> dst, std::span<const Elem> src, Elem c) {
    active().axpy(f, dst.data(), src.data(), c, dst.size());
}
inline void scale(const Field& f, std::span<Elem> dst, Elem c) {
    active().scale(f, dst.data(), c, dst.size());
}

namespace detail {
// Field shapes the vector kernels accept.
inline bool vector_add_ok(const Field& f) noexcept { return f.is_binary() || (f.is_prime() && f.p() < 128); }
inline bool vector_mul_ok(const Field& f) noexcept { return vector_add_ok(f) && f.q() <= 64; }

const Kernels* avx2_kernels() noexcept;
const Kernels* neon_kernels() noexcept;
} // namespace detail

} // namespace fqt::simd
