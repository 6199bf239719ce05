// AArch64 Advanced SIMD variants. NEON is architecturally guaranteed on AArch64, so no runtime probe.
#include "fqt/simd/kernels.hpp"

#include <arm_neon.h>

namespace fqt::simd {

namespace {

constexpr std::size_t kLanes = 16;

// tbl lookup returns 0 for indices >= 16 * slices, which never occur for valid elements.
struct Lut64 {
    uint8x16x4_t table{};

    explicit Lut64(std::span<const Elem> row) {
        alignas(16) Elem buf[64] = {};
        for (std::size_t i = 0; i < row.size() && i < 64; ++i) buf[i] = row[i];
        table = vld1q_u8_x4(buf);
    }

    uint8x16_t lookup(uint8x16_t idx) const { return vqtbl4q_u8(table, idx); }
};

inline uint8x16_t add_mod_p(uint8x16_t a, uint8x16_t b, uint8x16_t vp) {
    const uint8x16_t s = vaddq_u8(a, b);
    return vminq_u8(s, vsubq_u8(s, vp));
}

inline uint8x16_t sub_mod_p(uint8x16_t a, uint8x16_t b, uint8x16_t vp) {
    const uint8x16_t s = vsubq_u8(a, b);
    return vminq_u8(s, vaddq_u8(s, vp));
}

void add_neon(const Field& f, Elem* dst, const Elem* x, const Elem* y, std::size_t n) {
    if (!detail::vector_add_ok(f)) return scalar_kernels().add(f, dst, x, y, n);
    std::size_t i = 0;
    if (f.is_binary()) {
        for (; i + kLanes <= n; i += kLanes) vst1q_u8(dst + i, veorq_u8(vld1q_u8(x + i), vld1q_u8(y + i)));
    } else {
        const uint8x16_t vp = vdupq_n_u8(static_cast<uint8_t>(f.p()));
        for (; i + kLanes <= n; i += kLanes) vst1q_u8(dst + i, add_mod_p(vld1q_u8(x + i), vld1q_u8(y + i), vp));
    }
    scalar_kernels().add(f, dst + i, x + i, y + i, n - i);
}

void sub_neon(const Field& f, Elem* dst, const Elem* x, const Elem* y, std::size_t n) {
    if (!detail::vector_add_ok(f)) return scalar_kernels().sub(f, dst, x, y, n);
    std::size_t i = 0;
    if (f.is_binary()) {
        for (; i + kLanes <= n; i += kLanes) vst1q_u8(dst + i, veorq_u8(vld1q_u8(x + i), vld1q_u8(y + i)));
    } else {
        const uint8x16_t vp = vdupq_n_u8(static_cast<uint8_t>(f.p()));
        for (; i + kLanes <= n; i += kLanes) vst1q_u8(dst + i, sub_mod_p(vld1q_u8(x + i), vld1q_u8(y + i), vp));
    }
    scalar_kernels().sub(f, dst + i, x + i, y + i, n - i);
}

void axpy_neon(const Field& f, Elem* dst, const Elem* src, Elem c, std::size_t n) {
    if (c == 0) return;
    if (!detail::vector_mul_ok(f)) return scalar_kernels().axpy(f, dst, src, c, n);
    const Lut64 mul_c(f.mul_row(c));
    std::size_t i = 0;
    if (f.is_binary()) {
        for (; i + kLanes <= n; i += kLanes)
            vst1q_u8(dst + i, veorq_u8(vld1q_u8(dst + i), mul_c.lookup(vld1q_u8(src + i))));
    } else {
        const uint8x16_t vp = vdupq_n_u8(static_cast<uint8_t>(f.p()));
        for (; i + kLanes <= n; i += kLanes)
            vst1q_u8(dst + i, add_mod_p(vld1q_u8(dst + i), mul_c.lookup(vld1q_u8(src + i)), vp));
    }
    scalar_kernels().axpy(f, dst + i, src + i, c, n - i);
}

void scale_neon(const Field& f, Elem* dst, Elem c, std::size_t n) {
    if (!detail::vector_mul_ok(f)) return scalar_kernels().scale(f, dst, c, n);
    const Lut64 mul_c(f.mul_row(c));
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) vst1q_u8(dst + i, mul_c.lookup(vld1q_u8(dst + i)));
    scalar_kernels().scale(f, dst + i, c, n - i);
}

constexpr Kernels kNeon{Isa::Neon, add_neon, sub_neon, axpy_neon, scale_neon};

} // namespace

const Kernels* detail::neon_kernels() noexcept { return &kNeon; }

} // namespace fqt::simd
