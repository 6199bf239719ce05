// Compiled with -mavx2; only reached after a runtime CPU check.
#include "fqt/simd/kernels.hpp"

#include <immintrin.h>


namespace fqt::simd {

namespace {

constexpr std::size_t kLanes = 32;

// Up to 64-entry byte table split into 16-byte slices, each broadcast to both 128-bit lanes for pshufb.
struct Lut64 {
    __m256i slice[4] = {};
    unsigned slices = 0;

    explicit Lut64(std::span<const Elem> table) {
        slices = static_cast<unsigned>((table.size() + 15) / 16);
        for (unsigned k = 0; k < slices; ++k) {
            alignas(16) Elem buf[16] = {};
            for (unsigned i = 0; i < 16 && 16 * k + i < table.size(); ++i) buf[i] = table[16 * k + i];
            const __m128i s = _mm_load_si128(reinterpret_cast<const __m128i*>(buf));
            slice[k] = _mm256_broadcastsi128_si256(s);
        }
    }

    __m256i lookup(__m256i idx) const {
        const __m256i low_nibble = _mm256_and_si256(idx, _mm256_set1_epi8(0x0F));
        if (slices == 1) return _mm256_shuffle_epi8(slice[0], low_nibble);
        const __m256i high = _mm256_and_si256(_mm256_srli_epi16(idx, 4), _mm256_set1_epi8(0x0F));
        __m256i out = _mm256_setzero_si256();
        for (unsigned k = 0; k < slices; ++k) {
            const __m256i hit = _mm256_cmpeq_epi8(high, _mm256_set1_epi8(static_cast<char>(k)));
            out = _mm256_or_si256(out, _mm256_and_si256(hit, _mm256_shuffle_epi8(slice[k], low_nibble)));
        }
        return out;
    }
};

// a + b for prime p < 128: s = a + b < 2p, result = min(s, s - p) with wrapping subtraction.
inline __m256i add_mod_p(__m256i a, __m256i b, __m256i vp) {
    const __m256i s = _mm256_add_epi8(a, b);
    return _mm256_min_epu8(s, _mm256_sub_epi8(s, vp));
}

// a - b for prime p < 128: s = a - b wraps to >= 256 - p + 1 when negative, s + p is then the answer.
inline __m256i sub_mod_p(__m256i a, __m256i b, __m256i vp) {
    const __m256i s = _mm256_sub_epi8(a, b);
    return _mm256_min_epu8(s, _mm256_add_epi8(s, vp));
}

inline __m256i load(const Elem* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Elem* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void add_avx2(const Field& f, Elem* dst, const Elem* x, const Elem* y, std::size_t n) {
    if (!detail::vector_add_ok(f)) return scalar_kernels().add(f, dst, x, y, n);
    std::size_t i = 0;
    if (f.is_binary()) {
        for (; i + kLanes <= n; i += kLanes) store(dst + i, _mm256_xor_si256(load(x + i), load(y + i)));
    } else {
        const __m256i vp = _mm256_set1_epi8(static_cast<char>(f.p()));
        for (; i + kLanes <= n; i += kLanes) store(dst + i, add_mod_p(load(x + i), load(y + i), vp));
    }
    scalar_kernels().add(f, dst + i, x + i, y + i, n - i);
}

void sub_avx2(const Field& f, Elem* dst, const Elem* x, const Elem* y, std::size_t n) {
    if (!detail::vector_add_ok(f)) return scalar_kernels().sub(f, dst, x, y, n);
    std::size_t i = 0;
    if (f.is_binary()) {
        for (; i + kLanes <= n; i += kLanes) store(dst + i, _mm256_xor_si256(load(x + i), load(y + i)));
    } else {
        const __m256i vp = _mm256_set1_epi8(static_cast<char>(f.p()));
        for (; i + kLanes <= n; i += kLanes) store(dst + i, sub_mod_p(load(x + i), load(y + i), vp));
    }
    scalar_kernels().sub(f, dst + i, x + i, y + i, n - i);
}

void axpy_avx2(const Field& f, Elem* dst, const Elem* src, Elem c, std::size_t n) {
    if (c == 0) return;
    if (!detail::vector_mul_ok(f)) return scalar_kernels().axpy(f, dst, src, c, n);
    const Lut64 mul_c(f.mul_row(c));
    std::size_t i = 0;
    if (f.is_binary()) {
        for (; i + kLanes <= n; i += kLanes)
            store(dst + i, _mm256_xor_si256(load(dst + i), mul_c.lookup(load(src + i))));
    } else {
        const __m256i vp = _mm256_set1_epi8(static_cast<char>(f.p()));
        for (; i + kLanes <= n; i += kLanes)
            store(dst + i, add_mod_p(load(dst + i), mul_c.lookup(load(src + i)), vp));
    }
    scalar_kernels().axpy(f, dst + i, src + i, c, n - i);
}

void scale_avx2(const Field& f, Elem* dst, Elem c, std::size_t n) {
    if (!detail::vector_mul_ok(f)) return scalar_kernels().scale(f, dst, c, n);
    const Lut64 mul_c(f.mul_row(c));
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) store(dst + i, mul_c.lookup(load(dst + i)));
    scalar_kernels().scale(f, dst + i, c, n - i);
}

constexpr Kernels kAvx2{Isa::Avx2, add_avx2, sub_avx2, axpy_avx2, scale_avx2};

} // namespace

const Kernels* detail::avx2_kernels() noexcept { return &kAvx2; }

} // namespace fqt::simd
