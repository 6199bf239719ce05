#include "fqt/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace fqt::simd {

#if !defined(FQT_HAVE_AVX2)
const Kernels* detail::avx2_kernels() noexcept { return nullptr; }
#endif
#if !defined(FQT_HAVE_NEON)
const Kernels* detail::neon_kernels() noexcept { return nullptr; }
#endif

namespace {

bool cpu_has_avx2() noexcept {
#if defined(FQT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Kernels& pick_default() noexcept {
    if (const char* env = std::getenv("FQT_SIMD")) {
        const std::string want(env);
        if (want == "scalar") return scalar_kernels();
        if (want == "avx2")
            if (const Kernels* k = kernels_for(Isa::Avx2)) return *k;
        if (want == "neon")
            if (const Kernels* k = kernels_for(Isa::Neon)) return *k;
    }
    if (const Kernels* k = kernels_for(Isa::Avx2)) return *k;
    if (const Kernels* k = kernels_for(Isa::Neon)) return *k;
    return scalar_kernels();
}

std::atomic<const Kernels*>& slot() noexcept {
    static std::atomic<const Kernels*> current{&pick_default()};
    return current;
}

} // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
    }
    return "unknown";
}

const Kernels* kernels_for(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar: return &scalar_kernels();
    case Isa::Avx2: return cpu_has_avx2() ? detail::avx2_kernels() : nullptr;
    case Isa::Neon: return detail::neon_kernels();
    }
    return nullptr;
}

const Kernels& active() noexcept { return *slot().load(std::memory_order_relaxed); }

bool select(Isa isa) noexcept {
    const Kernels* k = kernels_for(isa);
    if (!k) return false;
    slot().store(k, std::memory_order_relaxed);
    return true;
}

} // namespace fqt::simd
