#include <immintrin.h>

#include "tpoly/gf2.hpp"

namespace tpoly::gf2::detail {

void xor_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < words; ++i) dst[i] ^= src[i];
}

std::size_t scan_avx2(const std::uint64_t* row, std::size_t begin, std::size_t words) {
    std::size_t i = begin;
    for (; i < words && (i & 3); ++i)
        if (row[i]) return i;
    for (; i + 4 <= words; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
        if (!_mm256_testz_si256(v, v)) {
            for (std::size_t j = i; j < i + 4; ++j)
                if (row[j]) return j;
        }
    }
    for (; i < words; ++i)
        if (row[i]) return i;
    return words;
}

}  // namespace tpoly::gf2::detail
