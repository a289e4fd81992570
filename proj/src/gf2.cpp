#include "tpoly/gf2.hpp"

#include <bit>

#include "tpoly/error.hpp"

namespace tpoly::gf2 {

namespace detail {

void xor_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

std::size_t scan_scalar(const std::uint64_t* row, std::size_t begin, std::size_t words) {
    for (std::size_t i = begin; i < words; ++i)
        if (row[i]) return i;
    return words;
}

}  // namespace detail

namespace {

Kernel detect() { return avx2_supported() ? Kernel::Avx2 : Kernel::Scalar; }

Kernel& current() {
    static Kernel k = detect();
    return k;
}

}  // namespace

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Kernel active_kernel() { return current(); }

void set_kernel(Kernel k) {
    if (k == Kernel::Avx2 && !avx2_supported()) fail_validation("AVX2 kernel requested on a CPU without AVX2");
    current() = k;
}

const char* kernel_name(Kernel k) { return k == Kernel::Avx2 ? "avx2" : "scalar"; }

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    if (current() == Kernel::Avx2) detail::xor_avx2(dst, src, words);
    else detail::xor_scalar(dst, src, words);
}

std::size_t find_nonzero(const std::uint64_t* row, std::size_t begin, std::size_t words) {
    return current() == Kernel::Avx2 ? detail::scan_avx2(row, begin, words) : detail::scan_scalar(row, begin, words);
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

std::size_t rank(BitMatrix m) {
    const std::size_t words = m.words();
    std::vector<std::ptrdiff_t> pivot_row(m.cols(), -1);
    std::size_t r = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint64_t* row = m.row(i);
        std::size_t w = 0;
        while ((w = find_nonzero(row, w, words)) < words) {
            const std::size_t bit = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
            if (pivot_row[bit] < 0) {
                pivot_row[bit] = static_cast<std::ptrdiff_t>(i);
                ++r;
                break;
            }
            xor_into(row + w, m.row(static_cast<std::size_t>(pivot_row[bit])) + w, words - w);
        }
    }
    return r;
}

}  // namespace tpoly::gf2
