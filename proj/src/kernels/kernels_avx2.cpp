// AVX2 variants. This file is compiled with -mavx2 and must only be entered
// after the runtime CPU check in dispatch.cpp.
#include <immintrin.h>

#include "cstar/kernels.hpp"

namespace cstar::kernels {
namespace {

static_assert(sizeof(ExpVec) == 32, "one exponent vector per ymm register");

inline __m256i load(const ExpVec& a) {
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(a.e.data()));
}

inline void store(ExpVec& out, __m256i v) {
  _mm256_store_si256(reinterpret_cast<__m256i*>(out.e.data()), v);
}

void mul_avx2(const ExpVec& a, const ExpVec& b, ExpVec& out) {
  store(out, _mm256_add_epi16(load(a), load(b)));
}

void quot_avx2(const ExpVec& a, const ExpVec& b, ExpVec& out) {
  store(out, _mm256_sub_epi16(load(a), load(b)));
}

void lcm_avx2(const ExpVec& a, const ExpVec& b, ExpVec& out) {
  store(out, _mm256_max_epu16(load(a), load(b)));
}

void gcd_avx2(const ExpVec& a, const ExpVec& b, ExpVec& out) {
  store(out, _mm256_min_epu16(load(a), load(b)));
}

bool divides_avx2(const ExpVec& a, const ExpVec& b) {
  const __m256i vb = load(b);
  const __m256i mx = _mm256_max_epu16(load(a), vb);
  return _mm256_movemask_epi8(_mm256_cmpeq_epi16(mx, vb)) == -1;
}

bool coprime_avx2(const ExpVec& a, const ExpVec& b) {
  const __m256i mn = _mm256_min_epu16(load(a), load(b));
  return _mm256_testz_si256(mn, mn) != 0;
}

// Byte mask of lanes that differ; two bits per 16-bit lane.
inline std::uint32_t diff_mask(const ExpVec& a, const ExpVec& b) {
  const __m256i eq = _mm256_cmpeq_epi16(load(a), load(b));
  return ~static_cast<std::uint32_t>(_mm256_movemask_epi8(eq));
}

int revlex_cmp_avx2(const ExpVec& a, const ExpVec& b) {
  const std::uint32_t m = diff_mask(a, b);
  if (m == 0) return 0;
  const int lane = (31 - __builtin_clz(m)) / 2;
  return a.e[lane] < b.e[lane] ? 1 : -1;
}

int lex_cmp_avx2(const ExpVec& a, const ExpVec& b) {
  const std::uint32_t m = diff_mask(a, b);
  if (m == 0) return 0;
  const int lane = __builtin_ctz(m) / 2;
  return a.e[lane] > b.e[lane] ? 1 : -1;
}

std::int64_t weighted_degree_avx2(const ExpVec& a, const WeightVec& w) {
  const __m256i v = load(a);
  const __m256i lo = _mm256_cvtepu16_epi32(_mm256_castsi256_si128(v));
  const __m256i hi = _mm256_cvtepu16_epi32(_mm256_extracti128_si256(v, 1));
  const __m256i wlo =
      _mm256_load_si256(reinterpret_cast<const __m256i*>(w.w.data()));
  const __m256i whi =
      _mm256_load_si256(reinterpret_cast<const __m256i*>(w.w.data() + 8));
  // Widen the products to 64 bits before summing.
  const __m256i plo = _mm256_mullo_epi32(lo, wlo);
  const __m256i phi = _mm256_mullo_epi32(hi, whi);
  alignas(32) std::int32_t buf[16];
  _mm256_store_si256(reinterpret_cast<__m256i*>(buf), plo);
  _mm256_store_si256(reinterpret_cast<__m256i*>(buf + 8), phi);
  std::int64_t d = 0;
  for (int i = 0; i < 16; ++i) d += buf[i];
  return d;
}

// Vector path is exact for p < 2^15: dst + (p - f) * src < 2^31 and the
// float quotient estimate is off by at most one.
constexpr std::uint32_t kVectorModulusBound = 1u << 15;

inline __m256i reduce_mod(__m256i x, __m256i vp, __m256 inv_p) {
  const __m256i q =
      _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(x), inv_p));
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
  // r in [-p, 2p)
  const __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  r = _mm256_add_epi32(r, _mm256_and_si256(neg, vp));
  const __m256i ge = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(vp, _mm256_set1_epi32(1)));
  r = _mm256_sub_epi32(r, _mm256_and_si256(ge, vp));
  return r;
}

void row_submul_mod_avx2(std::uint32_t* dst, const std::uint32_t* src,
                         std::uint32_t factor, std::uint32_t p,
                         std::size_t n) {
  const std::uint32_t neg = factor == 0 ? 0 : p - factor;
  std::size_t i = 0;
  if (p < kVectorModulusBound) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vf = _mm256_set1_epi32(static_cast<int>(neg));
    const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
    for (; i + 8 <= n; i += 8) {
      const __m256i d =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
      const __m256i s =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
      const __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vf));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                          reduce_mod(x, vp, inv_p));
    }
  }
  for (; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>(
        (dst[i] + static_cast<std::uint64_t>(neg) * src[i]) % p);
}

void row_scale_mod_avx2(std::uint32_t* dst, std::uint32_t factor,
                        std::uint32_t p, std::size_t n) {
  std::size_t i = 0;
  if (p < kVectorModulusBound) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor % p));
    const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
    for (; i + 8 <= n; i += 8) {
      const __m256i d =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                          reduce_mod(_mm256_mullo_epi32(d, vf), vp, inv_p));
    }
  }
  for (; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(dst[i]) * factor) % p);
}

}  // namespace

const KernelTable& avx2_table_impl() {
  static const KernelTable table{
      "avx2",          mul_avx2,        quot_avx2,
      lcm_avx2,        gcd_avx2,        divides_avx2,
      coprime_avx2,    revlex_cmp_avx2, lex_cmp_avx2,
      weighted_degree_avx2, row_submul_mod_avx2, row_scale_mod_avx2};
  return table;
}

}  // namespace cstar::kernels
