// Low-level arithmetic kernels: packed exponent vectors and dense rows mod p.
//
// Every kernel has a portable scalar reference implementation. On x86-64 an
// AVX2 variant is compiled into a separate translation unit and selected at
// runtime when the CPU supports it. The environment variable CSTAR_KERNELS
// (values: auto, scalar, avx2) overrides the automatic choice.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace cstar::kernels {

inline constexpr std::size_t kMaxVars = 16;

/// Exponents of one monomial, one 16-bit lane per variable. Unused lanes are 0.
struct alignas(32) ExpVec {
  std::array<std::uint16_t, kMaxVars> e{};

  friend bool operator==(const ExpVec&, const ExpVec&) = default;
};

/// Positive variable weights; unused lanes are 0.
struct alignas(32) WeightVec {
  std::array<std::int32_t, kMaxVars> w{};
};

struct KernelTable {
  std::string_view name;

  void (*mul)(const ExpVec& a, const ExpVec& b, ExpVec& out);
  // out = a - b; requires b | a.
  void (*quot)(const ExpVec& a, const ExpVec& b, ExpVec& out);
  void (*lcm)(const ExpVec& a, const ExpVec& b, ExpVec& out);
  void (*gcd)(const ExpVec& a, const ExpVec& b, ExpVec& out);
  // a | b
  bool (*divides)(const ExpVec& a, const ExpVec& b);
  bool (*coprime)(const ExpVec& a, const ExpVec& b);
  // Sign of the reverse-lexicographic tie-break: +1 when the last differing
  // exponent of a is smaller than that of b, -1 when larger, 0 when equal.
  int (*revlex_cmp)(const ExpVec& a, const ExpVec& b);
  // +1 when the first differing exponent of a is larger, -1 when smaller.
  int (*lex_cmp)(const ExpVec& a, const ExpVec& b);
  std::int64_t (*weighted_degree)(const ExpVec& a, const WeightVec& w);

  // dst[i] = (dst[i] - factor * src[i]) mod p, all values in [0, p).
  void (*row_submul_mod)(std::uint32_t* dst, const std::uint32_t* src,
                         std::uint32_t factor, std::uint32_t p, std::size_t n);
  // dst[i] = (factor * dst[i]) mod p.
  void (*row_scale_mod)(std::uint32_t* dst, std::uint32_t factor,
                        std::uint32_t p, std::size_t n);
};

enum class Backend { Auto, Scalar, Avx2 };

const KernelTable& scalar_table();

/// The AVX2 table, or nullptr when it was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_table();

/// Currently selected table. Cheap; safe to call from any thread.
const KernelTable& active();

/// Switch the process-wide backend. Requesting Avx2 when it is unavailable
/// falls back to the scalar table. Returns the table now in use.
const KernelTable& select(Backend backend);

}  // namespace cstar::kernels
