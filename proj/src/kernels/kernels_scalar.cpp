#include "cstar/kernels.hpp"

namespace cstar::kernels {
namespace {

void mul_scalar(const ExpVec& a, const ExpVec& b, ExpVec& out) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    out.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
}

void quot_scalar(const ExpVec& a, const ExpVec& b, ExpVec& out) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    out.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
}

void lcm_scalar(const ExpVec& a, const ExpVec& b, ExpVec& out) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    out.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
}

void gcd_scalar(const ExpVec& a, const ExpVec& b, ExpVec& out) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    out.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
}

bool divides_scalar(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

bool coprime_scalar(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

int revlex_cmp_scalar(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

int lex_cmp_scalar(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  }
  return 0;
}

std::int64_t weighted_degree_scalar(const ExpVec& a, const WeightVec& w) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    d += static_cast<std::int64_t>(a.e[i]) * w.w[i];
  return d;
}

void row_submul_mod_scalar(std::uint32_t* dst, const std::uint32_t* src,
                           std::uint32_t factor, std::uint32_t p,
                           std::size_t n) {
  const std::uint64_t neg = factor == 0 ? 0 : p - factor;
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + neg * src[i]) % p);
}

void row_scale_mod_scalar(std::uint32_t* dst, std::uint32_t factor,
                          std::uint32_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(dst[i]) * factor) % p);
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{
      "scalar",          mul_scalar,         quot_scalar,
      lcm_scalar,        gcd_scalar,         divides_scalar,
      coprime_scalar,    revlex_cmp_scalar,  lex_cmp_scalar,
      weighted_degree_scalar, row_submul_mod_scalar, row_scale_mod_scalar};
  return table;
}

}  // namespace cstar::kernels
