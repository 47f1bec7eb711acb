// Backend selection only; no intrinsics here.
#include <atomic>
#include <cstdlib>
#include <string_view>

#include "cstar/kernels.hpp"

namespace cstar::kernels {

#if defined(CSTAR_HAVE_AVX2)
const KernelTable& avx2_table_impl();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(CSTAR_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& resolve(Backend backend) {
  const KernelTable* simd = avx2_table();
  switch (backend) {
    case Backend::Scalar:
      return scalar_table();
    case Backend::Avx2:
    case Backend::Auto:
      return simd ? *simd : scalar_table();
  }
  return scalar_table();
}

Backend backend_from_env() {
  const char* env = std::getenv("CSTAR_KERNELS");
  if (env == nullptr) return Backend::Auto;
  const std::string_view v(env);
  if (v == "scalar") return Backend::Scalar;
  if (v == "avx2") return Backend::Avx2;
  return Backend::Auto;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{&resolve(backend_from_env())};
  return table;
}

}  // namespace

const KernelTable* avx2_table() {
#if defined(CSTAR_HAVE_AVX2)
  static const bool ok = cpu_has_avx2();
  return ok ? &avx2_table_impl() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  return *current().load(std::memory_order_acquire);
}

const KernelTable& select(Backend backend) {
  const KernelTable& t = resolve(backend);
  current().store(&t, std::memory_order_release);
  return t;
}

}  // namespace cstar::kernels
