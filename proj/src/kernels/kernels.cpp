#include "qiso/kernels.hpp"

#include <atomic>

#include "qiso/util.hpp"

namespace qiso {

std::atomic<bool>& interrupt_flag() {
  static std::atomic<bool> flag{false};
  return flag;
}

void request_interrupt() { interrupt_flag().store(true); }
void clear_interrupt() { interrupt_flag().store(false); }

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace qiso

namespace qiso::kern {

namespace {

std::uint64_t popcnt_scalar(const Word* a, std::size_t n) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::uint64_t>(std::popcount(a[i]));
  return c;
}

std::uint64_t and_popcnt_scalar(const Word* a, const Word* b, std::size_t n) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return c;
}

void and_into_scalar(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void andnot_assign_scalar(Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) a[i] &= ~b[i];
}

void or_assign_scalar(Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) a[i] |= b[i];
}

void xor_assign_scalar(Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) a[i] ^= b[i];
}

const Ops kScalar = {
    "scalar",          popcnt_scalar,    and_popcnt_scalar,
    and_into_scalar,   andnot_assign_scalar, or_assign_scalar,
    xor_assign_scalar,
};

std::atomic<const Ops*> g_active{nullptr};

const Ops* pick_auto() {
  if (const Ops* v = avx2_ops()) return v;
  return &kScalar;
}

}  // namespace

const Ops& scalar_ops() { return kScalar; }

#ifndef QISO_HAVE_AVX2
const Ops* avx2_ops() { return nullptr; }
#endif

void select_backend(Backend b) {
  switch (b) {
    case Backend::Auto:
      g_active.store(pick_auto());
      return;
    case Backend::Scalar:
      g_active.store(&kScalar);
      return;
    case Backend::Avx2: {
      const Ops* v = avx2_ops();
      if (!v) throw std::invalid_argument("avx2 backend unavailable on this build/cpu");
      g_active.store(v);
      return;
    }
  }
}

Backend parse_backend(const std::string& name) {
  if (name == "auto") return Backend::Auto;
  if (name == "scalar") return Backend::Scalar;
  if (name == "avx2") return Backend::Avx2;
  throw std::invalid_argument("unknown backend '" + name + "' (expected auto, scalar or avx2)");
}

const Ops& active() {
  const Ops* cur = g_active.load();
  if (!cur) {
    cur = pick_auto();
    g_active.store(cur);
  }
  return *cur;
}

std::string active_name() { return active().name; }

}  // namespace qiso::kern
