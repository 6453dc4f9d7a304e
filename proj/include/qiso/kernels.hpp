#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qiso::kern {

using Word = std::uint64_t;

// Flat word-array kernels behind the packed-bitset hot loops (clique-search
// candidate sets, GF(2) row elimination). Each entry has a scalar reference
// implementation and, on x86-64 with AVX2, a vector variant; the two are
// equivalence-tested and selected at runtime.
struct Ops {
  const char* name;
  std::uint64_t (*popcnt)(const Word* a, std::size_t n);
  std::uint64_t (*and_popcnt)(const Word* a, const Word* b, std::size_t n);
  void (*and_into)(Word* dst, const Word* a, const Word* b, std::size_t n);
  void (*andnot_assign)(Word* a, const Word* b, std::size_t n);  // a &= ~b
  void (*or_assign)(Word* a, const Word* b, std::size_t n);
  void (*xor_assign)(Word* a, const Word* b, std::size_t n);
};

enum class Backend { Auto, Scalar, Avx2 };

const Ops& scalar_ops();
// nullptr when AVX2 is unavailable (not compiled in, or CPU lacks it).
const Ops* avx2_ops();

// Throws std::invalid_argument when a forced backend is unavailable.
void select_backend(Backend b);
Backend parse_backend(const std::string& name);
const Ops& active();
std::string active_name();

// Fixed-universe bitset over the kernel word ops. Indices are dense vertex
// ids, so iteration order is the canonical order by construction.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }
  std::size_t words() const { return w_.size(); }
  const Word* data() const { return w_.data(); }
  Word* data() { return w_.data(); }

  void set(std::size_t i) { w_[i >> 6] |= Word{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(Word{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void clear() { std::fill(w_.begin(), w_.end(), Word{0}); }

  void set_all() {
    if (nbits_ == 0) return;
    std::fill(w_.begin(), w_.end(), ~Word{0});
    std::size_t tail = nbits_ & 63;
    if (tail) w_.back() = (Word{1} << tail) - 1;
  }

  bool any() const {
    for (Word w : w_)
      if (w) return true;
    return false;
  }

  std::size_t count() const { return active().popcnt(w_.data(), w_.size()); }

  std::size_t and_count(const DynBitset& o) const {
    return active().and_popcnt(w_.data(), o.w_.data(), w_.size());
  }

  static void and_into(DynBitset& dst, const DynBitset& a, const DynBitset& b) {
    active().and_into(dst.w_.data(), a.w_.data(), b.w_.data(), dst.w_.size());
  }

  void andnot_assign(const DynBitset& o) { active().andnot_assign(w_.data(), o.w_.data(), w_.size()); }
  void and_assign(const DynBitset& o) { active().and_into(w_.data(), w_.data(), o.w_.data(), w_.size()); }
  void or_assign(const DynBitset& o) { active().or_assign(w_.data(), o.w_.data(), w_.size()); }

  int find_first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>((i << 6) + std::countr_zero(w_[i]));
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      Word w = w_[i];
      while (w) {
        f((i << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  bool operator==(const DynBitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

 private:
  std::size_t nbits_ = 0;
  std::vector<Word> w_;
};

}  // namespace qiso::kern
