#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

namespace qiso {

// Cooperative stop flag, set by the CLI's SIGINT handler. Long searches poll
// it and unwind through the normal truncation path.
std::atomic<bool>& interrupt_flag();
void request_interrupt();
void clear_interrupt();

// Runs body(begin, end) over [0, count) split into contiguous chunks.
// Chunk boundaries depend only on (count, workers), so any reduction that is
// order-independent per chunk gives scheduler-independent results.
template <class Body>
void parallel_for(std::size_t count, int workers, Body&& body) {
  if (count == 0) return;
  std::size_t nw = workers <= 1 ? 1 : static_cast<std::size_t>(workers);
  if (nw > count) nw = count;
  if (nw == 1) {
    body(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nw - 1);
  std::size_t chunk = (count + nw - 1) / nw;
  for (std::size_t w = 1; w < nw; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = lo + chunk < count ? lo + chunk : count;
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  body(std::size_t{0}, chunk < count ? chunk : count);
  for (auto& t : pool) t.join();
}

// Deterministic generator for property tests and sampling; identical on every
// platform, unlike std:: distributions.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t m) { return m ? next() % m : 0; }
};

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace qiso
