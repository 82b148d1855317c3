#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace rdx {

// Input that cannot be parsed (files, shorthands, malformed JSON certificates).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural fact the library's theorems guarantee failed to hold at runtime.
// Reaching one of these means a theorem was falsified on a concrete instance,
// so it is a hard error, never a principled Reject.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Deterministic RNG: mt19937_64 is bit-exact across platforms; we reduce with
// modulo ourselves because std::uniform_int_distribution is not portable.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t next() { return eng_(); }
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

 private:
  std::mt19937_64 eng_;
};

inline double now_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

// Runs fn(0..count-1) on `jobs` worker threads pulling from an atomic index.
// jobs <= 1 degrades to a plain loop. The first exception (if any) is rethrown
// on the calling thread after all workers join.
inline void parallel_for(int jobs, int count, const std::function<void(int)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex err_mutex;
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int width = std::min(jobs, count);
  pool.reserve(static_cast<size_t>(width));
  for (int t = 0; t < width; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace rdx
