#pragma once

// Worker pool and per-replicate bookkeeping shared by the experiments.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "wraphull/error.hpp"

namespace wraphull::detail {

inline int worker_count(int requested, std::size_t jobs) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  n = std::max(1, n);
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(n), std::max<std::size_t>(jobs, 1)));
}

// Runs body(i) for i in [0, count) on a pool of workers. Exceptions from the
// body are the body's business; anything escaping is rethrown here.
template <class Body>
void parallel_for(std::size_t count, int threads, Body&& body) {
  const int workers = worker_count(threads, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Per-replicate outcome slots; a replicate that throws a library error leaves
// its slot empty.
template <class T>
struct Replicates {
  std::vector<std::optional<T>> slots;
  std::string first_error;
  std::mutex error_mutex;

  explicit Replicates(std::size_t m) : slots(m) {}

  template <class F>
  void run(int threads, F&& f) {
    parallel_for(slots.size(), threads, [&](std::size_t i) {
      try {
        slots[i] = f(i);
      } catch (const Error& e) {
        std::lock_guard lock(error_mutex);
        if (first_error.empty()) first_error = e.what();
      }
    });
  }

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(slots.begin(), slots.end(), [](const auto& s) { return !s; }));
  }

  // Aborts the cell when more than 1% of its replicates failed.
  std::size_t check(const std::string& cell) const {
    const std::size_t f = failures();
    if (f * 100 > slots.size() || f == slots.size()) {
      std::ostringstream os;
      os << cell << ": " << f << " of " << slots.size() << " replicates failed";
      if (!first_error.empty()) os << " (first: " << first_error << ")";
      throw Error(ErrorCode::CellFailed, os.str());
    }
    return f;
  }

  template <class Get>
  std::vector<double> column(Get&& get) const {
    std::vector<double> out;
    out.reserve(slots.size());
    for (const auto& s : slots) {
      if (s) out.push_back(get(*s));
    }
    return out;
  }
};

}  // namespace wraphull::detail
