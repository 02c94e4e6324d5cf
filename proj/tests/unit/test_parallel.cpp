#include <atomic>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "lcx/parallel.hpp"

using lcx::parallel_for;

TEST_CASE("parallel_for visits every index exactly once") {
  const std::size_t n = 500;
  std::vector<std::atomic<int>> visits(n);
  parallel_for(n, 8, [&](std::size_t i) { visits[i].fetch_add(1); });
  for (std::size_t i = 0; i < n; ++i) CHECK(visits[i].load() == 1);
}

TEST_CASE("indexed writes match a serial run regardless of worker count") {
  const std::size_t n = 200;
  auto work = [](std::size_t i) {
    return static_cast<double>(i * i) / 3.0 + static_cast<double>(i);
  };
  std::vector<double> serial(n), parallel(n);
  parallel_for(n, 1, [&](std::size_t i) { serial[i] = work(i); });
  for (std::size_t workers : {2, 3, 8, 64}) {
    parallel_for(n, workers, [&](std::size_t i) { parallel[i] = work(i); });
    CHECK(parallel == serial);
  }
}

TEST_CASE("zero items is a no-op and zero workers means one") {
  int calls = 0;
  parallel_for(0, 4, [&](std::size_t) { ++calls; });
  CHECK(calls == 0);
  parallel_for(3, 0, [&](std::size_t) { ++calls; });
  CHECK(calls == 3);
}

TEST_CASE("worker exceptions surface on the calling thread") {
  CHECK_THROWS_WITH_AS(
      parallel_for(100, 4,
                   [](std::size_t i) {
                     if (i == 37) throw std::runtime_error("boom at 37");
                   }),
      "boom at 37", std::runtime_error);

  // Serial path rethrows too.
  CHECK_THROWS_AS(parallel_for(5, 1,
                               [](std::size_t i) {
                                 if (i == 2) throw std::runtime_error("x");
                               }),
                  std::runtime_error);
}

TEST_CASE("more workers than items still completes") {
  std::vector<int> out(3, 0);
  parallel_for(3, 16, [&](std::size_t i) { out[i] = static_cast<int>(i) + 1; });
  CHECK(out == std::vector<int>{1, 2, 3});
}
