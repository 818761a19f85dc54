#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <thread>
#include <vector>

namespace hds {

// Neumaier compensated sum.
template <class T>
class Neumaier {
 public:
  void add(T x) {
    T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  T sum() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

template <>
class Neumaier<std::complex<double>> {
 public:
  void add(std::complex<double> x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  std::complex<double> sum() const { return {re_.sum(), im_.sum()}; }

 private:
  Neumaier<double> re_, im_;
};

// Sum fn(i) for i in [0, n) over fixed-size chunks. Chunk boundaries do not depend on the
// number of worker threads and partial sums are combined in chunk order, so the result is
// reproducible bit for bit.
template <class T, class Fn>
T chunked_sum(std::size_t n, Fn&& fn, std::size_t chunk = 1 << 14) {
  const std::size_t nchunks = (n + chunk - 1) / chunk;
  std::vector<T> partial(nchunks);
  auto work = [&](std::size_t c) {
    Neumaier<T> acc;
    const std::size_t hi = std::min(n, (c + 1) * chunk);
    for (std::size_t i = c * chunk; i < hi; ++i) acc.add(fn(i));
    partial[c] = acc.sum();
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t nthreads = std::min<std::size_t>(hw, nchunks);
  if (nthreads <= 1) {
    for (std::size_t c = 0; c < nchunks; ++c) work(c);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t c = t; c < nchunks; c += nthreads) work(c);
      });
    for (auto& th : pool) th.join();
  }
  Neumaier<T> total;
  for (const T& p : partial) total.add(p);
  return total.sum();
}

}  // namespace hds
