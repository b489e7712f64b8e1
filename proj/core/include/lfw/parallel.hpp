#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "lfw/summation.hpp"

namespace lfw::parallel {

// Process-wide worker count. Results of reduce() never depend on it: the
// block partition and the combination tree are fixed by the range alone.
void set_threads(unsigned n);
unsigned threads();

// Calls body(i) once for every i in [0, n). Exceptions thrown by body are
// rethrown on the calling thread (the one with the lowest index wins).
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body);

inline constexpr std::size_t kDefaultBlock = std::size_t{1} << 14;

template <class T, class Term>
T reduce(std::size_t begin, std::size_t end, Term&& term, std::size_t block = kDefaultBlock) {
  using Acc = compensated_for_t<T>;
  if (end <= begin) return T{};
  const std::size_t count = end - begin;
  const std::size_t nblocks = (count + block - 1) / block;
  std::vector<Acc> partial(nblocks);
  for_each_index(nblocks, [&](std::size_t b) {
    const std::size_t lo = begin + b * block;
    const std::size_t hi = lo + block < end ? lo + block : end;
    Acc acc;
    for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
    partial[b] = acc;
  });
  // Pairwise tree over blocks, always in the same shape.
  for (std::size_t stride = 1; stride < nblocks; stride *= 2) {
    for (std::size_t i = 0; i + stride < nblocks; i += 2 * stride) partial[i].merge(partial[i + stride]);
  }
  return partial[0].value();
}

}  // namespace lfw::parallel
