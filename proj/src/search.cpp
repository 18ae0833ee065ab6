#include <stdexcept>
#include <vector>

#include "oplus/classify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oplus::classify {

namespace {

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// [begin, end) split into per-thread contiguous chunks; concatenating the
// per-chunk outputs in chunk order keeps results sorted.
struct Chunk {
  long long begin, end;
};

std::vector<Chunk> split_range(long long begin, long long end, int parts) {
  std::vector<Chunk> chunks;
  long long total = end - begin;
  long long base = total / parts, extra = total % parts;
  long long at = begin;
  for (int i = 0; i < parts; ++i) {
    long long len = base + (i < extra ? 1 : 0);
    chunks.push_back({at, at + len});
    at += len;
  }
  return chunks;
}

void mordell_scan(const Int& k, long long from, long long to,
                  std::vector<std::pair<Int, Int>>& out) {
  Int x, rhs;
  for (long long i = from; i < to; ++i) {
    x = static_cast<long>(i);
    rhs = x * x * x + k;
    if (auto y = exact_sqrt(rhs)) {
      out.emplace_back(x, *y);
      if (*y > 0) out.emplace_back(x, -*y);
    }
  }
}

bool pair_is_true(long long u, long long v) {
  Int uu(static_cast<long>(u)), vv(static_cast<long>(v));
  Int disc = 9 - 8 * uu - 4 * vv + 4 * uu * vv;
  return is_perfect_square(disc);
}

void check_bound(long long bound) {
  if (bound < 1) throw std::domain_error("search bound must be >= 1");
}

}  // namespace

MordellSolutionSet mordell_search(const Int& k, long long bound) {
  check_bound(bound);
  auto chunks = split_range(-bound, bound + 1, worker_count());
  std::vector<std::vector<std::pair<Int, Int>>> parts(chunks.size());

#pragma omp parallel for schedule(static, 1)
  for (size_t c = 0; c < chunks.size(); ++c)
    mordell_scan(k, chunks[c].begin, chunks[c].end, parts[c]);

  MordellSolutionSet result{k, bound, {}};
  for (auto& part : parts)
    result.solutions.insert(result.solutions.end(), part.begin(), part.end());
  return result;
}

MordellSolutionSet mordell_search_serial(const Int& k, long long bound) {
  check_bound(bound);
  MordellSolutionSet result{k, bound, {}};
  for (long long i = -bound; i <= bound; ++i) {
    Int x(static_cast<long>(i));
    Int cube = x * x * x;
    Int rhs = cube + k;
    if (rhs < 0) continue;
    Int root = integer_sqrt(rhs);
    if (root * root != rhs) continue;
    result.solutions.emplace_back(x, root);
    if (root > 0) result.solutions.emplace_back(x, Int(-root));
  }
  return result;
}

std::vector<std::pair<long long, long long>> search_true_pairs(long long lo,
                                                               long long hi) {
  if (lo > hi) throw std::domain_error("empty search box");
  auto chunks = split_range(lo, hi + 1, worker_count());
  std::vector<std::vector<std::pair<long long, long long>>> parts(chunks.size());

#pragma omp parallel for schedule(static, 1)
  for (size_t c = 0; c < chunks.size(); ++c)
    for (long long u = chunks[c].begin; u < chunks[c].end; ++u)
      for (long long v = lo; v <= hi; ++v)
        if (pair_is_true(u, v)) parts[c].emplace_back(u, v);

  std::vector<std::pair<long long, long long>> result;
  for (auto& part : parts) result.insert(result.end(), part.begin(), part.end());
  return result;
}

std::vector<std::pair<long long, long long>> search_true_pairs_serial(long long lo,
                                                                      long long hi) {
  if (lo > hi) throw std::domain_error("empty search box");
  std::vector<std::pair<long long, long long>> result;
  for (long long u = lo; u <= hi; ++u) {
    for (long long v = lo; v <= hi; ++v) {
      Int uu(static_cast<long>(u)), vv(static_cast<long>(v));
      Int disc = 4 * uu * vv - 8 * uu - 4 * vv + 9;
      if (disc < 0) continue;
      Int root = integer_sqrt(disc);
      if (root * root == disc) result.emplace_back(u, v);
    }
  }
  return result;
}

}  // namespace oplus::classify
