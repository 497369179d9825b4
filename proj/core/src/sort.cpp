#include "slicedgw/sort.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>

namespace slicedgw {

namespace {

// Below this size the cache-resident std::sort wins over eight counting
// passes.
constexpr std::size_t kRadixThreshold = 2048;

// Monotone key: flipping the sign bit for non-negatives and all bits for
// negatives makes unsigned order agree with double order (finite inputs).
inline std::uint64_t to_key(std::uint64_t u) {
  return u ^ ((u >> 63) ? ~std::uint64_t{0} : (std::uint64_t{1} << 63));
}

inline std::uint64_t from_key(std::uint64_t u) {
  return u ^ ((u >> 63) ? (std::uint64_t{1} << 63) : ~std::uint64_t{0});
}

}  // namespace

void sort_values(double* values, std::size_t n, std::vector<double>& scratch) {
  if (n < kRadixThreshold) {
    std::sort(values, values + n);
    return;
  }
  scratch.resize(n);
  auto* a = reinterpret_cast<std::uint64_t*>(values);
  auto* b = reinterpret_cast<std::uint64_t*>(scratch.data());
  for (std::size_t i = 0; i < n; ++i) a[i] = to_key(a[i]);

  std::size_t count[256];
  for (int pass = 0; pass < 8; ++pass) {
    const int shift = pass * 8;
    std::memset(count, 0, sizeof(count));
    for (std::size_t i = 0; i < n; ++i) count[(a[i] >> shift) & 255]++;
    std::size_t pos = 0;
    for (auto& c : count) {
      const std::size_t next = pos + c;
      c = pos;
      pos = next;
    }
    for (std::size_t i = 0; i < n; ++i) b[count[(a[i] >> shift) & 255]++] = a[i];
    std::swap(a, b);
  }
  // Eight passes: keys ended up back in the caller's buffer.
  for (std::size_t i = 0; i < n; ++i) a[i] = from_key(a[i]);
}

}  // namespace slicedgw
