#pragma once

#include <cstddef>
#include <vector>

namespace slicedgw {

/// Sorts `values[0..n)` ascending. Uses std::sort for small inputs and an LSD
/// radix sort on the IEEE-754 bit pattern for large ones; both orderings agree
/// for finite inputs. `scratch` is reused across calls to avoid reallocation.
/// Deterministic: the algorithm choice depends on n only.
void sort_values(double* values, std::size_t n, std::vector<double>& scratch);

inline void sort_values(std::vector<double>& values, std::vector<double>& scratch) {
  sort_values(values.data(), values.size(), scratch);
}

}  // namespace slicedgw
