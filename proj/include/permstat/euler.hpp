#pragma once

#include <vector>

#include "permstat/bigint.hpp"
#include "permstat/error.hpp"

namespace permstat {

/// E_n from the boustrophedon (zigzag) triangle:
/// T(0,0)=1, T(n,0)=0 for n>=1, T(n,k)=T(n,k-1)+T(n-1,n-k), E_n=T(n,n).
/// Heads: 1, 1, 1, 2, 5, 16, 61, 272, 1385, ...
inline BigInt euler_number(int n) {
  if (n < 0) throw DomainError("euler_number of negative index");
  std::vector<BigInt> prev = {1};
  for (int m = 1; m <= n; ++m) {
    std::vector<BigInt> row(static_cast<size_t>(m) + 1);
    row[0] = 0;
    for (int k = 1; k <= m; ++k) row[static_cast<size_t>(k)] = row[static_cast<size_t>(k - 1)] + prev[static_cast<size_t>(m - k)];
    prev = std::move(row);
  }
  return prev.back();
}

}  // namespace permstat
