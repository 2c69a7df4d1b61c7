#pragma once

#include <string>

#include "minbu/errors.hpp"
#include "minbu/series/truncated_series.hpp"

namespace minbu::detail {

inline void require_equal(const TruncatedSeries& a, const TruncatedSeries& b, int order,
                          const std::string& what, int l) {
  for (int n = 0; n <= order; ++n) {
    if (a[n] != b[n]) {
      throw VerificationFailure(what + " at l=" + std::to_string(l) + ", n=" + std::to_string(n) + ": " +
                                to_fraction(a[n]) + " vs " + to_fraction(b[n]));
    }
  }
}

}  // namespace minbu::detail
