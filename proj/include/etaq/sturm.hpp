#pragma once

#include <cstdint>

namespace etaq {

/// [SL_2(Z) : Gamma_0(N)] = N prod_{p | N} (1 + 1/p).
std::int64_t sturm_index(std::int64_t level);

/// Largest index that must be compared: floor(kb/12 - (b-1)/N) for a cusp
/// form difference, floor(kb/12) otherwise, and never below 0. Agreement
/// for all n <= threshold forces agreement everywhere; when the bound is an
/// integer it is itself included, which is more than the strict inequality
/// needs.
std::int64_t sturm_threshold(int weight, std::int64_t level, bool cuspidal);

}  // namespace etaq
