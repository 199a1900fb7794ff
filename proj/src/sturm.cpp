#include "etaq/sturm.hpp"

#include <stdexcept>
#include <string>

#include "etaq/arith.hpp"

namespace etaq {

std::int64_t sturm_index(std::int64_t level) {
    if (level < 1) throw std::invalid_argument("level must be positive, got " + std::to_string(level));
    std::int64_t b = level;
    for (auto [p, e] : factor(level)) b = b / p * (p + 1);
    return b;
}

std::int64_t sturm_threshold(int weight, std::int64_t level, bool cuspidal) {
    if (weight < 0) throw std::invalid_argument("weight must be non-negative");
    const std::int64_t b = sturm_index(level);
    const std::int64_t kb = static_cast<std::int64_t>(weight) * b;
    if (!cuspidal) return floor_div(kb, 12);
    // floor((k b N - 12 (b - 1)) / (12 N))
    const __int128 num = static_cast<__int128>(kb) * level - static_cast<__int128>(12) * (b - 1);
    const __int128 den = static_cast<__int128>(12) * level;
    __int128 q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q < 0 ? 0 : static_cast<std::int64_t>(q);
}

}  // namespace etaq
