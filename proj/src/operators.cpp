#include "etaq/operators.hpp"

#include <algorithm>

namespace etaq {

ThetaWeightRule theta_weight_rule(std::int64_t ell, int t, int j, const FormMeta& meta) {
    if (!is_prime(ell)) throw std::invalid_argument("theta rule needs a prime, got " + std::to_string(ell));
    if (t < 1 || j < 0) throw std::invalid_argument("theta rule needs t >= 1 and j >= 0");
    ThetaWeightRule r;
    r.ell = ell;
    r.t = t;
    r.j = j;
    r.base = meta;
    if (ell >= 5 && t == 1) {
        r.step = static_cast<int>(ell + 1);
        r.level = meta.level;
        r.exact = true;
    } else if (ell == 2 || ell == 3) {
        const int floor_t = ell == 3 ? 2 : 4;
        const int te = std::max(t, floor_t);
        r.step = static_cast<int>(2 + euler_phi(checked_pow(ell, te)));
        r.level = meta.level * checked_pow(ell, te - 1);
        r.exact = t >= floor_t;
    } else {
        r.step = static_cast<int>(2 + 2 * checked_pow(ell, t - 1) * (ell - 1));
        r.level = meta.level * checked_pow(ell, t);
        r.exact = false;
    }
    r.weight = meta.weight + j * r.step;
    if (j == 0) {
        r.weight = meta.weight;
        r.level = meta.level;
        r.exact = true;
    }
    return r;
}

std::int64_t twist_level(std::int64_t level, const RealDirichletCharacter& chi) {
    const std::int64_t m = chi.modulus();
    return checked_lcm(level, m * m);
}

}  // namespace etaq
