#pragma once

// Bernoulli numbers and Eisenstein series as exact rational q-series.
// Reduction mod l^t is left to the caller, so a non-l-integral constant
// surfaces as an error at reduction time.

#include <gmpxx.h>

#include <cstdint>

#include "etaq/characters.hpp"
#include "etaq/qseries.hpp"

namespace etaq {

/// B_k with B_1 = -1/2. Cached; safe to call from several threads.
mpq_class bernoulli(int k);

/// B_{k,phi} = M^{k-1} sum_{a=1}^{M} phi(a) B_k(a/M), M the modulus of phi.
mpq_class bernoulli_generalized(int k, const RealDirichletCharacter& phi);

/// sum_{d | n} d^nu.
mpz_class sigma(std::int64_t n, int nu);

/// G_k = -B_k/2k + sum sigma_{k-1}(n) q^n, even k >= 4.
QQSeries G_k(int k, std::size_t precision);

/// E_k = (-2k/B_k) G_k, even k >= 4.
QQSeries E_k(int k, std::size_t precision);

/// E_2 = 1 - 24 sum sigma_1(n) q^n.
QQSeries E_2(std::size_t precision);

/// E_{2,N} = (N E_2(Nz) - E_2(z)) / 24, N >= 2.
QQSeries E_2N(std::int64_t n, std::size_t precision);

/// Generalized Eisenstein series G_k^{psi,phi}: constant -B_{k,phi}/2k when
/// psi is the character 1_1, else 0; coefficients
/// sum_{d|n} psi(n/d) phi(d) d^{k-1}. Requires psi(-1) phi(-1) = (-1)^k.
/// Primitivity of psi or phi is not checked.
QQSeries G_gen(int k, const RealDirichletCharacter& psi, const RealDirichletCharacter& phi, std::size_t precision);

/// -2k/B_{k,phi} * G_gen, normalised to constant term 1 when psi = 1_1.
QQSeries E_gen(int k, const RealDirichletCharacter& psi, const RealDirichletCharacter& phi, std::size_t precision);

/// Series of weight 2 + phi(l^t) on Gamma_0(l^{t-1}) congruent to E_2 mod
/// l^t:
///   F_{3,t} = -2 sum_{i<t} 3^i E_{2+phi(3^t)}(3^i z),  t >= 2,
///   F_{2,t} =   - sum_{i<t} 2^i E_{2+phi(2^t)}(2^i z), t >= 4.
QQSeries F_lt(std::int64_t ell, int t, std::size_t precision);

}  // namespace etaq
