#pragma once

#include <cstdint>
#include <random>

#include "hhcalc/sl2.hpp"

namespace hhcalc::tools {

/// Used whenever --seed is absent.
inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// Integer in [lo, hi]. Plain modulo keeps streams identical across standard
/// libraries, unlike std::uniform_int_distribution.
long long draw(std::mt19937_64& rng, long long lo, long long hi);

/// Ψ with every coefficient an integer in [-3, 3].
PsiTensor random_psi(std::mt19937_64& rng, const Field& field);
/// Product of three elementary unimodular matrices with entries in [-2, 2].
Mat2 random_unimodular(std::mt19937_64& rng, const Field& field);
SL2Element random_sl2(std::mt19937_64& rng, const Field& field);

}  // namespace hhcalc::tools
