#include "sampling.hpp"

namespace hhcalc::tools {

long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long long>(rng() % span);
}

PsiTensor random_psi(std::mt19937_64& rng, const Field& field) {
  PsiTensor psi(field);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) psi.set(i, j, field.from_int(draw(rng, -3, 3)));
  }
  return psi;
}

namespace {

Mat2 multiply(const Mat2& a, const Mat2& b, const Field& field) {
  Mat2 out{{{field.zero(), field.zero()}, {field.zero(), field.zero()}}};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

}  // namespace

Mat2 random_unimodular(std::mt19937_64& rng, const Field& field) {
  auto upper = [&](long long t) {
    return Mat2{{{field.one(), field.from_int(t)}, {field.zero(), field.one()}}};
  };
  auto lower = [&](long long t) {
    return Mat2{{{field.one(), field.zero()}, {field.from_int(t), field.one()}}};
  };
  Mat2 g = upper(draw(rng, -2, 2));
  g = multiply(g, lower(draw(rng, -2, 2)), field);
  return multiply(g, upper(draw(rng, -2, 2)), field);
}

SL2Element random_sl2(std::mt19937_64& rng, const Field& field) {
  SL2Element x = SL2Element::zero(field);
  for (auto& c : x.c) c = field.from_int(draw(rng, -3, 3));
  return x;
}

}  // namespace hhcalc::tools
