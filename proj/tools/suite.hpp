#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hhcalc/hochschild.hpp"

namespace hhcalc::tools {

struct Outcome {
  std::string name;
  bool pass = false;
  std::string detail;              // first failure, or a short summary
  std::vector<std::string> notes;  // reported, never asserted
};

/// nullopt on success, else a description of the first failure.
using Failure = std::optional<std::string>;
using CheckBody = std::function<Failure(std::vector<std::string>& notes)>;
/// Runs body; exceptions count as failures.
Outcome run_check(const std::string& name, const CheckBody& body);

struct Computed {
  std::shared_ptr<const QuotientAlgebra> algebra;
  std::shared_ptr<Hochschild> hh;
  HHReport report;
};
/// Throws ConsistencyError exactly when hh_report does.
Computed compute(const BoundQuiverPresentation& pres, std::size_t nmax = 3);

std::string dims_text(const std::vector<std::size_t>& v, std::size_t count = SIZE_MAX);
/// First three HH dimensions.
std::vector<std::size_t> hh3(const HHReport& r);

/// Random cochain in C^n with about `density` nonzero entries in [-3, 3].
SparseVector random_cochain(std::mt19937_64& rng, const BarComplex& bar, std::size_t n,
                            std::size_t density);
/// d(f∪g) = df∪g + (-1)^p f∪dg and d(df) = 0 for random f in C^p, g in C^q,
/// all p + q ≤ top - 1.
Failure leibniz_and_dd(const BarComplex& bar, std::mt19937_64& rng, std::size_t trials);

/// x∪x = 0 for all x in an HH^1 basis, and the HH^1 cups span HH^2. For a
/// two-dimensional HH^1 this is the exterior-algebra pattern of the torus.
Failure exterior_cup_pattern(const Hochschild& hh);

enum class Scope { fast, full };

/// Property suites of every module. Full scope uses the full sample
/// sizes; fast scope shrinks the randomized ones. With `inject_fault` the
/// d∘d check runs on a deliberately broken differential and must fail.
std::vector<Outcome> invariant_checks(Scope scope, std::uint64_t seed, bool inject_fault = false);

}  // namespace hhcalc::tools
