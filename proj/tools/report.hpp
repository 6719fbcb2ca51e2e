#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hhcalc/presentation.hpp"

namespace hhcalc::tools {

using Json = nlohmann::ordered_json;

struct ReportRequest {
  std::optional<std::string> family;  // exactly one of family, file
  std::optional<std::string> file;
  std::optional<std::string> field;   // rational when absent; files carry their own
  std::optional<std::string> q;
  std::optional<std::string> psi;
  std::optional<std::uint64_t> seed;  // only the monomial family consumes it
  std::size_t nmax = 3;
  bool inject_fault = false;
  std::ostream* trace = nullptr;
};

/// Built-in families plus `monomial`, the seeded random monomial algebra.
BoundQuiverPresentation request_presentation(const ReportRequest& req);

/// Keys: family, field, params, small_complex_dims, bar_complex_dims, hh,
/// euler, cup, bracket, checks, version, seed.
Json run_report(const ReportRequest& req);

Json psi_examples_table(const Field& field);
/// Both tori for every q in the list.
Json torus_sweep_table(const Field& field, const std::vector<std::string>& qs);
/// q list used when none is given: all nonzero residues for small p, else a
/// fixed rational sample.
std::vector<std::string> default_sweep(const Field& field);
Json feasibility_table(const Field& field, std::size_t samples, std::uint64_t seed);

enum class Format { json, csv, text };
Format parse_format(const std::string& text);
std::string render_report(const Json& doc, Format format);
std::string render_table(const Json& doc, Format format);

}  // namespace hhcalc::tools
