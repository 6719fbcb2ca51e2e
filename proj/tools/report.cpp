#include "report.hpp"

#include <fstream>
#include <future>
#include <iomanip>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "hhcalc/errors.hpp"
#include "hhcalc/families.hpp"
#include "hhcalc/hochschild.hpp"
#include "hhcalc/rewrite.hpp"
#include "hhcalc/sl2.hpp"
#include "hhcalc/version.hpp"
#include "sampling.hpp"

namespace hhcalc::tools {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json dims_json(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t x : v) out.push_back(x);
  return out;
}

bool any_positive_cup(const Hochschild& hh) {
  for (std::size_t p = 1; p < hh.nmax(); ++p) {
    for (std::size_t q = 1; p + q <= hh.nmax(); ++q) {
      if (hh.cup_rank(p, q) > 0) return true;
    }
  }
  return false;
}

// e, h, f in tensor-factor order, e.g. "2e⊗e+h⊗h".
std::string psi_label(const PsiTensor& psi) {
  static const char* g = "ehf";
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const Scalar& c = psi.at(i, j);
      if (c.is_zero()) continue;
      std::string coeff = c.to_string();
      const bool negative = !coeff.empty() && coeff[0] == '-';
      if (negative) coeff.erase(0, 1);
      if (negative) out += '-';
      else if (!out.empty()) out += '+';
      if (coeff != "1") out += coeff;
      out += std::string{g[i]} + "⊗" + g[j];
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

BoundQuiverPresentation request_presentation(const ReportRequest& req) {
  if (req.family.has_value() == req.file.has_value()) {
    throw ValidationError("give exactly one of --family and --file");
  }
  if (req.file) {
    if (req.q || req.psi) throw DomainError("--q and --psi apply to built-in families only");
    BoundQuiverPresentation pres = parse_presentation(read_file(*req.file));
    if (req.field && parse_field(*req.field) != pres.field) {
      throw FieldError("--field disagrees with the field declared in " + *req.file);
    }
    return pres;
  }
  const Field field = parse_field(req.field.value_or("rational"));
  if (*req.family == "monomial") {
    if (req.q || req.psi) throw DomainError("family 'monomial' takes only --seed");
    return random_monomial_presentation(req.seed.value_or(kDefaultSeed), {}, field);
  }
  return family_presentation(*req.family, field, req.q, req.psi);
}

Json run_report(const ReportRequest& req) {
  const BoundQuiverPresentation pres = request_presentation(req);
  if (req.trace) {
    std::vector<std::string> warnings;
    const ReductionSystem sys = ReductionSystem::from_presentation(pres, &warnings);
    for (const auto& w : warnings) *req.trace << "warning: " << w << '\n';
    *req.trace << "rules: " << sys.rules().size() << '\n';
    sys.check_confluence(req.trace);
  }
  auto algebra = std::make_shared<const QuotientAlgebra>(QuotientAlgebra::from_presentation(pres));
  Hochschild hh(algebra, req.nmax);
  if (req.inject_fault) hh.inject_fault();
  const HHReport r = hh_report(hh);

  Json doc;
  if (req.family) {
    doc["family"] = *req.family;
  } else {
    doc["family"] = Json{{"file", *req.file}};
  }
  doc["field"] = pres.field.to_string();
  Json params = Json::object();
  if (req.family == "torus-s" || req.family == "torus-c") params["q"] = pres.field.parse_scalar(req.q.value_or("1")).to_string();
  if (req.family == "p1p1") params["psi"] = PsiTensor::parse(req.psi.value_or("0"), pres.field).to_string();
  doc["params"] = params;
  doc["small_complex_dims"] = r.small_dims ? dims_json(*r.small_dims) : Json(nullptr);
  doc["bar_complex_dims"] = dims_json(r.bar_dims);
  doc["hh"] = dims_json(r.hh);
  doc["euler"] = Json{{"terms", r.euler_terms}, {"hh", r.euler_hh}};
  if (r.small_euler) doc["euler"]["small_complex"] = *r.small_euler;
  const std::size_t cup_rank = hh.nmax() >= 2 ? hh.cup_rank(1, 1) : 0;
  doc["cup"] = Json{{"rank", cup_rank}, {"nonzero", any_positive_cup(hh)}};
  doc["bracket"] = Json{{"hh1_bracket_rank", hh.bracket_rank(1, 1)}};
  doc["checks"] = Json{{"d_squared_zero", r.d_squared_zero},
                       {"complexes_agree", r.complexes_agree},
                       {"euler", r.euler_ok}};
  doc["version"] = kVersion;
  const bool randomized = req.family == "monomial";
  doc["seed"] = randomized ? Json(req.seed.value_or(kDefaultSeed)) : Json(nullptr);
  return doc;
}

Json psi_examples_table(const Field& field) {
  static const std::vector<std::string> rows = {
      "ee:2,ff:2,hh:1",
      "ee:1",
      "ee:1,eh:1,he:1,hh:1",
      "ee:1,hh:1,ef:2,fe:2",
      "ee:1,eh:1,ef:1,he:1,hh:1,hf:1,fe:1,fh:1,ff:1",
      "ee:1,ff:1,hh:1",
      "ee:1,ff:1",
      "ee:1,hh:1,ff:1,ef:2,fe:2",
      "ee:1,hh:2,ef:1,fe:1",
  };
  std::vector<std::future<Json>> jobs;
  for (const std::string& tokens : rows) {
    jobs.push_back(std::async(std::launch::async, [tokens, field] {
      const PsiTensor psi = PsiTensor::parse(tokens, field);
      auto algebra = std::make_shared<const QuotientAlgebra>(
          QuotientAlgebra::from_presentation(p1p1_presentation(psi)));
      const Hochschild hh(algebra, 3);
      const HHReport r = hh_report(hh);
      const KernelModelReport km = kernel_model_dims(psi);
      Json row;
      row["psi"] = psi.to_string();
      row["label"] = psi_label(psi);
      row["stab"] = km.stab;
      row["jj"] = km.jj;
      row["kernel_model"] = km.total;
      row["hh"] = dims_json(r.hh);
      row["small_complex_dims"] = dims_json(r.small_dims.value_or(std::vector<std::size_t>{}));
      row["cup_rank"] = hh.cup_rank(1, 1);
      row["cup_nonzero"] = any_positive_cup(hh);
      return row;
    }));
  }
  Json doc;
  doc["table"] = "psi-examples";
  doc["field"] = field.to_string();
  doc["rows"] = Json::array();
  for (auto& j : jobs) doc["rows"].push_back(j.get());
  doc["version"] = kVersion;
  return doc;
}

std::vector<std::string> default_sweep(const Field& field) {
  if (!field.is_rational() && field.characteristic() <= 31) {
    std::vector<std::string> out;
    for (std::uint64_t q = 1; q < field.characteristic(); ++q) out.push_back(std::to_string(q));
    return out;
  }
  return {"1", "-1", "2", "1/2", "3"};
}

Json torus_sweep_table(const Field& field, const std::vector<std::string>& qs) {
  struct Job {
    std::string complex;
    std::string q;
  };
  std::vector<Job> plan;
  for (const char* c : {"torus-s", "torus-c"}) {
    for (const auto& q : qs) plan.push_back({c, q});
  }
  std::vector<std::future<Json>> jobs;
  for (const Job& job : plan) {
    jobs.push_back(std::async(std::launch::async, [job, field] {
      const Scalar q = field.parse_scalar(job.q);
      auto algebra = std::make_shared<const QuotientAlgebra>(
          QuotientAlgebra::from_presentation(family_presentation(job.complex, field, job.q, {})));
      const Hochschild hh(algebra, 3);
      const HHReport r = hh_report(hh);
      const long long order = job.complex == "torus-s" ? 3 : 4;
      Json row;
      row["complex"] = job.complex;
      row["q"] = q.to_string();
      row["root_of_unity"] = q.pow(order).is_one();
      row["root_order"] = order;
      row["hh"] = dims_json(r.hh);
      row["small_complex_dims"] = dims_json(r.small_dims.value_or(std::vector<std::size_t>{}));
      row["cup_rank"] = hh.cup_rank(1, 1);
      return row;
    }));
  }
  Json doc;
  doc["table"] = "torus-sweep";
  doc["field"] = field.to_string();
  doc["rows"] = Json::array();
  for (auto& j : jobs) doc["rows"].push_back(j.get());
  doc["version"] = kVersion;
  return doc;
}

Json feasibility_table(const Field& field, std::size_t samples, std::uint64_t seed) {
  // (stab, 𝔍) pairs that can occur.
  static const std::set<std::pair<std::size_t, std::size_t>> allowed = {
      {6, 0}, {3, 3}, {3, 0}, {2, 1}, {2, 0}, {1, 2}, {1, 1}, {1, 0}, {0, 1}, {0, 0}};
  std::mt19937_64 rng(seed);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (std::size_t i = 0; i < samples; ++i) {
    const PsiTensor psi = random_psi(rng, field);
    ++seen[{stab_dim(psi), jj_dim(psi)}];
  }
  Json doc;
  doc["table"] = "feasibility";
  doc["field"] = field.to_string();
  doc["samples"] = samples;
  doc["rows"] = Json::array();
  for (const auto& [pair, count] : seen) {
    doc["rows"].push_back(Json{{"stab", pair.first},
                               {"jj", pair.second},
                               {"count", count},
                               {"allowed", allowed.count(pair) > 0}});
  }
  doc["version"] = kVersion;
  doc["seed"] = seed;
  return doc;
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "text") return Format::text;
  throw ValidationError("unknown output format '" + text + "'");
}

namespace {

std::string join_dims(const Json& a, char sep) {
  if (a.is_null()) return "";
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(a[i].get<std::size_t>());
  }
  return out;
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) return "(" + join_dims(v, ',') + ")";
  if (v.is_null()) return "-";
  return v.dump();
}

std::string csv_cell(const Json& v) {
  std::string s = v.is_array() ? join_dims(v, ' ') : cell(v);
  if (s.find_first_of(",\"") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return s;
}

std::string family_cell(const Json& doc) {
  const Json& f = doc["family"];
  return f.is_string() ? f.get<std::string>() : f["file"].get<std::string>();
}

}  // namespace

std::string render_report(const Json& doc, Format format) {
  if (format == Format::json) return doc.dump(2) + "\n";
  std::string params;
  for (const auto& [k, v] : doc["params"].items()) {
    params += (params.empty() ? "" : " ") + k + "=" + v.get<std::string>();
  }
  if (format == Format::csv) {
    std::ostringstream out;
    out << "family,field,params,small_complex_dims,bar_complex_dims,hh,cup_rank,cup_nonzero,"
           "hh1_bracket_rank\n";
    out << csv_cell(family_cell(doc)) << ',' << doc["field"].get<std::string>() << ','
        << csv_cell(params) << ',' << csv_cell(doc["small_complex_dims"]) << ','
        << csv_cell(doc["bar_complex_dims"]) << ',' << csv_cell(doc["hh"]) << ','
        << doc["cup"]["rank"].dump() << ',' << doc["cup"]["nonzero"].dump() << ','
        << doc["bracket"]["hh1_bracket_rank"].dump() << '\n';
    return out.str();
  }
  std::ostringstream out;
  out << "family      " << family_cell(doc) << (params.empty() ? "" : "  (" + params + ")") << '\n'
      << "field       " << doc["field"].get<std::string>() << '\n'
      << "small dims  " << cell(doc["small_complex_dims"]) << '\n'
      << "bar dims    " << cell(doc["bar_complex_dims"]) << '\n'
      << "HH dims     " << cell(doc["hh"]) << '\n'
      << "euler       " << doc["euler"]["terms"].dump() << " = " << doc["euler"]["hh"].dump() << '\n'
      << "cup         rank " << doc["cup"]["rank"].dump() << (doc["cup"]["nonzero"].get<bool>() ? ", nonzero" : ", zero") << '\n'
      << "bracket     HH1 rank " << doc["bracket"]["hh1_bracket_rank"].dump() << '\n';
  if (!doc["seed"].is_null()) out << "seed        " << doc["seed"].dump() << '\n';
  return out.str();
}

std::string render_table(const Json& doc, Format format) {
  if (format == Format::json) return doc.dump(2) + "\n";
  const Json& rows = doc["rows"];
  std::vector<std::string> keys;
  if (!rows.empty()) {
    for (const auto& [k, v] : rows[0].items()) keys.push_back(k);
  }
  std::vector<std::vector<std::string>> grid;
  grid.push_back(keys);
  for (const Json& row : rows) {
    std::vector<std::string> line;
    for (const auto& k : keys) line.push_back(format == Format::csv ? csv_cell(row[k]) : cell(row[k]));
    grid.push_back(std::move(line));
  }
  std::ostringstream out;
  if (format == Format::csv) {
    for (const auto& line : grid) {
      for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << line[i];
      out << '\n';
    }
    return out.str();
  }
  // Width in code points so ⊗ counts once.
  auto width = [](const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;
    return n;
  };
  std::vector<std::size_t> w(keys.size(), 0);
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) w[i] = std::max(w[i], width(line[i]));
  }
  out << doc["table"].get<std::string>() << " over " << doc["field"].get<std::string>() << '\n';
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << line[i];
      if (i + 1 < line.size()) out << std::string(w[i] - width(line[i]) + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hhcalc::tools
