#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hhcalc/errors.hpp"
#include "hhcalc/families.hpp"
#include "hhcalc/version.hpp"
#include "report.hpp"
#include "sampling.hpp"
#include "suite.hpp"

namespace {

using namespace hhcalc;
using namespace hhcalc::tools;

enum Exit : int {
  kOk = 0,
  kUnexpected = 1,
  kInput = 2,
  kNonConfluent = 3,
  kInfinite = 4,
  kConsistency = 5,
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int run_checks(Scope scope, std::uint64_t seed, bool inject_fault, Format format) {
  const auto results = invariant_checks(scope, seed, inject_fault);
  Json doc;
  doc["scope"] = scope == Scope::full ? "full" : "fast";
  doc["seed"] = seed;
  doc["checks"] = Json::array();
  doc["failures"] = Json::array();
  for (const auto& r : results) {
    doc["checks"].push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"notes", r.notes}});
    if (!r.pass) doc["failures"].push_back(r.name);
  }
  doc["version"] = kVersion;
  if (format == Format::json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name;
      if (!r.detail.empty()) std::cout << "  [" << r.detail << ']';
      std::cout << '\n';
      for (const auto& n : r.notes) std::cout << "      note: " << n << '\n';
    }
  }
  return doc["failures"].empty() ? kOk : kConsistency;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology of bound quiver algebras"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  ReportRequest req;
  std::string out = "json";
  bool trace = false;
  std::string family, file, field, q, psi;
  std::uint64_t seed = kDefaultSeed;

  auto* report = app.add_subcommand("report", "HH dimensions, cup and bracket summary");
  auto* fam = report->add_option("--family", family, "torus-s, torus-c, p1p1, pi, kronecker or monomial");
  auto* fil = report->add_option("--file", file, "presentation in the DSL")->check(CLI::ExistingFile);
  fam->excludes(fil);
  auto* rfield = report->add_option("--field", field, "rational or fp:<p>");
  auto* rq = report->add_option("--q", q, "deformation parameter of the tori");
  auto* rpsi = report->add_option("--psi", psi, "Psi tokens, e.g. ee:2,ff:2,hh:1");
  auto* rseed = report->add_option("--seed", seed, "seed of the monomial family");
  report->add_option("--out", out, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  report->add_option("--nmax", req.nmax, "top cohomological degree")->check(CLI::Range(1, 6));
  report->add_flag("--trace", trace, "log ambiguity processing to stderr");
  report->add_flag("--inject-fault", req.inject_fault)->group("");

  std::string table_name;
  std::string table_field = "rational";
  std::string qlist;
  std::size_t samples = 200;
  auto* table = app.add_subcommand("table", "reproduce a table");
  table->add_option("name", table_name, "psi-examples, torus-sweep or feasibility")
      ->required()
      ->check(CLI::IsMember({"psi-examples", "torus-sweep", "feasibility"}));
  table->add_option("--field", table_field, "rational or fp:<p>");
  table->add_option("--q", qlist, "comma-separated q values for torus-sweep");
  table->add_option("--samples", samples, "random Psi count for feasibility");
  table->add_option("--seed", seed, "seed for feasibility");
  table->add_option("--out", out, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

  std::string scope_name;
  bool checks_fault = false;
  auto* checks = app.add_subcommand("checks", "run the invariant suites");
  checks->add_option("scope", scope_name, "fast or full")->required()->check(CLI::IsMember({"fast", "full"}));
  checks->add_option("--seed", seed, "seed for randomized suites");
  checks->add_option("--out", out, "json or text")->check(CLI::IsMember({"json", "text"}));
  checks->add_flag("--inject-fault", checks_fault)->group("");

  auto* exp = app.add_subcommand("export", "print a built-in family as DSL text");
  exp->add_option("--family", family, "family name")->required();
  auto* efield = exp->add_option("--field", field, "rational or fp:<p>");
  auto* eq = exp->add_option("--q", q, "deformation parameter of the tori");
  auto* epsi = exp->add_option("--psi", psi, "Psi tokens");
  auto* eseed = exp->add_option("--seed", seed, "seed of the monomial family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (report->parsed() || exp->parsed()) {
      const bool is_report = report->parsed();
      if (!family.empty()) req.family = family;
      if (!file.empty()) req.file = file;
      if (*(is_report ? rfield : efield)) req.field = field;
      if (*(is_report ? rq : eq)) req.q = q;
      if (*(is_report ? rpsi : epsi)) req.psi = psi;
      if (*(is_report ? rseed : eseed)) req.seed = seed;
      if (is_report) {
        if (trace) req.trace = &std::cerr;
        std::cout << render_report(run_report(req), parse_format(out));
      } else {
        std::cout << serialize_presentation(request_presentation(req));
      }
    } else if (table->parsed()) {
      const Field f = parse_field(table_field);
      Json doc;
      if (table_name == "psi-examples") {
        doc = psi_examples_table(f);
      } else if (table_name == "torus-sweep") {
        doc = torus_sweep_table(f, qlist.empty() ? default_sweep(f) : split_commas(qlist));
      } else {
        doc = feasibility_table(f, samples, seed);
      }
      std::cout << render_table(doc, parse_format(out));
    } else if (checks->parsed()) {
      return run_checks(scope_name == "full" ? Scope::full : Scope::fast, seed, checks_fault,
                        parse_format(out));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInput;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInput;
  } catch (const DomainError& e) {
    std::cerr << "unsupported parameters: " << e.what() << '\n';
    return kInput;
  } catch (const FieldError& e) {
    std::cerr << "field error: " << e.what() << '\n';
    return kInput;
  } catch (const NonConfluentError& e) {
    std::cerr << "not confluent: " << e.what() << '\n';
    return kNonConfluent;
  } catch (const InfiniteDimensionalError& e) {
    std::cerr << "infinite dimensional: " << e.what() << '\n';
    return kInfinite;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return kConsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnexpected;
  }
  return kOk;
}
