#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hhcalc/quiver.hpp"

namespace hhcalc {

/// How leading terms of relations are chosen.
///
/// `deglex`: longer paths are larger; equal lengths compare left to right in
/// written order, an arrow earlier in `precedence` being larger. The leading
/// term is the largest path of the relation.
///
/// `explicit_leading`: each relation names its own leading term (the first
/// term in DSL text). Such systems are taken as given and never completed.
struct OrderPolicy {
  enum class Kind { deglex, explicit_leading };
  Kind kind = Kind::deglex;
  /// Arrow indices, highest precedence first. Empty means arrow list order.
  std::vector<std::size_t> precedence;

  bool operator==(const OrderPolicy&) const = default;
};

struct BoundQuiverPresentation {
  Quiver quiver;
  Field field = Field::rationals();
  std::vector<AlgebraElement> relations;
  /// Designated leading paths, parallel to `relations`; only for explicit_leading.
  std::vector<Path> leading;
  OrderPolicy order;
  /// Non-fatal diagnostics collected by constructors; not serialized.
  std::vector<std::string> warnings;

  bool operator==(const BoundQuiverPresentation& o) const {
    return quiver == o.quiver && field == o.field && relations == o.relations &&
           leading == o.leading && order == o.order;
  }
};

/// Checks relation shape: nonzero, parallel, length-homogeneous terms of
/// length ≥ 2 over the presentation's field, and leading terms that occur in
/// their relation. Throws ValidationError.
void validate(const BoundQuiverPresentation& pres);

/// Parses the presentation DSL:
///
///     field fp:7
///     quiver { vertices: v1 v2 v3 ; arrows: a: v1 -> v2 ; b: v1 -> v2 ; c: v2 -> v3 }
///     order deglex: c b a        # optional; or `order explicit`
///     relations { c*a - 2*c*b ; }
///
/// `#` starts a comment. Throws ParseError (with position) or ValidationError.
BoundQuiverPresentation parse_presentation(std::string_view text);

/// Inverse of parse_presentation.
std::string serialize_presentation(const BoundQuiverPresentation& pres);

}  // namespace hhcalc
