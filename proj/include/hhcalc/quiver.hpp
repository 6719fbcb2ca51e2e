#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hhcalc/field.hpp"

namespace hhcalc {

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;

  bool operator==(const Arrow&) const = default;
};

/// A finite quiver with named vertices and arrows, in insertion order.
class Quiver {
 public:
  std::size_t add_vertex(std::string name);
  std::size_t add_arrow(std::string name, std::size_t source, std::size_t target);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& vertex(std::size_t v) const { return vertices_.at(v); }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<std::size_t> find_vertex(const std::string& name) const;
  std::optional<std::size_t> find_arrow(const std::string& name) const;

  bool is_acyclic() const;
  /// Length of the longest path; throws ValidationError on cyclic quivers.
  std::size_t longest_path_length() const;

  bool operator==(const Quiver& o) const {
    return vertices_ == o.vertices_ && arrows_ == o.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, std::size_t> vertex_index_;
  std::map<std::string, std::size_t> arrow_index_;
};

/// A path in a quiver. Arrows are stored in written order: `c*b*a` is stored
/// as {c, b, a} and traverses a first. Trivial paths carry their vertex.
class Path {
 public:
  static Path trivial(std::size_t vertex);
  static Path arrow(const Quiver& quiver, std::size_t arrow);
  /// Throws ValidationError when consecutive arrows do not compose.
  static Path from_arrows(const Quiver& quiver, std::vector<std::size_t> written);

  std::size_t source() const { return source_; }
  std::size_t target() const { return target_; }
  std::size_t length() const { return arrows_.size(); }
  bool is_trivial() const { return arrows_.empty(); }
  const std::vector<std::size_t>& arrows() const { return arrows_; }

  bool parallel_to(const Path& o) const { return source_ == o.source_ && target_ == o.target_; }

  /// Position (in written order) of the first occurrence of `factor`, if any.
  /// Trivial factors never match.
  std::optional<std::size_t> find_factor(const Path& factor, std::size_t from = 0) const;

  /// Written-order slice [begin, end) as a path. An empty slice is the trivial
  /// path at the appropriate endpoint.
  Path slice(const Quiver& quiver, std::size_t begin, std::size_t end) const;

  /// `c*b*a`, or `e_<vertex>` for trivial paths.
  std::string to_string(const Quiver& quiver) const;

  bool operator==(const Path&) const = default;
  /// Length first, then lexicographic on arrow indices, then vertex.
  std::strong_ordering operator<=>(const Path& o) const;

 private:
  friend Path compose(const Path& p, const Path& q);
  Path(std::size_t source, std::size_t target, std::vector<std::size_t> arrows)
      : source_(source), target_(target), arrows_(std::move(arrows)) {}

  std::size_t source_ = 0;
  std::size_t target_ = 0;
  std::vector<std::size_t> arrows_;
};

/// p∘q, q traversed first. Throws ValidationError unless source(p) = target(q).
Path compose(const Path& p, const Path& q);

/// All paths of length ≤ max_len, graded by length, each grade in canonical order.
std::vector<Path> enumerate_paths(const Quiver& quiver, std::size_t max_len);

/// A finite linear combination of paths over one field, without zero terms.
class AlgebraElement {
 public:
  explicit AlgebraElement(Field field) : field_(field) {}
  static AlgebraElement monomial(const Path& path, const Scalar& coeff);

  const Field& field() const { return field_; }
  const std::map<Path, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Path& path, const Scalar& coeff);
  Scalar coefficient(const Path& path) const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const Scalar& c) const;
  /// Product in the path algebra: non-composable pairs multiply to zero.
  AlgebraElement operator*(const AlgebraElement& o) const;

  bool operator==(const AlgebraElement& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
  }

  /// Terms in descending canonical order, e.g. `c*a - 2*c*b`.
  std::string to_string(const Quiver& quiver) const;

 private:
  Field field_;
  std::map<Path, Scalar> terms_;
};

}  // namespace hhcalc
