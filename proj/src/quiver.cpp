#include "hhcalc/quiver.hpp"

#include <algorithm>
#include <functional>

namespace hhcalc {

std::size_t Quiver::add_vertex(std::string name) {
  if (vertex_index_.contains(name)) throw ValidationError("duplicate vertex '" + name + "'");
  vertex_index_.emplace(name, vertices_.size());
  vertices_.push_back(std::move(name));
  return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(std::string name, std::size_t source, std::size_t target) {
  if (arrow_index_.contains(name)) throw ValidationError("duplicate arrow '" + name + "'");
  if (source >= vertices_.size() || target >= vertices_.size()) {
    throw ValidationError("arrow '" + name + "' refers to an unknown vertex");
  }
  arrow_index_.emplace(name, arrows_.size());
  arrows_.push_back(Arrow{std::move(name), source, target});
  return arrows_.size() - 1;
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& name) const {
  if (auto it = vertex_index_.find(name); it != vertex_index_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
  if (auto it = arrow_index_.find(name); it != arrow_index_.end()) return it->second;
  return std::nullopt;
}

namespace {

// Longest path ending at each vertex; nullopt when a cycle exists.
std::optional<std::vector<std::size_t>> longest_paths(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& a : q.arrows()) ++indegree[a.target];
  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) order.push_back(v);
  }
  std::vector<std::size_t> depth(n, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t v = order[i];
    for (const auto& a : q.arrows()) {
      if (a.source != v) continue;
      depth[a.target] = std::max(depth[a.target], depth[v] + 1);
      if (--indegree[a.target] == 0) order.push_back(a.target);
    }
  }
  if (order.size() != n) return std::nullopt;
  return depth;
}

}  // namespace

bool Quiver::is_acyclic() const { return longest_paths(*this).has_value(); }

std::size_t Quiver::longest_path_length() const {
  auto depth = longest_paths(*this);
  if (!depth) throw ValidationError("quiver has an oriented cycle");
  return depth->empty() ? 0 : *std::max_element(depth->begin(), depth->end());
}

Path Path::trivial(std::size_t vertex) { return Path(vertex, vertex, {}); }

Path Path::arrow(const Quiver& quiver, std::size_t arrow) {
  const Arrow& a = quiver.arrow(arrow);
  return Path(a.source, a.target, {arrow});
}

Path Path::from_arrows(const Quiver& quiver, std::vector<std::size_t> written) {
  if (written.empty()) throw ValidationError("empty arrow sequence");
  for (std::size_t i = 0; i + 1 < written.size(); ++i) {
    const Arrow& later = quiver.arrow(written[i]);
    const Arrow& earlier = quiver.arrow(written[i + 1]);
    if (later.source != earlier.target) {
      throw ValidationError("arrows '" + later.name + "' and '" + earlier.name +
                            "' do not compose");
    }
  }
  const std::size_t src = quiver.arrow(written.back()).source;
  const std::size_t tgt = quiver.arrow(written.front()).target;
  return Path(src, tgt, std::move(written));
}

std::optional<std::size_t> Path::find_factor(const Path& factor, std::size_t from) const {
  if (factor.is_trivial() || from > length() || factor.length() > length() - from) {
    return std::nullopt;
  }
  auto it = std::search(arrows_.begin() + static_cast<std::ptrdiff_t>(from), arrows_.end(),
                        factor.arrows_.begin(), factor.arrows_.end());
  if (it == arrows_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - arrows_.begin());
}

Path Path::slice(const Quiver& quiver, std::size_t begin, std::size_t end) const {
  if (begin > end || end > length()) throw ValidationError("path slice out of range");
  // Vertex reached just before written position i is traversed.
  auto boundary = [&](std::size_t i) {
    return i == length() ? source_ : quiver.arrow(arrows_[i]).target;
  };
  if (begin == end) return trivial(boundary(begin));
  std::vector<std::size_t> part(arrows_.begin() + static_cast<std::ptrdiff_t>(begin),
                                arrows_.begin() + static_cast<std::ptrdiff_t>(end));
  return Path(boundary(end), boundary(begin), std::move(part));
}

std::string Path::to_string(const Quiver& quiver) const {
  if (is_trivial()) return "e_" + quiver.vertex(source_);
  std::string out;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (i != 0) out += '*';
    out += quiver.arrow(arrows_[i]).name;
  }
  return out;
}

std::strong_ordering Path::operator<=>(const Path& o) const {
  if (auto c = length() <=> o.length(); c != 0) return c;
  if (auto c = arrows_ <=> o.arrows_; c != 0) return c;
  if (auto c = source_ <=> o.source_; c != 0) return c;
  return target_ <=> o.target_;
}

Path compose(const Path& p, const Path& q) {
  if (p.source() != q.target()) throw ValidationError("paths do not compose");
  if (q.is_trivial()) return p;
  if (p.is_trivial()) return q;
  std::vector<std::size_t> arrows = p.arrows();
  arrows.insert(arrows.end(), q.arrows().begin(), q.arrows().end());
  return Path(q.source(), p.target(), std::move(arrows));
}

std::vector<Path> enumerate_paths(const Quiver& quiver, std::size_t max_len) {
  std::vector<Path> out;
  for (std::size_t v = 0; v < quiver.vertex_count(); ++v) out.push_back(Path::trivial(v));
  if (max_len == 0) return out;
  std::vector<Path> layer;
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) layer.push_back(Path::arrow(quiver, a));
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
    if (len == max_len) break;
    std::vector<Path> next;
    for (const Path& p : layer) {
      for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
        if (quiver.arrow(a).source == p.target()) next.push_back(compose(Path::arrow(quiver, a), p));
      }
    }
    layer = std::move(next);
  }
  return out;
}

AlgebraElement AlgebraElement::monomial(const Path& path, const Scalar& coeff) {
  AlgebraElement e(coeff.field());
  e.add_term(path, coeff);
  return e;
}

void AlgebraElement::add_term(const Path& path, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  if (!(coeff.field() == field_)) throw FieldError("field mismatch in algebra element");
  auto [it, inserted] = terms_.try_emplace(path, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar AlgebraElement::coefficient(const Path& path) const {
  if (auto it = terms_.find(path); it != terms_.end()) return it->second;
  return field_.zero();
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (!(field_ == o.field_)) throw FieldError("field mismatch in algebra element");
  AlgebraElement out = *this;
  for (const auto& [p, c] : o.terms_) out.add_term(p, c);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  return *this + o * field_.from_int(-1);
}

AlgebraElement AlgebraElement::operator*(const Scalar& c) const {
  AlgebraElement out(field_);
  if (c.is_zero()) return out;
  for (const auto& [p, v] : terms_) out.terms_.emplace(p, v * c);
  return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  if (!(field_ == o.field_)) throw FieldError("field mismatch in algebra element");
  AlgebraElement out(field_);
  for (const auto& [p, a] : terms_) {
    for (const auto& [q, b] : o.terms_) {
      if (p.source() == q.target()) out.add_term(compose(p, q), a * b);
    }
  }
  return out;
}

std::string AlgebraElement::to_string(const Quiver& quiver) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string coeff = it->second.to_string();
    bool negative = !coeff.empty() && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (coeff != "1") out += coeff + "*";
    out += it->first.to_string(quiver);
    first = false;
  }
  return out;
}

}  // namespace hhcalc
