#include "hhcalc/families.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "hhcalc/hochschild.hpp"

namespace hhcalc {

namespace {

// Triangles of the minimal simplicial torus as counterclockwise walks, each
// starting at its angle labelled 0 in the reference labelling.
constexpr std::size_t kTriangles[14][3] = {
    {3, 5, 1}, {1, 0, 3}, {5, 3, 4}, {2, 1, 5}, {5, 0, 2}, {0, 5, 6}, {4, 6, 5},
    {6, 3, 0}, {0, 1, 4}, {1, 2, 6}, {2, 4, 3}, {6, 4, 1}, {3, 6, 2}, {4, 2, 0},
};

void refuse_char2(const Field& f, const char* what) {
  if (f.characteristic() == 2) throw DomainError(std::string(what) + " is not defined in characteristic 2");
}

}  // namespace

CellValidation validate_cells(const CellComplexData& cells) {
  CellValidation v;
  v.euler = static_cast<long long>(cells.vertices.size()) -
            static_cast<long long>(cells.edges.size()) + static_cast<long long>(cells.faces.size());
  v.closed_walks = true;
  std::vector<int> count(cells.edges.size(), 0);
  std::vector<int> forward(cells.edges.size(), 0);
  std::vector<int> backward(cells.edges.size(), 0);
  for (const auto& f : cells.faces) {
    const std::size_t n = f.walk.size();
    if (n < 2 || f.edges.size() != n) {
      v.closed_walks = false;
      continue;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t a = f.walk[k];
      const std::size_t b = f.walk[(k + 1) % n];
      if (f.edges[k] >= cells.edges.size() || a >= cells.vertices.size()) {
        v.closed_walks = false;
        continue;
      }
      const auto& e = cells.edges[f.edges[k]];
      ++count[f.edges[k]];
      if (e.u == a && e.w == b) {
        ++forward[f.edges[k]];
      } else if (e.u == b && e.w == a) {
        ++backward[f.edges[k]];
      } else {
        v.closed_walks = false;
      }
    }
  }
  v.edges_in_two_faces = std::all_of(count.begin(), count.end(), [](int c) { return c == 2; });
  v.coherent = true;
  for (std::size_t e = 0; e < cells.edges.size(); ++e) {
    if (forward[e] != 1 || backward[e] != 1) v.coherent = false;
  }
  return v;
}

CellComplexData reverse_orientation(const CellComplexData& cells) {
  CellComplexData out = cells;
  for (auto& f : out.faces) {
    const std::size_t n = f.walk.size();
    std::vector<std::size_t> walk(f.walk.rbegin(), f.walk.rend());
    std::vector<std::size_t> edges(n);
    for (std::size_t k = 0; k < n; ++k) edges[k] = f.edges[(2 * n - 2 - k) % n];
    f.walk = std::move(walk);
    f.edges = std::move(edges);
  }
  return out;
}

CellComplexData torus_simplicial_complex() {
  CellComplexData c;
  for (std::size_t v = 0; v < 7; ++v) c.vertices.push_back("v" + std::to_string(v));
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_of;
  for (std::size_t u = 0; u < 7; ++u) {
    for (std::size_t w = u + 1; w < 7; ++w) {
      edge_of[{u, w}] = c.edges.size();
      c.edges.push_back({"e" + std::to_string(u) + std::to_string(w), u, w});
    }
  }
  for (std::size_t t = 0; t < 14; ++t) {
    CellComplexData::Face f{"t" + std::to_string(t + 1), {}, {}};
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t a = kTriangles[t][k];
      const std::size_t b = kTriangles[t][(k + 1) % 3];
      f.walk.push_back(a);
      f.edges.push_back(edge_of.at({std::min(a, b), std::max(a, b)}));
    }
    c.faces.push_back(std::move(f));
  }
  return c;
}

CellComplexData torus_cubical_complex() {
  CellComplexData c;
  auto vtx = [](std::size_t i, std::size_t j) { return (i % 2) + 2 * (j % 2); };
  for (std::size_t v = 0; v < 4; ++v) c.vertices.push_back("v" + std::to_string(v));
  // H(i,j) joins (i,j)-(i+1,j), V(i,j) joins (i,j)-(i,j+1); indices mod 2.
  auto h = [](std::size_t i, std::size_t j) { return (i % 2) + 2 * (j % 2); };
  auto v = [](std::size_t i, std::size_t j) { return 4 + (i % 2) + 2 * (j % 2); };
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t i = 0; i < 2; ++i) {
      c.edges.push_back({"H" + std::to_string(i) + std::to_string(j), vtx(i, j), vtx(i + 1, j)});
    }
  }
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t i = 0; i < 2; ++i) {
      c.edges.push_back({"V" + std::to_string(i) + std::to_string(j), vtx(i, j), vtx(i, j + 1)});
    }
  }
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t i = 0; i < 2; ++i) {
      c.faces.push_back({"F" + std::to_string(i) + std::to_string(j),
                         {vtx(i, j), vtx(i + 1, j), vtx(i + 1, j + 1), vtx(i, j + 1)},
                         {h(i, j), v(i + 1, j), h(i, j + 1), v(i, j)}});
    }
  }
  return c;
}

BoundQuiverPresentation incidence_presentation(const CellComplexData& cells, const Scalar& q) {
  if (q.is_zero()) throw DomainError("deformation parameter q must be nonzero");
  const CellValidation check = validate_cells(cells);
  if (!check.ok()) throw ValidationError("invalid cell complex");

  BoundQuiverPresentation pres;
  pres.field = q.field();
  pres.order.kind = OrderPolicy::Kind::explicit_leading;
  Quiver& quiver = pres.quiver;
  const std::size_t nv = cells.vertices.size();
  const std::size_t ne = cells.edges.size();
  for (const auto& v : cells.vertices) quiver.add_vertex(v);
  for (const auto& e : cells.edges) quiver.add_vertex(e.name);
  for (const auto& f : cells.faces) quiver.add_vertex(f.name);

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> alpha;  // (vertex, edge)
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> beta;   // (edge, face)
  for (std::size_t e = 0; e < ne; ++e) {
    for (std::size_t v : {cells.edges[e].u, cells.edges[e].w}) {
      alpha[{v, e}] = quiver.add_arrow("a_" + cells.vertices[v] + "_" + cells.edges[e].name, v, nv + e);
    }
  }
  for (std::size_t f = 0; f < cells.faces.size(); ++f) {
    for (std::size_t e : cells.faces[f].edges) {
      beta[{e, f}] = quiver.add_arrow("b_" + cells.edges[e].name + "_" + cells.faces[f].name,
                                      nv + e, nv + ne + f);
    }
  }

  for (std::size_t f = 0; f < cells.faces.size(); ++f) {
    const auto& face = cells.faces[f];
    const std::size_t n = face.walk.size();
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t v = face.walk[k];
      const std::size_t out = face.edges[k];
      const std::size_t in = face.edges[(k + n - 1) % n];
      const Path lead = Path::from_arrows(quiver, {beta.at({out, f}), alpha.at({v, out})});
      const Path other = Path::from_arrows(quiver, {beta.at({in, f}), alpha.at({v, in})});
      AlgebraElement rel = AlgebraElement::monomial(lead, pres.field.one());
      rel.add_term(other, -q);
      pres.relations.push_back(std::move(rel));
      pres.leading.push_back(lead);
    }
  }
  if (pres.field.characteristic() == 3 && q.pow(3).is_one()) {
    pres.warnings.push_back("characteristic 3 with q^3 = 1: outside the characteristic-0 setting");
  }
  validate(pres);
  return pres;
}

std::vector<std::vector<std::size_t>> angle_labelling(const CellComplexData& cells) {
  if (cells.faces.empty()) return {};
  const std::size_t n = cells.faces[0].walk.size();
  for (const auto& f : cells.faces) {
    if (f.walk.size() != n) throw DomainError("angle labelling needs faces of equal size");
  }
  std::vector<std::vector<std::size_t>> faces_of_edge(cells.edges.size());
  for (std::size_t f = 0; f < cells.faces.size(); ++f) {
    for (std::size_t e : cells.faces[f].edges) faces_of_edge[e].push_back(f);
  }
  std::vector<std::vector<std::size_t>> labels(cells.faces.size());
  auto fill = [&](std::size_t k, std::size_t label) {
    std::vector<std::size_t> out(n);
    for (std::size_t m = 0; m < n; ++m) out[(k + m) % n] = (label + n * n - m) % n;
    return out;
  };
  labels[0] = fill(0, 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t f = queue.front();
    queue.pop_front();
    const auto& face = cells.faces[f];
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t e = face.edges[k];
      const std::size_t u = face.walk[k];
      for (std::size_t g : faces_of_edge[e]) {
        if (g == f) continue;
        const auto& other = cells.faces[g];
        for (std::size_t j = 0; j < n; ++j) {
          if (other.edges[j] != e || other.walk[(j + 1) % n] != u) continue;
          const auto expect = fill((j + 1) % n, (labels[f][k] + n - 1) % n);
          if (labels[g].empty()) {
            labels[g] = expect;
            queue.push_back(g);
          } else if (labels[g] != expect) {
            throw ConsistencyError("angle labelling propagation is contradictory");
          }
        }
      }
    }
  }
  for (const auto& l : labels) {
    if (l.empty()) throw ConsistencyError("cell complex is not connected through edges");
  }
  return labels;
}

AngleFunctionalResult angle_functional(const Scalar& q) {
  if (!q.pow(3).is_one()) throw DomainError("the angle functional needs q^3 = 1");
  const CellComplexData cells = torus_simplicial_complex();
  const auto labels = angle_labelling(cells);
  auto algebra = std::make_shared<const QuotientAlgebra>(
      QuotientAlgebra::from_presentation(incidence_presentation(cells, q)));
  const SmallComplex small(algebra);
  const Field& field = q.field();

  SparseVector lambda;
  std::size_t rule = 0;
  for (std::size_t f = 0; f < cells.faces.size(); ++f) {
    for (std::size_t k = 0; k < cells.faces[f].walk.size(); ++k, ++rule) {
      const Scalar value = q.pow(static_cast<long long>(labels[f][k]));
      for (std::size_t row = small.relation_offset(rule); row < small.relation_offset(rule + 1); ++row) {
        lambda.set(row, value);
      }
    }
  }
  AngleFunctionalResult r;
  const SparseMatrix& d1 = small.differential(1);
  r.generators = d1.cols();
  for (std::size_t j = 0; j < d1.cols(); ++j) {
    Scalar s = field.zero();
    for (const auto& [row, x] : d1.column(j)) s += lambda.get(row, field) * x;
    if (!s.is_zero()) ++r.nonzero;
  }
  r.annihilates = r.nonzero == 0;
  return r;
}

bool angle_functional_check(const Scalar& q) { return angle_functional(q).annihilates; }

BoundQuiverPresentation p1p1_presentation(const PsiTensor& psi) {
  const Field& field = psi.field();
  refuse_char2(field, "the deformed tensor square");
  BoundQuiverPresentation pres;
  pres.field = field;
  pres.order.kind = OrderPolicy::Kind::explicit_leading;
  Quiver& q = pres.quiver;
  // vertex (i,j) has index 2(i-1) + (j-1)
  for (const char* v : {"v11", "v12", "v21", "v22"}) q.add_vertex(v);
  const char gens[2] = {'x', 'y'};
  std::size_t left[2][2];   // α×e_j : (1,j) -> (2,j)
  std::size_t right[2][2];  // e_i×β : (i,1) -> (i,2)
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t j = 0; j < 2; ++j) {
      left[a][j] = q.add_arrow(std::string{gens[a]} + "L" + std::to_string(j + 1), j, 2 + j);
    }
  }
  for (std::size_t b = 0; b < 2; ++b) {
    for (std::size_t i = 0; i < 2; ++i) {
      right[b][i] = q.add_arrow(std::string{gens[b]} + "R" + std::to_string(i + 1), 2 * i, 2 * i + 1);
    }
  }
  const Mat4 k = psi.kronecker();
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      const std::size_t u = 2 * a + b;
      // ū = (α×e_2)(e_1×β) through (1,2); u = (e_2×β)(α×e_1) through (2,1)
      const Path lead = Path::from_arrows(q, {left[a][1], right[b][0]});
      AlgebraElement rel = AlgebraElement::monomial(lead, field.one());
      for (std::size_t a2 = 0; a2 < 2; ++a2) {
        for (std::size_t b2 = 0; b2 < 2; ++b2) {
          const std::size_t r = 2 * a2 + b2;
          const Scalar w = (r == u ? field.one() : field.zero()) + k[r][u];
          rel.add_term(Path::from_arrows(q, {right[b2][1], left[a2][0]}), -w);
        }
      }
      pres.relations.push_back(std::move(rel));
      pres.leading.push_back(lead);
    }
  }
  validate(pres);
  return pres;
}

BoundQuiverPresentation pi_presentation(const Field& field) {
  refuse_char2(field, "the algebra Pi");
  BoundQuiverPresentation pres;
  pres.field = field;
  pres.order.kind = OrderPolicy::Kind::explicit_leading;
  Quiver& q = pres.quiver;
  for (const char* v : {"1", "2", "3", "4"}) q.add_vertex(v);
  std::size_t x[3];
  std::size_t y[3];
  for (std::size_t i = 0; i < 3; ++i) {
    x[i] = q.add_arrow("x" + std::to_string(i), i, i + 1);
    y[i] = q.add_arrow("y" + std::to_string(i), i, i + 1);
  }
  auto relation = [&](std::vector<std::size_t> lead, std::vector<std::size_t> other) {
    const Path l = Path::from_arrows(q, std::move(lead));
    AlgebraElement rel = AlgebraElement::monomial(l, field.one());
    rel.add_term(Path::from_arrows(q, std::move(other)), -field.one());
    pres.relations.push_back(std::move(rel));
    pres.leading.push_back(l);
  };
  relation({y[2], x[1], x[0]}, {x[2], x[1], y[0]});
  relation({x[2], y[1], y[0]}, {y[2], y[1], x[0]});
  validate(pres);
  return pres;
}

BoundQuiverPresentation kronecker_presentation(const Field& field) {
  refuse_char2(field, "the Kronecker algebra");
  BoundQuiverPresentation pres;
  pres.field = field;
  pres.quiver.add_vertex("1");
  pres.quiver.add_vertex("2");
  pres.quiver.add_arrow("x", 0, 1);
  pres.quiver.add_arrow("y", 0, 1);
  return pres;
}

BoundQuiverPresentation random_monomial_presentation(std::uint64_t seed, const MonomialLimits& limits,
                                                     const Field& field) {
  std::mt19937_64 rng(seed);
  const std::size_t max_v = std::clamp<std::size_t>(limits.max_vertices, 2, 6);
  BoundQuiverPresentation pres;
  pres.field = field;
  Quiver& q = pres.quiver;
  const std::size_t nv = 2 + rng() % (max_v - 1);
  for (std::size_t v = 0; v < nv; ++v) q.add_vertex("v" + std::to_string(v));
  const std::size_t na = 1 + rng() % std::max<std::size_t>(limits.max_arrows, 1);
  for (std::size_t a = 0; a < na; ++a) {
    const std::size_t s = rng() % (nv - 1);
    const std::size_t t = s + 1 + rng() % (nv - 1 - s);
    q.add_arrow("a" + std::to_string(a), s, t);
  }
  std::vector<Path> candidates;
  for (const Path& p : enumerate_paths(q, std::max<std::size_t>(limits.max_relation_length, 2))) {
    if (p.length() >= 2) candidates.push_back(p);
  }
  const std::size_t nr = std::min(candidates.size(), rng() % (limits.max_relations + 1));
  std::set<std::size_t> chosen;
  while (chosen.size() < nr) chosen.insert(rng() % candidates.size());
  for (std::size_t c : chosen) pres.relations.push_back(AlgebraElement::monomial(candidates[c], field.one()));
  validate(pres);
  return pres;
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"torus-s", "torus-c", "p1p1", "pi", "kronecker"};
  return names;
}

BoundQuiverPresentation family_presentation(const std::string& name, const Field& field,
                                            const std::optional<std::string>& q,
                                            const std::optional<std::string>& psi) {
  const bool torus = name == "torus-s" || name == "torus-c";
  if (!torus && q) throw DomainError("family '" + name + "' takes no q parameter");
  if (name != "p1p1" && psi) throw DomainError("family '" + name + "' takes no Psi parameter");
  if (torus) {
    const Scalar qv = field.parse_scalar(q.value_or("1"));
    return incidence_presentation(name == "torus-s" ? torus_simplicial_complex() : torus_cubical_complex(), qv);
  }
  if (name == "p1p1") return p1p1_presentation(PsiTensor::parse(psi.value_or("0"), field));
  if (name == "pi") return pi_presentation(field);
  if (name == "kronecker") return kronecker_presentation(field);
  throw DomainError("unknown family '" + name + "'");
}

}  // namespace hhcalc
