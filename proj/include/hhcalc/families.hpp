#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hhcalc/presentation.hpp"
#include "hhcalc/sl2.hpp"

namespace hhcalc {

/// A 2-dimensional cell complex. Face k walks its boundary as
/// walk[0] -e[0]-> walk[1] -e[1]-> ... -e[n-1]-> walk[0]; the walk order is
/// the face's orientation (counterclockwise in the drawing).
struct CellComplexData {
  struct Edge {
    std::string name;
    std::size_t u;
    std::size_t w;
  };
  struct Face {
    std::string name;
    std::vector<std::size_t> walk;   // vertices
    std::vector<std::size_t> edges;  // edges[k] joins walk[k] and walk[k+1]
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;
};

struct CellValidation {
  bool closed_walks = false;
  bool edges_in_two_faces = false;
  bool coherent = false;  // every edge is traversed once in each direction
  long long euler = 0;

  bool ok() const { return closed_walks && edges_in_two_faces && coherent; }
};

CellValidation validate_cells(const CellComplexData& cells);
/// Reverses every face walk.
CellComplexData reverse_orientation(const CellComplexData& cells);

/// 7 vertices, 21 edges, 14 triangles, oriented as drawn.
CellComplexData torus_simplicial_complex();
/// 2×2 grid of squares with opposite sides glued: 4 vertices, 8 edges, 4 faces.
CellComplexData torus_cubical_complex();

/// Incidence algebra of the face poset, deformed by q. For each face and
/// walk position k there is one relation (in face order, then walk order):
///   β(e_k, F) α(v_k, e_k) - q β(e_{k-1}, F) α(v_k, e_{k-1})
/// with the first path designated as leading. Throws DomainError for q = 0
/// and ValidationError for invalid cells.
BoundQuiverPresentation incidence_presentation(const CellComplexData& cells, const Scalar& q);

/// Angle labels, labels[face][k] for the angle at walk[k], in Z/n for n-gon
/// faces: labels drop by one along each walk, and crossing an edge u→w of F
/// into the face F' containing w→u gives label_F'(u) = label_F(u) - 1.
/// Built by propagation from label 0 at faces[0].walk[0]; throws
/// ConsistencyError if propagation is contradictory.
std::vector<std::vector<std::size_t>> angle_labelling(const CellComplexData& cells);

struct AngleFunctionalResult {
  bool annihilates = false;
  std::size_t generators = 0;  // columns of d^1 tested
  std::size_t nonzero = 0;     // columns where the functional is nonzero
};

/// The functional sending the leading-term pair at angle (v, F) to q^label
/// applied to every column of the small complex d^1 of I_q(T²_s). Throws
/// DomainError unless q³ = 1.
AngleFunctionalResult angle_functional(const Scalar& q);
bool angle_functional_check(const Scalar& q);

/// (Λ⊗Λ)_Ψ. Throws DomainError in characteristic 2.
BoundQuiverPresentation p1p1_presentation(const PsiTensor& psi);
BoundQuiverPresentation pi_presentation(const Field& field);
BoundQuiverPresentation kronecker_presentation(const Field& field);

struct MonomialLimits {
  std::size_t max_vertices = 5;  // at most 6
  std::size_t max_arrows = 7;
  std::size_t max_relations = 3;
  std::size_t max_relation_length = 3;
};

/// Acyclic quiver (arrows go from lower to higher vertex index) with
/// single-path relations, determined by the seed.
BoundQuiverPresentation random_monomial_presentation(std::uint64_t seed,
                                                     const MonomialLimits& limits = {},
                                                     const Field& field = Field::rationals());

/// torus-s, torus-c, p1p1, pi, kronecker.
const std::vector<std::string>& family_names();

/// `q` defaults to 1 and `psi` to 0; a parameter the family does not use is
/// an error. Throws DomainError for unknown names.
BoundQuiverPresentation family_presentation(const std::string& name, const Field& field,
                                            const std::optional<std::string>& q,
                                            const std::optional<std::string>& psi);

}  // namespace hhcalc
