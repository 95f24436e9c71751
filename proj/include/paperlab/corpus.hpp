#ifndef PAPERLAB_CORPUS_HPP
#define PAPERLAB_CORPUS_HPP

#include <string>
#include <vector>

#include "paperlab/fincat.hpp"
#include "paperlab/sset.hpp"

namespace paperlab {

/// The hexagon pushout data: a zigzag hexagon H (nerve is a hexagonal
/// circle), its cone (H plus a terminal vertex, nerve contractible), the
/// inclusion H -> cone, and the collapse H -> point.  The Cat-pushout of
/// point <- H -> cone is the arrow category (contractible nerve) while the
/// SSet-pushout of the corresponding nerves is a 2-sphere.
struct HexagonDiagram {
  FinCatPtr hexagon;
  FinCatPtr cone;
  FinCatPtr point;
  Functor inclusion;  // hexagon -> cone
  Functor collapse;   // hexagon -> point
};

HexagonDiagram hexagon_diagram();

/// Delta^n with its boundary collapsed to a point (an n-sphere model),
/// together with the collapse projection.
SSetPtr sphere_sset(int n);

/// The commutative-square poset [1] x [1].
FinCatPtr commutative_square();

/// Named built-in simplicial sets: standard simplices delta0..delta4, their
/// boundaries boundary1..boundary4, the collapsed spheres sphere1..sphere3,
/// nerve_chain2 = N[2] and its Segal subdivision ssd_nerve_chain2, and the
/// product delta1_x_delta1.
std::vector<std::string> corpus_sset_names();
SSetPtr corpus_sset(const std::string& name);  // throws Error on unknown names

/// Named built-in finite categories: terminal, discrete2, the chains
/// chain0..chain4, square = [1]x[1], face_poset1..face_poset3, the morphism
/// categories morphism_chain1 / morphism_chain2, and hexagon / hexagon_cone.
/// Seeded random directed categories come from random_directed_category.
std::vector<std::string> corpus_fincat_names();
FinCatPtr corpus_fincat(const std::string& name);

}  // namespace paperlab

#endif
