#ifndef PAPERLAB_SUBDIVIDE_HPP
#define PAPERLAB_SUBDIVIDE_HPP

#include <boost/rational.hpp>
#include <map>
#include <string>
#include <vector>

#include "paperlab/realize.hpp"

namespace paperlab {

using Rational = boost::rational<long long>;

/// The poset F_n of nonempty faces of Delta^n, ordered by inclusion.
struct FacePosetResult {
  FinCatPtr cat;
  std::vector<std::vector<int>> subsets;     // object -> sorted subset of {0..n}
  std::map<std::vector<int>, int> index;     // subset -> object
  std::map<std::pair<int, int>, int> arrow;  // (a, b) with a <= b -> morphism
};

FacePosetResult face_poset(int n);

/// F_phi : F_m -> F_n, a face to its image under phi : [m] -> [n].
Functor face_poset_functor(const FacePosetResult& fm, const FacePosetResult& fn,
                           const MonotoneMap& phi);

/// The cosimplicial simplicial set n |-> N(F_n) driving barycentric
/// subdivision.
CosimplicialSSet face_poset_nerves(int trunc);

enum class SubKind { barycentric, edgewise, segal };

/// One subdivision step.  Barycentric subdivision is the coend
/// S_n (x)_Delta N(F_n); the edgewise kinds reindex along the ordinal sum,
/// sub(S)_m = S_{2m+1}.  The operators come from the ordinal-sum functor
/// (phi |-> phi <+> phi, resp. phi |-> r(phi) <+> phi), i.e. in standard
/// operator order (rightmost acts first)
///   edgewise: d_i = d_i d_{i+m+1},      s_i = s_i s_{m+1+i}
///   segal:    d_i = d_{m-i} d_{m+1+i},  s_i = s_{m-i} s_{m+1+i}.
/// Raw keys of the result are source-simplex keys (at level 2m+1 for the
/// edgewise kinds; "n#x#z" coend keys for barycentric).
BuiltSSet subdivide(SubKind kind, const SSetPtr& s, int trunc = -1);

SSetPtr subdivide_iter(SubKind kind, int k, SSetPtr s);

/// The subdivision of a simplicial map (naturality of the subdivision).  For
/// the barycentric kind `trunc` fixes the coend truncation of the rebuilt
/// source and target (default: the larger of the two dimensions); passing the
/// truncation explicitly keeps simplex indices aligned with a separately
/// cached subdivide(kind, s, trunc) build.
SSetMap subdivide_map(SubKind kind, const SSetMap& f, int trunc = -1);

/// Exact barycentric coordinates of every vertex of the k-fold subdivision of
/// Delta^n (edgewise kinds only: a new vertex is the midpoint of the edge it
/// came from).
std::vector<std::vector<Rational>> subdivision_vertex_coordinates(SubKind kind, int k,
                                                                  int n);

struct ProductCheck {
  bool preserved = false;
  std::string witness;
};

/// Builds the canonical comparison sub(SxT) -> sub(S)xsub(T) for the edgewise
/// kinds and decides isomorphism; for barycentric subdivision compares normal
/// forms directly and reports the vertex counts as a witness.
ProductCheck subdivision_product_check(SubKind kind, const SSetPtr& s, const SSetPtr& t);

}  // namespace paperlab

#endif
