#ifndef PAPERLAB_FINCAT_HPP
#define PAPERLAB_FINCAT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "paperlab/sset.hpp"

namespace paperlab {

/// A finite category stored extensionally: objects, morphisms with
/// source/target, an identity per object, and a total composition table on
/// composable pairs.
class FinCat {
 public:
  FinCat() = default;
  FinCat(std::vector<std::string> obj_names, std::vector<std::string> mor_names,
         std::vector<int> src, std::vector<int> dst, std::vector<int> identity,
         std::vector<std::vector<int>> table);

  int num_objects() const { return static_cast<int>(obj_names_.size()); }
  int num_morphisms() const { return static_cast<int>(mor_names_.size()); }
  int num_nonidentity() const { return num_morphisms() - num_objects(); }

  const std::string& obj_name(int x) const { return obj_names_[static_cast<size_t>(x)]; }
  const std::string& mor_name(int m) const { return mor_names_[static_cast<size_t>(m)]; }
  int obj_index(const std::string& name) const;
  int mor_index(const std::string& name) const;

  int src(int m) const { return src_[static_cast<size_t>(m)]; }
  int dst(int m) const { return dst_[static_cast<size_t>(m)]; }
  int identity(int x) const { return id_[static_cast<size_t>(x)]; }
  bool is_identity(int m) const;

  /// g o f (f applied first).  Requires dst(f) == src(g).
  int compose(int g, int f) const;

  std::vector<int> hom(int a, int b) const;
  std::vector<int> nonidentity() const;

  /// Exhaustive law check: identities, typing of composites, associativity on
  /// all composable triples.  Throws on violation.
  void audit() const;

  bool operator==(const FinCat& o) const {
    return obj_names_ == o.obj_names_ && mor_names_ == o.mor_names_ &&
           src_ == o.src_ && dst_ == o.dst_ && id_ == o.id_ && table_ == o.table_;
  }

 private:
  std::vector<std::string> obj_names_;
  std::vector<std::string> mor_names_;
  std::vector<int> src_, dst_;
  std::vector<int> id_;                   // per object
  std::vector<std::vector<int>> table_;   // table_[g][f] = g o f, -1 if not composable
};

using FinCatPtr = std::shared_ptr<const FinCat>;

/// A functor between finite categories, stored as object and morphism maps.
struct Functor {
  FinCatPtr src;
  FinCatPtr dst;
  std::vector<int> obj_map;
  std::vector<int> mor_map;

  int on_obj(int x) const { return obj_map[static_cast<size_t>(x)]; }
  int on_mor(int m) const { return mor_map[static_cast<size_t>(m)]; }

  /// Checks typing, identity and composite preservation; throws on violation.
  void validate() const;
};

Functor identity_functor(const FinCatPtr& c);
Functor compose(const Functor& f, const Functor& g);  // f after g
Functor constant_functor(const FinCatPtr& src, const FinCatPtr& dst, int obj);

/// -------- basic categories --------

FinCat terminal_category();
FinCat discrete_category(int k);
/// The poset [n] = 0 -> 1 -> ... -> n.
FinCat chain_category(int n);
/// Functor [m] -> [n] induced by a monotone map.
Functor chain_functor(const MonotoneMap& f);

/// -------- limits / colimits / constructions --------

struct CatProduct {
  FinCatPtr cat;
  Functor proj1, proj2;
  std::function<int(int, int)> pair_obj;  // (a-object, b-object) -> object
  std::function<int(int, int)> pair_mor;  // (a-morphism, b-morphism) -> morphism
};

CatProduct cat_product(const FinCatPtr& a, const FinCatPtr& b);

struct CatCoproduct {
  FinCatPtr cat;
  Functor inj1, inj2;
};

CatCoproduct cat_coproduct(const FinCatPtr& a, const FinCatPtr& b);

FinCat opposite(const FinCat& c);

/// The category whose objects are the morphisms of C and whose morphisms
/// (u, v) : f -> g are commutative squares g o u = v o f.
FinCat morphism_category(const FinCat& c);

/// The unique object receiving exactly one morphism from every object, if any.
std::optional<int> terminal_object(const FinCat& c);

bool fincat_isomorphic(const FinCat& a, const FinCat& b);

/// -------- directedness and the nerve --------

/// Either a linear order on objects strictly increased by every non-identity
/// morphism, or a witness cycle of objects.
struct DirectednessCertificate {
  bool directed = false;
  std::vector<int> order;  // objects, increasing, when directed
  std::vector<int> cycle;  // object cycle witness otherwise
};

DirectednessCertificate directedness(const FinCat& c);

struct NerveResult {
  SSetPtr ss;
  /// chains[d][i]: the composable non-identity morphisms of the i-th
  /// nondegenerate d-simplex, in diagrammatic order.
  std::vector<std::vector<std::vector<int>>> chains;

  int chain_index(int d, const std::vector<int>& chain) const;

 private:
  friend NerveResult nerve(const FinCatPtr& c);
  std::vector<std::map<std::vector<int>, int>> index_;
};

/// Nerve of a directed finite category; throws InfiniteNerve otherwise.
NerveResult nerve(const FinCatPtr& c);

/// The simplicial map N(F) : N(src) -> N(dst) induced by a functor.
SSetMap nerve_map(const Functor& f, const NerveResult& nsrc, const NerveResult& ndst);

/// -------- presentations and congruence closure --------

/// A directed graph with path relations; the input format for quotients of
/// free categories.
struct CatPresentation {
  struct Edge {
    std::string name;
    int src = 0, dst = 0;
  };
  /// A composable edge path; `start` names the vertex of an empty (identity)
  /// path and must equal the first edge's source otherwise.
  struct Path {
    int start = 0;
    std::vector<int> edges;
  };

  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<std::pair<Path, Path>> relations;   // parallel paths to identify
  std::vector<std::pair<int, int>> vertex_glue;   // vertices to identify
};

struct RealizedPresentation {
  FinCatPtr cat;
  std::vector<int> vertex_obj;  // presentation vertex -> object
  std::vector<int> edge_mor;    // generator edge -> morphism
  std::vector<std::vector<int>> mor_word;  // canonical edge word per morphism
  std::function<int(const CatPresentation::Path&)> eval;
};

/// Quotient of the free category on the graph by the congruence generated by
/// the relations, via shortlex Knuth-Bendix completion over typed edge words.
/// Throws ClosureBoundExceeded if completion does not stabilize with all
/// canonical forms shorter than `bound`.
RealizedPresentation realize_presentation(const CatPresentation& p, int bound = 64);

/// Colimit of finite categories: the quotient of the disjoint union of the
/// blocks by the congruence generated by span identifications.
struct CatSpan {
  Functor left, right;  // shared source; targets are blocks
  int left_block = 0, right_block = 0;
};

struct CatColimit {
  FinCatPtr cat;
  std::vector<Functor> legs;  // one per block
  /// Per colimit object, some (block, block object) mapping onto it.
  std::vector<std::pair<int, int>> obj_rep;
  /// Per colimit morphism, a word of (block, block morphism) pairs whose leg
  /// images compose (in diagrammatic order) to it; empty for identities.
  std::vector<std::vector<std::pair<int, int>>> factors;
};

CatColimit cat_colimit(const std::vector<FinCatPtr>& blocks,
                       const std::vector<CatSpan>& spans, int bound = 64);

/// The functor out of a colimit induced by a cocone (one functor per block,
/// all into the same target, compatible with the span identifications).
Functor induce_functor(const CatColimit& col, const std::vector<Functor>& cocone);

/// Pushout of dst(f) <-f- A -g-> dst(g); legs[0] is from dst(f).
CatColimit cat_pushout(const Functor& f, const Functor& g, int bound = 64);

/// -------- categorification --------

struct Categorified {
  FinCatPtr cat;
  std::vector<int> vertex_obj;  // S_0 index -> object
  std::vector<int> edge_mor;    // nondegenerate S_1 index -> morphism
  std::vector<std::vector<int>> mor_word;  // canonical edge word per morphism
  std::function<int(const CatPresentation::Path&)> eval;
};

/// The functor cat(f) : cat(S) -> cat(T) induced by a simplicial map.
Functor categorify_map(const Categorified& cs, const Categorified& ct, const SSetMap& f);

/// Left adjoint to the nerve: the free category on the 1-skeleton graph with
/// one relation (d0 y)(d2 y) = d1 y per nondegenerate 2-simplex y.
Categorified categorify(const SSet& s, int bound = 64);

/// -------- homology of the nerve with a degree cap --------

/// Normalized chain homology of a finite category in degrees <= cap, using
/// chains of composable non-identity morphisms.  Works even when the nerve is
/// infinite (the chain groups are finite in each fixed degree).
HomologyResult cat_homology_capped(const FinCat& c, int cap);

/// -------- corpus helpers --------

/// The free category on a seeded random DAG with <= max_objects objects;
/// always directed.
FinCat random_directed_category(std::uint64_t seed, int max_objects = 6);

}  // namespace paperlab

#endif
