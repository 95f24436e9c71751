#ifndef PAPERLAB_REALIZE_HPP
#define PAPERLAB_REALIZE_HPP

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "paperlab/fincat.hpp"
#include "paperlab/sset.hpp"

namespace paperlab {

/// A truncated cosimplicial simplicial set: a simplicial set B^n per level
/// n <= trunc and a simplicial map B^phi for every monotone map within the
/// truncation, covariantly.
struct CosimplicialSSet {
  int trunc = 0;
  std::vector<SSetPtr> level;
  std::function<SSetMap(const MonotoneMap&)> map;
};

/// The cosimplicial standard simplex n |-> Delta^n (the density family).
CosimplicialSSet cosimplicial_standard(int trunc);

/// Coend S_n (x)_{n in Delta<=trunc} B^n of the underlying simplicial set of
/// `s` against a cosimplicial simplicial set.  The truncation must be at
/// least dim(s); since s is dim(s)-skeletal the truncated coend then agrees
/// with the coend over all of Delta.
/// Raw keys have the form "n#<s-simplex key>#<B^n-simplex key>".
BuiltSSet coend_sset(const SSetPtr& s, const CosimplicialSSet& b);

/// Transport a simplicial map through the coend: the induced map
/// coend(f.src, b) -> coend(f.dst, b) on the already-built coends.
SSetMap coend_sset_map(const SSetMap& f, const BuiltSSet& src, const BuiltSSet& dst);

/// -------- truncated (co)simplicial categories --------

/// A truncated cosimplicial category: a category D(n) per level n <= trunc
/// and a functor D(phi) : D(m) -> D(n) for every monotone map phi : [m] -> [n]
/// within the truncation, covariantly and strictly functorially.
struct CosimplicialCat {
  int trunc = 0;
  std::vector<FinCatPtr> level;
  std::function<Functor(const MonotoneMap&)> map;

  /// Checks identities and functoriality on all composable coface /
  /// codegeneracy generator pairs within the truncation; throws on violation.
  void audit() const;
};

/// A truncated simplicial category: C_n per level and a functor
/// C(phi) : C_n -> C_m for every phi : [m] -> [n], contravariantly.  Levels
/// above the truncation are understood to be entirely degenerate.
struct SimplicialCat {
  int trunc = 0;
  std::vector<FinCatPtr> level;
  std::function<Functor(const MonotoneMap&)> map;

  void audit() const;
};

/// A simplicial set regarded as a levelwise-discrete simplicial category:
/// level n is the discrete category on all n-simplices (degenerate ones
/// included), operators act by SSet::apply.
SimplicialCat discrete_simplicial_cat(const SSetPtr& s, int trunc = -1);

/// The constant simplicial category on c.
SimplicialCat constant_simplicial_cat(const FinCatPtr& c, int trunc);

/// diag(N^{Delta-op} C_*): the diagonal of the levelwise nerve.
SSetPtr diag_nerve(const SimplicialCat& c);

/// The realization functors of Def 2.2 as truncated cosimplicial categories:
///   D0      : constant at the trivial category
///   D1      : n |-> the poset [n]
///   D2      : n |-> cat(sd^2(Delta^n))      (double barycentric)
///   D3, k   : n |-> cat(ssd^k(Delta^n))     (Segal edgewise)
///   D4, k   : n |-> cat(esd^k(Delta^n))     (plain edgewise)
CosimplicialCat realization_functor(const std::string& tag, int k, int trunc,
                                    int bound = 64);

/// The coend C_* (x)_{Delta<=trunc} D(*) in Cat, via presentation merge and
/// congruence closure.  obj/mor locate the image of a level-n pair.
struct CoendCat {
  FinCatPtr cat;
  std::function<int(int, int, int)> obj;  // (level, C_n-object, D(n)-object)
  std::function<int(int, int, int)> mor;  // (level, C_n-morphism, D(n)-morphism)
};

CoendCat coend_cat(const SimplicialCat& c, const CosimplicialCat& d, int bound = 64);

/// -------- diagrams of categories and the two-sided construction --------

/// A functor K -> Cat (or K-op -> Cat when contravariant), stored objectwise.
struct CatDiagram {
  FinCatPtr index;
  bool contravariant = false;
  std::vector<FinCatPtr> at;  // per object of index
  /// per morphism m of index: at[src(m)] -> at[dst(m)], or
  /// at[dst(m)] -> at[src(m)] when contravariant.
  std::vector<Functor> on;

  void validate() const;  // strict functoriality on all composable pairs
};

CatDiagram constant_diagram(const FinCatPtr& index, const FinCatPtr& value,
                            bool contravariant);
/// The constant diagram at the trivial category.
CatDiagram terminal_diagram(const FinCatPtr& index, bool contravariant);
/// K(-, k): the contravariant diagram of hom-sets into k, as discrete
/// categories, acting by precomposition.
CatDiagram hom_into_diagram(const FinCatPtr& k, int obj);

/// A natural transformation between diagrams with the same index and
/// variance, stored componentwise.
bool diagram_natural(const CatDiagram& f, const CatDiagram& g,
                     const std::vector<Functor>& component);

/// The two-sided construction C(F,K,G) of a contravariant F and a covariant G
/// over the same index K: objects are triples (x,k,y); a morphism
/// (x0,k0,y0) -> (x1,k1,y1) is (f, alpha, g) with alpha : k0 -> k1,
/// f : x0 -> F(alpha)(x1) and g : G(alpha)(y0) -> y1; composition is
/// (f2,a2,g2) o (f1,a1,g1) = (F(a1)(f2) o f1, a2 o a1, g2 o G(a2)(g1)).
struct TwoSidedCat {
  FinCatPtr cat;
  std::vector<std::array<int, 3>> objs;  // object -> (x, k, y)
  std::vector<std::array<int, 3>> mors;  // morphism -> (f, alpha, g)
  std::map<std::array<int, 3>, int> obj_index;
  /// (f, alpha, g, source object, target object) -> morphism.  The endpoints
  /// are part of the key because F(alpha) / G(alpha) need not be injective,
  /// so a bare triple does not determine its endpoints.
  std::map<std::array<int, 5>, int> mor_index;
};

TwoSidedCat two_sided(const CatDiagram& f, const CatDiagram& g);

/// The functor C(F,K,G) -> C(F',K,G') induced by natural transformations
/// eta : F => F' and gamma : G => G' (componentwise functors).
Functor two_sided_map(const TwoSidedCat& s, const TwoSidedCat& t,
                      const std::vector<Functor>& eta,
                      const std::vector<Functor>& gamma);

/// -------- the counit of 6.2(6) --------

struct CounitResult {
  TwoSidedCat source;    // C(K(-,k), K, G)
  Functor eps;           // (beta, k0, y) |-> G(beta)(y), into G(k)
  Functor section;       // y |-> (id_k, k, y)
  std::vector<int> tau;  // per source object: the morphism (id, beta, id)
  bool section_law = false;   // eps o section == id
  bool tau_natural = false;   // tau : Id => section o eps componentwise
  bool homology_match = false;
};

CounitResult counit(const CatDiagram& g, int k);

/// -------- bifunctors and the coend compatibility of 6.2(4) --------

/// A bifunctor rows x cols-op -> Cat, stored objectwise with a joint action.
struct CatBiDiagram {
  FinCatPtr rows;  // covariant index
  FinCatPtr cols;  // contravariant index
  std::vector<std::vector<FinCatPtr>> at;  // [row object][col object]
  /// (row morphism rm, col morphism cm) |-> Functor
  /// at[src(rm)][dst(cm)] -> at[dst(rm)][src(cm)].
  std::function<Functor(int, int)> on;

  CatDiagram row_fixed(int row) const;  // contravariant diagram over cols
  CatDiagram col_fixed(int col) const;  // covariant diagram over rows
  void validate() const;
};

CatBiDiagram constant_bidiagram(const FinCatPtr& rows, const FinCatPtr& cols,
                                const FinCatPtr& value);

/// The coend U (x)_A W of a contravariant U and covariant W over A, as a
/// quotient of the disjoint union of the products U(a) x W(a).
struct CatCoendResult {
  FinCatPtr cat;
  std::vector<CatProduct> blocks;  // per index object, U(a) x W(a)
  std::vector<Functor> legs;       // per index object, from blocks[a].cat
  std::function<int(int, int, int)> obj;  // (a, U(a)-object, W(a)-object)
  std::function<int(int, int, int)> mor;
  /// The functor out of the coend induced by a cocone of functors
  /// blocks[a].cat -> target (one per index object, span-compatible).
  std::function<Functor(const std::vector<Functor>&)> induce;
};

CatCoendResult cat_coend(const CatDiagram& u, const CatDiagram& w, int bound = 64);

/// Checks U (x)_A C(F,K,G) (x)_B V  ~=  C(U (x)_A F, K, G (x)_B V) by
/// constructing both sides; F : A x K-op -> Cat (rows A, cols K),
/// G : K x B-op -> Cat (rows K, cols B), U : A-op -> Cat, V : B -> Cat.
struct CompatReport {
  bool match = false;
  std::string left, right;  // object/morphism count witnesses
};

CompatReport coend_compat_check(const CatDiagram& u, const CatBiDiagram& f,
                                const CatBiDiagram& g, const CatDiagram& v,
                                int bound = 64);

/// -------- Heggie invariance (Prop 6.1) --------

struct HeggieReport {
  bool match = false;
  std::string left, right;  // homology tables
};

/// Verifies that every beta(k) and gamma(k) is a nerve-homology equivalence
/// (throws NotLevelwiseEquivalence otherwise), then compares the homology of
/// the nerves of C(F,K,G) and C(F',K,G').
HeggieReport heggie_invariance_check(const CatDiagram& f, const CatDiagram& g,
                                     const CatDiagram& fp, const CatDiagram& gp,
                                     const std::vector<Functor>& beta,
                                     const std::vector<Functor>& gamma);

/// -------- goodness and the resolved demo --------

struct CheckReport {
  std::string check;
  std::string inputs;
  std::string left, right;  // homology tables
  bool match = false;
  std::string witness;
};

/// Compares homology(nerve(F_D(C_*))) against homology(diag N^{Delta-op} C_*)
/// (the desk-scale goodness proxy of Def 2.3).  Falls back to degree-capped
/// category homology when the realized category is not directed.
CheckReport goodness_check(const CosimplicialCat& d, const SimplicialCat& c,
                           int bound = 64);

/// The simplex category Delta<=trunc materialized as a finite category.
struct SimplexCategory {
  FinCatPtr cat;
  int trunc = 0;
  std::vector<MonotoneMap> mor_of;  // morphism -> monotone map
  std::map<MonotoneMap, int> index;
  int index_of(const MonotoneMap& f) const;
};

SimplexCategory simplex_category(int trunc);

/// A truncated simplicial category as a contravariant diagram over
/// Delta<=trunc (for the two-sided construction).
CatDiagram diagram_of_simplicial(const SimplicialCat& c, const SimplexCategory& k);
CatDiagram diagram_of_cosimplicial(const CosimplicialCat& d, const SimplexCategory& k);

/// Truncated Prop 6.3 demo: following the proof chain
/// F_{C(Delta,Delta,D)}(C_*) = C(C_*,Delta,D) ~ C(C_*,Delta,*) = C_* int Delta,
/// builds the two-sided category C(C_*, Delta<=truncN, *) extensionally and
/// compares its degree-capped homology with homology(diag N^{Delta-op} C_*).
/// The report names the truncation and the degree cap explicitly.
CheckReport resolved_realization_demo(const SimplicialCat& c, int truncN,
                                      int degree_cap);

}  // namespace paperlab

#endif
