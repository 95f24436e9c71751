#ifndef PAPERLAB_SSET_HPP
#define PAPERLAB_SSET_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "paperlab/delta.hpp"
#include "paperlab/homology.hpp"

namespace paperlab {

/// A simplicial-set element in Eilenberg-Zilber normal form: a surjective
/// degeneracy applied to a nondegenerate base simplex.  The element lives in
/// dimension surj.src; the base lives in dimension surj.dst and is an index
/// into that dimension's nondegenerate list.
struct Simp {
  MonotoneMap surj;
  int base = 0;

  int dim() const { return surj.src; }
  int base_dim() const { return surj.dst; }
  bool is_nondegenerate() const { return surj.is_identity(); }
  bool operator==(const Simp& o) const { return surj == o.surj && base == o.base; }
  bool operator<(const Simp& o) const {
    if (!(surj == o.surj)) return surj < o.surj;
    return base < o.base;
  }
};

Simp nondeg_simp(int dim, int base);

/// A finite simplicial set in Eilenberg-Zilber normal form: nondegenerate
/// simplices per dimension plus normalized faces.
class SSet {
 public:
  SSet() = default;
  SSet(std::vector<std::vector<std::string>> names,
       std::vector<std::vector<std::vector<Simp>>> faces);

  int dim() const { return static_cast<int>(names_.size()) - 1; }
  int count(int d) const;
  int total_count() const;
  const std::vector<std::string>& names(int d) const { return names_[static_cast<size_t>(d)]; }
  const std::string& name(int d, int i) const { return names_[static_cast<size_t>(d)][static_cast<size_t>(i)]; }
  int index_of(int d, const std::string& name) const;

  /// Face j of the i-th nondegenerate d-simplex (d >= 1).
  const Simp& face(int d, int i, int j) const;

  /// Simplicial operator action: f : [m'] -> [x.dim()], result in dim m'.
  Simp apply(const Simp& x, const MonotoneMap& f) const;

  /// All normalized elements at level n.
  std::vector<Simp> level(int n) const;

  /// The i-th vertex of a normalized simplex (base index into dimension 0).
  int vertex(const Simp& x, int i) const;

  std::vector<int> f_vector() const;
  long long euler_characteristic() const;

  std::string simp_key(const Simp& x) const;
  Simp simp_from_key(int dim, const std::string& key) const;

  /// Checks the normalized simplicial identities on every nondegenerate
  /// simplex; throws on violation.
  void audit() const;

  ChainComplex chain_complex() const;
  HomologyResult homology() const;
  bool is_homology_point() const;

  bool operator==(const SSet& o) const {
    return names_ == o.names_ && faces_ == o.faces_;
  }

 private:
  // names_[d][i]: display names; faces_[d][i][j]: face j of simplex i in dim d
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<std::vector<Simp>>> faces_;

  friend bool operator==(const std::vector<Simp>&, const std::vector<Simp>&);
};

inline bool operator==(const std::vector<Simp>& a, const std::vector<Simp>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

using SSetPtr = std::shared_ptr<const SSet>;

/// A simplicial map, recorded on nondegenerate simplices of the source.
struct SSetMap {
  SSetPtr src;
  SSetPtr dst;
  std::vector<std::vector<Simp>> image;  // per dim of src, per nondeg simplex

  void validate() const;  // commutes with faces after normalization
  Simp apply_to(const Simp& x) const;
  bool is_injective() const;
};

SSetMap identity_sset_map(const SSetPtr& s);
SSetMap compose(const SSetMap& f, const SSetMap& g);  // f after g

/// -------- constructors --------

/// Standard simplicial model of the n-simplex: nondegenerate k-simplices are
/// the injective monotone maps [k] -> [n].
SSet standard_simplex(int n);

/// Simplicial map Delta^m -> Delta^n induced by a monotone map.
SSetMap standard_simplex_map(const MonotoneMap& f);

struct SubcomplexResult {
  SSet ss;
  SSetMap inclusion;                        // subcomplex -> ambient
  std::vector<std::vector<int>> old_index;  // new (d,i) -> ambient index
};

/// Full subcomplex on the flagged nondegenerate simplices; the flag set must
/// be face-closed.
SubcomplexResult subcomplex(const SSetPtr& s, const std::vector<std::vector<bool>>& keep);

/// Boundary of the standard n-simplex together with its inclusion (n >= 1).
SubcomplexResult boundary(int n);

/// k-skeleton.
SubcomplexResult skeleton(const SSetPtr& s, int k);

struct ProductResult {
  SSet ss;
  SSetMap proj1;
  SSetMap proj2;
  /// Normalized pair underlying a nondegenerate product simplex.
  std::vector<std::vector<std::pair<Simp, Simp>>> pairs;
  /// Normal form of an arbitrary level-n pair in the product.
  std::function<Simp(const Simp&, const Simp&)> pair_lookup;
};

ProductResult product(const SSetPtr& s, const SSetPtr& t);

struct PushoutResult {
  SSet ss;
  SSetMap from_target_of_f;  // leg from f's target (the cofibration side)
  SSetMap from_target_of_g;
};

/// Pushout of S <-f- A -g-> T; f must be injective.
PushoutResult pushout(const SSetMap& f, const SSetMap& g);

struct QuotientResult {
  SSet ss;
  SSetMap projection;
};

/// Collapse a face-closed set of nondegenerate simplices to a point.
QuotientResult quotient(const SSetPtr& s, const std::vector<std::vector<bool>>& sub);

/// The terminal map S -> Delta^0.
SSetMap terminal_map(const SSetPtr& s, const SSetPtr& point);

/// -------- generic construction from raw levelwise data --------

struct RawSSet {
  std::function<std::vector<std::string>(int)> level;
  std::function<std::string(int, int, const std::string&)> face;   // d_i at level n
  std::function<std::string(int, int, const std::string&)> degen;  // s_i at level n
  std::function<std::string(int, const std::string&)> display;     // optional
  /// Optional canonicalizer for externally supplied keys (used when raw keys
  /// are equivalence-class representatives).
  std::function<std::string(int, const std::string&)> canon;
};

struct BuiltSSet {
  SSetPtr ss;
  /// Normal form of a raw key at a level.
  std::function<Simp(int, const std::string&)> normalize;
  /// Raw key underlying a nondegenerate simplex.
  std::function<const std::string&(int, int)> raw_of;
};

/// Builds the normal form of a raw simplicial set.  `cap` must exceed the
/// dimension: the toolkit verifies that level `cap` is entirely degenerate.
BuiltSSet build_from_raw(const RawSSet& raw, int cap);

struct RawBiSSet {
  std::function<std::vector<std::string>(int, int)> level;  // (p, q)
  std::function<std::string(int, int, int, const std::string&)> hface;
  std::function<std::string(int, int, int, const std::string&)> vface;
  std::function<std::string(int, int, int, const std::string&)> hdeg;
  std::function<std::string(int, int, int, const std::string&)> vdeg;
};

/// Diagonal of a bisimplicial set, normalized.
BuiltSSet diag(const RawBiSSet& b, int cap);

/// -------- comparisons --------

bool sset_isomorphic(const SSet& a, const SSet& b);

/// Verifies a candidate map is an isomorphism (bijective on nondegenerate
/// simplices in every dimension and face-compatible).
bool is_isomorphism(const SSetMap& m);

}  // namespace paperlab

#endif
