#ifndef PAPERLAB_DELTA_HPP
#define PAPERLAB_DELTA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "paperlab/errors.hpp"

namespace paperlab {

/// An arrow of the simplex category: an order-preserving map [n] -> [m],
/// stored as its value vector.  Objects [n] are 0-indexed with n >= 0.
struct MonotoneMap {
  int src = 0;                  // the object [src]
  int dst = 0;                  // the object [dst]
  std::vector<int> values;      // length src+1, weakly increasing, in [0,dst]

  MonotoneMap() = default;
  MonotoneMap(int src_, int dst_, std::vector<int> vals);

  int operator()(int i) const { return values[static_cast<size_t>(i)]; }

  bool is_identity() const;
  bool is_injective() const;
  bool is_surjective() const;

  bool operator==(const MonotoneMap& o) const {
    return src == o.src && dst == o.dst && values == o.values;
  }
  bool operator<(const MonotoneMap& o) const;

  std::string str() const;
};

MonotoneMap identity_map(int n);

/// Coface d^i : [n-1] -> [n], the injection missing i.
MonotoneMap coface(int i, int n);

/// Codegeneracy s^i : [n+1] -> [n], hitting i twice.
MonotoneMap codegeneracy(int i, int n);

/// Pointwise composite f o g (g first).  Requires dst(g) == src(f).
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);

/// The unique epi-mono factorization f = injection o surjection.
struct EZFactorization {
  MonotoneMap surjection;
  MonotoneMap injection;
};

EZFactorization ez_factorize(const MonotoneMap& f);

/// Ordinal sum: [src(f)+src(g)+1] -> [dst(f)+dst(g)+1], f on the first
/// block, g shifted by dst(f)+1 on the second.
MonotoneMap ordinal_sum(const MonotoneMap& f, const MonotoneMap& g);

/// Order reversal r(f)(i) = dst - f(src - i).
MonotoneMap reverse(const MonotoneMap& f);

/// All monotone maps [a] -> [b], in lexicographic order.
std::vector<MonotoneMap> all_monotone(int a, int b);
std::vector<MonotoneMap> all_injective(int a, int b);
std::vector<MonotoneMap> all_surjective(int a, int b);

/// Decompose an injection [j] -> [k] as cofaces: f = d^{i_1} o ... o d^{i_r}
/// with i_1 > ... listed in the order the faces are applied to a simplex
/// (outermost first).  Returns the list of missing values in decreasing order.
std::vector<int> missing_values(const MonotoneMap& inj);

}  // namespace paperlab

#endif
