#ifndef PAPERLAB_HOMOLOGY_HPP
#define PAPERLAB_HOMOLOGY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "paperlab/errors.hpp"

namespace paperlab {

/// Column-major sparse integer matrix.
struct SparseMatrix {
  long long rows = 0;
  long long cols = 0;
  std::vector<std::vector<std::pair<long long, long long>>> col;  // (row, value)

  SparseMatrix() = default;
  SparseMatrix(long long r, long long c) : rows(r), cols(c), col(static_cast<size_t>(c)) {}
  void add(long long r, long long c, long long v) {
    col[static_cast<size_t>(c)].emplace_back(r, v);
  }
};

/// Rank and elementary divisors of an integer matrix, computed by a sparse
/// unit-pivot elimination phase followed by dense Smith normal form on the
/// residual core.
struct SmithSummary {
  long long rank = 0;
  std::vector<long long> divisors;  // nontrivial elementary divisors (> 1)
};

SmithSummary smith_summary(const SparseMatrix& m);

/// Per-degree Betti number and torsion coefficients.
struct HomologyResult {
  struct Group {
    long long betti = 0;
    std::vector<long long> torsion;
    bool operator==(const Group& o) const {
      return betti == o.betti && torsion == o.torsion;
    }
  };
  std::vector<Group> groups;  // groups[k] = H_k

  /// Degrees above which nothing was computed (for degree-capped runs);
  /// -1 means the full complex was processed.
  int degree_cap = -1;

  const Group& at(size_t k) const;
  bool is_point() const;
  bool operator==(const HomologyResult& o) const;
  bool operator!=(const HomologyResult& o) const { return !(*this == o); }
  std::string str() const;
};

/// A chain complex of free abelian groups: dims[k] = rank of C_k and
/// boundary[k] : C_k -> C_{k-1} for k >= 1 (boundary[0] is ignored).
struct ChainComplex {
  std::vector<long long> dims;
  std::vector<SparseMatrix> boundary;

  void validate() const;  // checks shapes and boundary o boundary = 0
  HomologyResult homology() const;
};

}  // namespace paperlab

#endif
