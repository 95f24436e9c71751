#include "paperlab/homology.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace paperlab {

using BigInt = boost::multiprecision::cpp_int;

namespace {

constexpr long long kOverflowGuard = (1LL << 56);

void check_range(long long v) {
  if (v > kOverflowGuard || v < -kOverflowGuard)
    throw Error("smith_summary: sparse phase entry overflow");
}

// Dense Smith normal form over cpp_int; returns all elementary divisors.
std::vector<BigInt> dense_snf(std::vector<std::vector<BigInt>> a) {
  std::vector<BigInt> divisors;
  size_t nr = a.size();
  size_t nc = nr ? a[0].size() : 0;
  size_t t = 0;
  while (true) {
    // find smallest nonzero entry in the remaining block
    long long pr = -1, pc = -1;
    BigInt best = 0;
    for (size_t i = t; i < nr; ++i)
      for (size_t j = t; j < nc; ++j)
        if (a[i][j] != 0) {
          BigInt m = abs(a[i][j]);
          if (pr < 0 || m < best) {
            best = m;
            pr = static_cast<long long>(i);
            pc = static_cast<long long>(j);
          }
        }
    if (pr < 0) break;
    std::swap(a[t], a[static_cast<size_t>(pr)]);
    for (size_t i = 0; i < nr; ++i) std::swap(a[i][t], a[i][static_cast<size_t>(pc)]);

    bool clean = true;
    // clear column t
    for (size_t i = t + 1; i < nr; ++i) {
      if (a[i][t] == 0) continue;
      BigInt q = a[i][t] / a[t][t];
      for (size_t j = t; j < nc; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    // clear row t
    for (size_t j = t + 1; j < nc; ++j) {
      if (a[t][j] == 0) continue;
      BigInt q = a[t][j] / a[t][t];
      for (size_t i = t; i < nr; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // pivot shrank; retry this block
    // ensure pivot divides the rest of the block
    bool divides = true;
    for (size_t i = t + 1; i < nr && divides; ++i)
      for (size_t j = t + 1; j < nc && divides; ++j)
        if (a[i][j] % a[t][t] != 0) {
          // add row i to row t and retry
          for (size_t jj = t; jj < nc; ++jj) a[t][jj] += a[i][jj];
          divides = false;
        }
    if (!divides) continue;
    divisors.push_back(abs(a[t][t]));
    ++t;
    if (t >= nr || t >= nc) break;
  }
  return divisors;
}

}  // namespace

SmithSummary smith_summary(const SparseMatrix& m) {
  // Active sparse structure: per-column hash of row -> value, plus row -> set
  // of columns touching it.
  size_t nc = static_cast<size_t>(m.cols);
  std::vector<std::unordered_map<long long, long long>> cols(nc);
  std::unordered_map<long long, std::unordered_set<long long>> row_cols;
  for (size_t c = 0; c < nc; ++c) {
    for (auto& [r, v] : m.col[c]) {
      if (v == 0) continue;
      long long nv = cols[c][r] + v;
      if (nv == 0) cols[c].erase(r);
      else cols[c][r] = nv;
    }
    for (auto& [r, v] : cols[c]) row_cols[r].insert(static_cast<long long>(c));
  }

  long long rank = 0;
  std::vector<bool> col_alive(nc, true);
  std::unordered_set<long long> dead_rows;

  // min-heap of (colnnz, col) for unit-pivot selection, lazily revalidated
  using Entry = std::pair<size_t, long long>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  for (size_t c = 0; c < nc; ++c)
    if (!cols[c].empty()) heap.emplace(cols[c].size(), static_cast<long long>(c));

  while (!heap.empty()) {
    auto [sz, c] = heap.top();
    heap.pop();
    size_t cu = static_cast<size_t>(c);
    if (!col_alive[cu] || cols[cu].empty()) continue;
    if (cols[cu].size() != sz) {
      heap.emplace(cols[cu].size(), c);
      continue;
    }
    // pick a unit entry in this column with the sparsest row
    long long pr = -1;
    size_t best_row_nnz = 0;
    for (auto& [r, v] : cols[cu]) {
      if (v == 1 || v == -1) {
        size_t rn = row_cols[r].size();
        if (pr < 0 || rn < best_row_nnz) {
          pr = r;
          best_row_nnz = rn;
        }
      }
    }
    if (pr < 0) continue;  // no unit pivot here; leave for the dense core
    long long pv = cols[cu][pr];
    // eliminate row pr from all other columns using column c
    std::vector<long long> touched(row_cols[pr].begin(), row_cols[pr].end());
    for (long long c2 : touched) {
      if (c2 == c) continue;
      size_t c2u = static_cast<size_t>(c2);
      auto it = cols[c2u].find(pr);
      if (it == cols[c2u].end()) continue;
      long long factor = it->second * pv;  // pv in {1,-1}: a/p = a*p
      for (auto& [r, v] : cols[cu]) {
        if (r == pr) continue;
        long long& slot = cols[c2u][r];
        slot -= factor * v;
        check_range(slot);
        if (slot == 0) {
          cols[c2u].erase(r);
          row_cols[r].erase(c2);
        } else {
          row_cols[r].insert(c2);
        }
      }
      cols[c2u].erase(pr);
      row_cols[pr].erase(c2);
      heap.emplace(cols[c2u].size(), c2);
    }
    // retire pivot row and column
    for (auto& [r, v] : cols[cu]) row_cols[r].erase(c);
    cols[cu].clear();
    col_alive[cu] = false;
    dead_rows.insert(pr);
    row_cols.erase(pr);
    ++rank;
  }

  // Dense core on what is left.
  std::map<long long, size_t> row_index;
  std::vector<size_t> live_cols;
  for (size_t cu = 0; cu < nc; ++cu) {
    if (!col_alive[cu] || cols[cu].empty()) continue;
    live_cols.push_back(cu);
    for (auto& [r, v] : cols[cu])
      if (!row_index.count(r)) {
        size_t k = row_index.size();
        row_index[r] = k;
      }
  }
  SmithSummary out;
  out.rank = rank;
  if (!live_cols.empty()) {
    std::vector<std::vector<BigInt>> dense(row_index.size(),
                                           std::vector<BigInt>(live_cols.size(), 0));
    for (size_t j = 0; j < live_cols.size(); ++j)
      for (auto& [r, v] : cols[live_cols[j]]) dense[row_index[r]][j] = v;
    auto divs = dense_snf(std::move(dense));
    for (auto& d : divs) {
      ++out.rank;
      if (d > 1) {
        if (d > BigInt(std::numeric_limits<long long>::max()))
          throw Error("smith_summary: torsion coefficient too large");
        out.divisors.push_back(d.convert_to<long long>());
      }
    }
  }
  std::sort(out.divisors.begin(), out.divisors.end());
  return out;
}

const HomologyResult::Group& HomologyResult::at(size_t k) const {
  static const Group zero{};
  return k < groups.size() ? groups[k] : zero;
}

bool HomologyResult::is_point() const {
  if (degree_cap >= 0) return false;  // cannot certify vanishing above the cap
  if (!(at(0).betti == 1 && at(0).torsion.empty())) return false;
  for (size_t k = 1; k < groups.size(); ++k)
    if (groups[k].betti != 0 || !groups[k].torsion.empty()) return false;
  return true;
}

bool HomologyResult::operator==(const HomologyResult& o) const {
  size_t n = std::max(groups.size(), o.groups.size());
  for (size_t k = 0; k < n; ++k)
    if (!(at(k) == o.at(k))) return false;
  return true;
}

std::string HomologyResult::str() const {
  std::ostringstream os;
  bool any = false;
  for (size_t k = 0; k < groups.size(); ++k) {
    const auto& g = groups[k];
    if (g.betti == 0 && g.torsion.empty()) continue;
    if (any) os << ", ";
    any = true;
    os << "H" << k << "=";
    bool first = true;
    if (g.betti > 0) {
      if (g.betti == 1) os << "Z";
      else os << "Z^" << g.betti;
      first = false;
    }
    for (long long t : g.torsion) {
      if (!first) os << "+";
      os << "Z/" << t;
      first = false;
    }
  }
  if (!any) os << "0";
  if (degree_cap >= 0) os << " (degrees <= " << degree_cap << ")";
  return os.str();
}

void ChainComplex::validate() const {
  if (boundary.size() != dims.size())
    throw Error("ChainComplex: dims/boundary size mismatch");
  for (size_t k = 1; k < dims.size(); ++k) {
    if (boundary[k].cols != dims[k] || boundary[k].rows != dims[k - 1])
      throw Error("ChainComplex: boundary shape mismatch at degree " +
                  std::to_string(k));
  }
  // boundary o boundary = 0, checked columnwise
  for (size_t k = 2; k < dims.size(); ++k) {
    const auto& d1 = boundary[k];
    const auto& d0 = boundary[k - 1];
    for (auto& column : d1.col) {
      std::unordered_map<long long, long long> acc;
      for (auto& [mid, v] : column)
        for (auto& [r, w] : d0.col[static_cast<size_t>(mid)]) acc[r] += v * w;
      for (auto& [r, v] : acc)
        if (v != 0)
          throw Error("ChainComplex: boundary squared nonzero at degree " +
                      std::to_string(k));
    }
  }
}

HomologyResult ChainComplex::homology() const {
  HomologyResult res;
  size_t top = dims.size();
  std::vector<SmithSummary> s(top + 1);
  for (size_t k = 1; k < top; ++k) s[k] = smith_summary(boundary[k]);
  res.groups.resize(top);
  for (size_t k = 0; k < top; ++k) {
    long long rk = (k >= 1) ? s[k].rank : 0;
    long long rk1 = (k + 1 < top) ? s[k + 1].rank : 0;
    res.groups[k].betti = dims[k] - rk - rk1;
    if (k + 1 < top) res.groups[k].torsion = s[k + 1].divisors;
  }
  return res;
}

}  // namespace paperlab
