#include "paperlab/delta.hpp"

#include <algorithm>
#include <sstream>

namespace paperlab {

MonotoneMap::MonotoneMap(int src_, int dst_, std::vector<int> vals)
    : src(src_), dst(dst_), values(std::move(vals)) {
  if (src < 0 || dst < 0)
    throw Error("MonotoneMap: ordinals must be nonnegative");
  if (values.size() != static_cast<size_t>(src) + 1)
    throw Error("MonotoneMap: value vector has wrong length");
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] > dst)
      throw Error("MonotoneMap: value out of range");
    if (i > 0 && values[i] < values[i - 1])
      throw Error("MonotoneMap: values not weakly increasing");
  }
}

bool MonotoneMap::is_identity() const {
  if (src != dst) return false;
  for (int i = 0; i <= src; ++i)
    if (values[static_cast<size_t>(i)] != i) return false;
  return true;
}

bool MonotoneMap::is_injective() const {
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i] == values[i - 1]) return false;
  return true;
}

bool MonotoneMap::is_surjective() const {
  int next = 0;
  for (int v : values) {
    if (v == next) ++next;
    else if (v > next) return false;
  }
  return next == dst + 1;
}

bool MonotoneMap::operator<(const MonotoneMap& o) const {
  if (src != o.src) return src < o.src;
  if (dst != o.dst) return dst < o.dst;
  return values < o.values;
}

std::string MonotoneMap::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) os << ",";
    os << values[i];
  }
  os << "):[" << src << "]->[" << dst << "]";
  return os.str();
}

MonotoneMap identity_map(int n) {
  std::vector<int> v(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[static_cast<size_t>(i)] = i;
  return MonotoneMap(n, n, std::move(v));
}

MonotoneMap coface(int i, int n) {
  if (n < 1 || i < 0 || i > n) throw Error("coface: bad index");
  std::vector<int> v;
  v.reserve(static_cast<size_t>(n));
  for (int j = 0; j <= n; ++j)
    if (j != i) v.push_back(j);
  return MonotoneMap(n - 1, n, std::move(v));
}

MonotoneMap codegeneracy(int i, int n) {
  if (n < 0 || i < 0 || i > n) throw Error("codegeneracy: bad index");
  std::vector<int> v;
  v.reserve(static_cast<size_t>(n) + 2);
  for (int j = 0; j <= n + 1; ++j) v.push_back(j <= i ? std::min(j, i) : j - 1);
  return MonotoneMap(n + 1, n, std::move(v));
}

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  if (g.dst != f.src)
    throw CompositionMismatch("compose: dst(g)=[" + std::to_string(g.dst) +
                              "] != src(f)=[" + std::to_string(f.src) + "]");
  std::vector<int> v(g.values.size());
  for (size_t i = 0; i < g.values.size(); ++i)
    v[i] = f.values[static_cast<size_t>(g.values[i])];
  return MonotoneMap(g.src, f.dst, std::move(v));
}

EZFactorization ez_factorize(const MonotoneMap& f) {
  // Image values, deduplicated, give the injection; positions give the
  // surjection onto the image ordinal.
  std::vector<int> image;
  for (int v : f.values)
    if (image.empty() || image.back() != v) image.push_back(v);
  int k = static_cast<int>(image.size()) - 1;
  std::vector<int> surj(f.values.size());
  {
    int cur = 0;
    for (size_t i = 0; i < f.values.size(); ++i) {
      while (image[static_cast<size_t>(cur)] != f.values[i]) ++cur;
      surj[i] = cur;
    }
  }
  return EZFactorization{MonotoneMap(f.src, k, std::move(surj)),
                         MonotoneMap(k, f.dst, std::move(image))};
}

MonotoneMap ordinal_sum(const MonotoneMap& f, const MonotoneMap& g) {
  std::vector<int> v;
  v.reserve(f.values.size() + g.values.size());
  for (int x : f.values) v.push_back(x);
  for (int x : g.values) v.push_back(x + f.dst + 1);
  return MonotoneMap(f.src + g.src + 1, f.dst + g.dst + 1, std::move(v));
}

MonotoneMap reverse(const MonotoneMap& f) {
  std::vector<int> v(f.values.size());
  for (int i = 0; i <= f.src; ++i)
    v[static_cast<size_t>(i)] = f.dst - f.values[static_cast<size_t>(f.src - i)];
  return MonotoneMap(f.src, f.dst, std::move(v));
}

std::vector<MonotoneMap> all_monotone(int a, int b) {
  std::vector<MonotoneMap> out;
  std::vector<int> cur(static_cast<size_t>(a) + 1);
  // iterate over weakly increasing tuples
  auto rec = [&](auto&& self, int pos, int last) -> void {
    if (pos == a + 1) {
      out.emplace_back(a, b, cur);
      return;
    }
    for (int v = last; v <= b; ++v) {
      cur[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<MonotoneMap> all_injective(int a, int b) {
  std::vector<MonotoneMap> out;
  for (auto& f : all_monotone(a, b))
    if (f.is_injective()) out.push_back(f);
  return out;
}

std::vector<MonotoneMap> all_surjective(int a, int b) {
  std::vector<MonotoneMap> out;
  for (auto& f : all_monotone(a, b))
    if (f.is_surjective()) out.push_back(f);
  return out;
}

std::vector<int> missing_values(const MonotoneMap& inj) {
  if (!inj.is_injective()) throw Error("missing_values: map not injective");
  std::vector<int> miss;
  size_t p = 0;
  for (int v = 0; v <= inj.dst; ++v) {
    if (p < inj.values.size() && inj.values[p] == v) ++p;
    else miss.push_back(v);
  }
  std::reverse(miss.begin(), miss.end());
  return miss;
}

}  // namespace paperlab
