#include <memory>
#include <sstream>
#include <unordered_map>

#include "paperlab/realize.hpp"

namespace paperlab {

CosimplicialSSet cosimplicial_standard(int trunc) {
  CosimplicialSSet b;
  b.trunc = trunc;
  for (int n = 0; n <= trunc; ++n)
    b.level.push_back(std::make_shared<const SSet>(standard_simplex(n)));
  auto levels = b.level;
  b.map = [levels](const MonotoneMap& f) {
    SSetMap m = standard_simplex_map(f);
    // reuse the cached endpoints so pointer identities line up
    m.src = levels[static_cast<size_t>(f.src)];
    m.dst = levels[static_cast<size_t>(f.dst)];
    return m;
  };
  return b;
}

namespace {

/// String-keyed union-find for one simplex level of the coend.
struct Classes {
  std::unordered_map<std::string, std::string> parent;

  const std::string& find(const std::string& k) {
    auto it = parent.find(k);
    if (it == parent.end()) {
      parent.emplace(k, k);
      it = parent.find(k);
    }
    if (it->second == k) return it->first;
    std::string root = find(it->second);
    it->second = root;
    return parent.find(root)->first;
  }

  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra != rb) parent[ra] = rb;
  }
};

struct CoendState {
  SSetPtr s;
  CosimplicialSSet b;
  std::vector<Classes> classes;  // per simplex level k

  std::string key(int n, const Simp& x, const Simp& z) const {
    return std::to_string(n) + "#" + s->simp_key(x) + "#" +
           b.level[static_cast<size_t>(n)]->simp_key(z);
  }

  /// Parses "n#xkey#zkey" at simplex level k.
  std::tuple<int, Simp, Simp> parse(int k, const std::string& rep) const {
    auto h1 = rep.find('#');
    auto h2 = rep.find('#', h1 + 1);
    int n = std::stoi(rep.substr(0, h1));
    Simp x = s->simp_from_key(n, rep.substr(h1 + 1, h2 - h1 - 1));
    Simp z = b.level[static_cast<size_t>(n)]->simp_from_key(k, rep.substr(h2 + 1));
    return {n, x, z};
  }
};

}  // namespace

BuiltSSet coend_sset(const SSetPtr& s, const CosimplicialSSet& b) {
  const int N = b.trunc;
  if (N < s->dim())
    throw TruncationTooSmall("coend_sset: truncation " + std::to_string(N) +
                             " is below dim " + std::to_string(s->dim()));
  int K = 0;
  for (int n = 0; n <= N; ++n) K = std::max(K, b.level[static_cast<size_t>(n)]->dim());

  auto st = std::make_shared<CoendState>();
  st->s = s;
  st->b = b;
  st->classes.resize(static_cast<size_t>(K) + 2);

  // congruence generated by cofaces and codegeneracies within the truncation:
  // for phi : [m] -> [n], x in S_n, z in (B^m)_k:
  //   (m, S(phi) x, z)  ~  (n, x, B(phi) z)
  auto relate = [&](const MonotoneMap& phi) {
    SSetMap bphi = b.map(phi);
    const SSet& bm = *b.level[static_cast<size_t>(phi.src)];
    for (const auto& x : s->level(phi.dst)) {
      Simp xphi = s->apply(x, phi);
      for (int k = 0; k <= K + 1; ++k) {
        for (const auto& z : bm.level(k))
          st->classes[static_cast<size_t>(k)].unite(
              st->key(phi.src, xphi, z), st->key(phi.dst, x, bphi.apply_to(z)));
      }
    }
  };
  for (int m = 0; m + 1 <= N; ++m) {
    for (int i = 0; i <= m + 1; ++i) relate(coface(i, m + 1));
    for (int i = 0; i <= m; ++i) relate(codegeneracy(i, m));
  }

  RawSSet raw;
  raw.level = [st, N](int k) {
    std::vector<std::string> out;
    for (int n = 0; n <= N; ++n)
      for (const auto& x : st->s->level(n))
        for (const auto& z : st->b.level[static_cast<size_t>(n)]->level(k)) {
          std::string kk = st->key(n, x, z);
          if (st->classes[static_cast<size_t>(k)].find(kk) == kk) out.push_back(kk);
        }
    return out;
  };
  raw.face = [st](int k, int i, const std::string& rep) {
    auto [n, x, z] = st->parse(k, rep);
    Simp zf = st->b.level[static_cast<size_t>(n)]->apply(z, coface(i, k));
    return st->classes[static_cast<size_t>(k - 1)].find(st->key(n, x, zf));
  };
  raw.degen = [st](int k, int i, const std::string& rep) {
    auto [n, x, z] = st->parse(k, rep);
    Simp zd = st->b.level[static_cast<size_t>(n)]->apply(z, codegeneracy(i, k));
    return st->classes[static_cast<size_t>(k + 1)].find(st->key(n, x, zd));
  };
  raw.canon = [st](int k, const std::string& key) {
    return st->classes[static_cast<size_t>(k)].find(key);
  };
  raw.display = [st](int k, const std::string& rep) {
    auto [n, x, z] = st->parse(k, rep);
    (void)k;
    return std::to_string(n) + ":" + st->s->simp_key(x) + "*" +
           st->b.level[static_cast<size_t>(n)]->simp_key(z);
  };
  return build_from_raw(raw, K + 1);
}

SSetMap coend_sset_map(const SSetMap& f, const BuiltSSet& src, const BuiltSSet& dst) {
  SSetMap out{src.ss, dst.ss, {}};
  out.image.resize(static_cast<size_t>(src.ss->dim()) + 1);
  for (int d = 0; d <= src.ss->dim(); ++d) {
    for (int i = 0; i < src.ss->count(d); ++i) {
      const std::string& rep = src.raw_of(d, i);
      auto h1 = rep.find('#');
      auto h2 = rep.find('#', h1 + 1);
      int n = std::stoi(rep.substr(0, h1));
      Simp x = f.src->simp_from_key(n, rep.substr(h1 + 1, h2 - h1 - 1));
      std::string mapped = rep.substr(0, h1) + "#" + f.dst->simp_key(f.apply_to(x)) +
                           "#" + rep.substr(h2 + 1);
      out.image[static_cast<size_t>(d)].push_back(dst.normalize(d, mapped));
    }
  }
  return out;
}

}  // namespace paperlab
