#include "paperlab/fincat.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace paperlab {

// ---------------- FinCat core ----------------

FinCat::FinCat(std::vector<std::string> obj_names, std::vector<std::string> mor_names,
               std::vector<int> src, std::vector<int> dst, std::vector<int> identity,
               std::vector<std::vector<int>> table)
    : obj_names_(std::move(obj_names)),
      mor_names_(std::move(mor_names)),
      src_(std::move(src)),
      dst_(std::move(dst)),
      id_(std::move(identity)),
      table_(std::move(table)) {
  size_t M = mor_names_.size();
  if (src_.size() != M || dst_.size() != M || table_.size() != M)
    throw Error("FinCat: inconsistent morphism data sizes");
  if (id_.size() != obj_names_.size())
    throw Error("FinCat: one identity per object required");
  for (auto& row : table_)
    if (row.size() != M) throw Error("FinCat: composition table must be square");
  for (size_t x = 0; x < id_.size(); ++x) {
    int e = id_[x];
    if (src_[static_cast<size_t>(e)] != static_cast<int>(x) ||
        dst_[static_cast<size_t>(e)] != static_cast<int>(x))
      throw Error("FinCat: identity of " + obj_names_[x] + " is not an endomorphism");
  }
}

int FinCat::obj_index(const std::string& name) const {
  for (int i = 0; i < num_objects(); ++i)
    if (obj_names_[static_cast<size_t>(i)] == name) return i;
  throw Error("FinCat: unknown object " + name);
}

int FinCat::mor_index(const std::string& name) const {
  for (int i = 0; i < num_morphisms(); ++i)
    if (mor_names_[static_cast<size_t>(i)] == name) return i;
  throw Error("FinCat: unknown morphism " + name);
}

bool FinCat::is_identity(int m) const {
  return id_[static_cast<size_t>(src(m))] == m;
}

int FinCat::compose(int g, int f) const {
  if (dst(f) != src(g))
    throw CompositionMismatch("FinCat::compose: " + mor_name(g) + " o " + mor_name(f));
  int c = table_[static_cast<size_t>(g)][static_cast<size_t>(f)];
  if (c < 0) throw Error("FinCat::compose: table hole on a composable pair");
  return c;
}

std::vector<int> FinCat::hom(int a, int b) const {
  std::vector<int> out;
  for (int m = 0; m < num_morphisms(); ++m)
    if (src(m) == a && dst(m) == b) out.push_back(m);
  return out;
}

std::vector<int> FinCat::nonidentity() const {
  std::vector<int> out;
  for (int m = 0; m < num_morphisms(); ++m)
    if (!is_identity(m)) out.push_back(m);
  return out;
}

void FinCat::audit() const {
  for (int m = 0; m < num_morphisms(); ++m) {
    if (compose(m, identity(src(m))) != m || compose(identity(dst(m)), m) != m)
      throw Error("FinCat::audit: identity law fails at " + mor_name(m));
  }
  // group morphisms by source to keep the triple loop near the composable count
  std::vector<std::vector<int>> by_src(static_cast<size_t>(num_objects()));
  for (int m = 0; m < num_morphisms(); ++m)
    by_src[static_cast<size_t>(src(m))].push_back(m);
  for (int f = 0; f < num_morphisms(); ++f) {
    for (int g : by_src[static_cast<size_t>(dst(f))]) {
      int gf = compose(g, f);
      if (src(gf) != src(f) || dst(gf) != dst(g))
        throw Error("FinCat::audit: composite has wrong endpoints");
      for (int h : by_src[static_cast<size_t>(dst(g))])
        if (compose(h, gf) != compose(compose(h, g), f))
          throw Error("FinCat::audit: associativity fails");
    }
  }
}

// ---------------- Functor ----------------

void Functor::validate() const {
  if (static_cast<int>(obj_map.size()) != src->num_objects() ||
      static_cast<int>(mor_map.size()) != src->num_morphisms())
    throw Error("Functor: map sizes do not match the source category");
  for (int m = 0; m < src->num_morphisms(); ++m) {
    if (dst->src(on_mor(m)) != on_obj(src->src(m)) ||
        dst->dst(on_mor(m)) != on_obj(src->dst(m)))
      throw Error("Functor: typing broken at " + src->mor_name(m));
  }
  for (int x = 0; x < src->num_objects(); ++x)
    if (on_mor(src->identity(x)) != dst->identity(on_obj(x)))
      throw Error("Functor: identity not preserved at " + src->obj_name(x));
  for (int f = 0; f < src->num_morphisms(); ++f)
    for (int g = 0; g < src->num_morphisms(); ++g)
      if (src->dst(f) == src->src(g) &&
          on_mor(src->compose(g, f)) != dst->compose(on_mor(g), on_mor(f)))
        throw Error("Functor: composition not preserved");
}

Functor identity_functor(const FinCatPtr& c) {
  Functor f{c, c, {}, {}};
  for (int x = 0; x < c->num_objects(); ++x) f.obj_map.push_back(x);
  for (int m = 0; m < c->num_morphisms(); ++m) f.mor_map.push_back(m);
  return f;
}

Functor compose(const Functor& f, const Functor& g) {
  if (!(*f.src == *g.dst)) throw CompositionMismatch("Functor composition mismatch");
  Functor h{g.src, f.dst, {}, {}};
  for (int x = 0; x < g.src->num_objects(); ++x) h.obj_map.push_back(f.on_obj(g.on_obj(x)));
  for (int m = 0; m < g.src->num_morphisms(); ++m) h.mor_map.push_back(f.on_mor(g.on_mor(m)));
  return h;
}

Functor constant_functor(const FinCatPtr& src, const FinCatPtr& dst, int obj) {
  Functor f{src, dst, {}, {}};
  f.obj_map.assign(static_cast<size_t>(src->num_objects()), obj);
  f.mor_map.assign(static_cast<size_t>(src->num_morphisms()), dst->identity(obj));
  return f;
}

// ---------------- basic categories ----------------

FinCat terminal_category() { return chain_category(0); }

FinCat discrete_category(int k) {
  std::vector<std::string> objs, mors;
  std::vector<int> src, dst, id;
  for (int i = 0; i < k; ++i) {
    objs.push_back(std::to_string(i));
    mors.push_back("id" + std::to_string(i));
    src.push_back(i);
    dst.push_back(i);
    id.push_back(i);
  }
  std::vector<std::vector<int>> table(static_cast<size_t>(k),
                                      std::vector<int>(static_cast<size_t>(k), -1));
  for (int i = 0; i < k; ++i) table[static_cast<size_t>(i)][static_cast<size_t>(i)] = i;
  return FinCat(objs, mors, src, dst, id, table);
}

FinCat chain_category(int n) {
  // poset [n]: one morphism a -> b for every a <= b
  std::vector<std::string> objs, mors;
  std::vector<int> src, dst, id;
  std::map<std::pair<int, int>, int> arrow;
  for (int a = 0; a <= n; ++a) objs.push_back(std::to_string(a));
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      arrow[{a, b}] = static_cast<int>(mors.size());
      mors.push_back(std::to_string(a) + "<=" + std::to_string(b));
      src.push_back(a);
      dst.push_back(b);
    }
  for (int a = 0; a <= n; ++a) id.push_back(arrow[{a, a}]);
  size_t M = mors.size();
  std::vector<std::vector<int>> table(M, std::vector<int>(M, -1));
  for (size_t g = 0; g < M; ++g)
    for (size_t f = 0; f < M; ++f)
      if (dst[f] == src[g])
        table[g][f] = arrow[{src[f], dst[g]}];
  return FinCat(objs, mors, src, dst, id, table);
}

Functor chain_functor(const MonotoneMap& f) {
  auto a = std::make_shared<const FinCat>(chain_category(f.src));
  auto b = std::make_shared<const FinCat>(chain_category(f.dst));
  Functor out{a, b, {}, {}};
  for (int x = 0; x <= f.src; ++x) out.obj_map.push_back(f(x));
  for (int m = 0; m < a->num_morphisms(); ++m)
    out.mor_map.push_back(b->mor_index(std::to_string(f(a->src(m))) + "<=" +
                                       std::to_string(f(a->dst(m)))));
  return out;
}

// ---------------- product / coproduct / opposite ----------------

CatProduct cat_product(const FinCatPtr& a, const FinCatPtr& b) {
  int MB = b->num_morphisms();
  std::vector<std::string> objs, mors;
  std::vector<int> src, dst, id;
  for (int x = 0; x < a->num_objects(); ++x)
    for (int y = 0; y < b->num_objects(); ++y)
      objs.push_back("(" + a->obj_name(x) + "," + b->obj_name(y) + ")");
  for (int m = 0; m < a->num_morphisms(); ++m)
    for (int n = 0; n < MB; ++n) {
      mors.push_back("(" + a->mor_name(m) + "," + b->mor_name(n) + ")");
      src.push_back(a->src(m) * b->num_objects() + b->src(n));
      dst.push_back(a->dst(m) * b->num_objects() + b->dst(n));
    }
  for (int x = 0; x < a->num_objects(); ++x)
    for (int y = 0; y < b->num_objects(); ++y)
      id.push_back(a->identity(x) * MB + b->identity(y));
  size_t M = mors.size();
  std::vector<std::vector<int>> table(M, std::vector<int>(M, -1));
  for (size_t g = 0; g < M; ++g)
    for (size_t f = 0; f < M; ++f)
      if (dst[f] == src[g]) {
        int ga = static_cast<int>(g) / MB, gb = static_cast<int>(g) % MB;
        int fa = static_cast<int>(f) / MB, fb = static_cast<int>(f) % MB;
        table[g][f] = a->compose(ga, fa) * MB + b->compose(gb, fb);
      }
  CatProduct out;
  out.cat = std::make_shared<const FinCat>(FinCat(objs, mors, src, dst, id, table));
  out.pair_obj = [b](int x, int y) { return x * b->num_objects() + y; };
  out.pair_mor = [MB](int m, int n) { return m * MB + n; };
  out.proj1 = Functor{out.cat, a, {}, {}};
  out.proj2 = Functor{out.cat, b, {}, {}};
  for (int x = 0; x < a->num_objects(); ++x)
    for (int y = 0; y < b->num_objects(); ++y) {
      out.proj1.obj_map.push_back(x);
      out.proj2.obj_map.push_back(y);
    }
  for (int m = 0; m < a->num_morphisms(); ++m)
    for (int n = 0; n < MB; ++n) {
      out.proj1.mor_map.push_back(m);
      out.proj2.mor_map.push_back(n);
    }
  return out;
}

CatCoproduct cat_coproduct(const FinCatPtr& a, const FinCatPtr& b) {
  std::vector<std::string> objs, mors;
  std::vector<int> src, dst, id;
  for (int x = 0; x < a->num_objects(); ++x) objs.push_back("L." + a->obj_name(x));
  for (int y = 0; y < b->num_objects(); ++y) objs.push_back("R." + b->obj_name(y));
  int OB = a->num_objects();
  int MA = a->num_morphisms();
  for (int m = 0; m < MA; ++m) {
    mors.push_back("L." + a->mor_name(m));
    src.push_back(a->src(m));
    dst.push_back(a->dst(m));
  }
  for (int n = 0; n < b->num_morphisms(); ++n) {
    mors.push_back("R." + b->mor_name(n));
    src.push_back(OB + b->src(n));
    dst.push_back(OB + b->dst(n));
  }
  for (int x = 0; x < a->num_objects(); ++x) id.push_back(a->identity(x));
  for (int y = 0; y < b->num_objects(); ++y) id.push_back(MA + b->identity(y));
  size_t M = mors.size();
  std::vector<std::vector<int>> table(M, std::vector<int>(M, -1));
  for (size_t g = 0; g < M; ++g)
    for (size_t f = 0; f < M; ++f)
      if (dst[f] == src[g]) {
        bool left = static_cast<int>(g) < MA;
        table[g][f] = left ? a->compose(static_cast<int>(g), static_cast<int>(f))
                           : MA + b->compose(static_cast<int>(g) - MA,
                                             static_cast<int>(f) - MA);
      }
  CatCoproduct out;
  out.cat = std::make_shared<const FinCat>(FinCat(objs, mors, src, dst, id, table));
  out.inj1 = Functor{a, out.cat, {}, {}};
  out.inj2 = Functor{b, out.cat, {}, {}};
  for (int x = 0; x < a->num_objects(); ++x) out.inj1.obj_map.push_back(x);
  for (int m = 0; m < MA; ++m) out.inj1.mor_map.push_back(m);
  for (int y = 0; y < b->num_objects(); ++y) out.inj2.obj_map.push_back(OB + y);
  for (int n = 0; n < b->num_morphisms(); ++n) out.inj2.mor_map.push_back(MA + n);
  return out;
}

FinCat opposite(const FinCat& c) {
  std::vector<std::string> objs, mors;
  std::vector<int> src, dst, id;
  for (int x = 0; x < c.num_objects(); ++x) objs.push_back(c.obj_name(x));
  for (int m = 0; m < c.num_morphisms(); ++m) {
    mors.push_back(c.mor_name(m));
    src.push_back(c.dst(m));
    dst.push_back(c.src(m));
  }
  for (int x = 0; x < c.num_objects(); ++x) id.push_back(c.identity(x));
  size_t M = mors.size();
  std::vector<std::vector<int>> table(M, std::vector<int>(M, -1));
  for (size_t g = 0; g < M; ++g)
    for (size_t f = 0; f < M; ++f)
      if (dst[f] == src[g])
        table[g][f] = c.compose(static_cast<int>(f), static_cast<int>(g));
  return FinCat(objs, mors, src, dst, id, table);
}

FinCat morphism_category(const FinCat& c) {
  // objects: morphisms f of c; morphisms (u,v) : f1 -> f2 with
  // u : src(f2) -> src(f1), v : dst(f1) -> dst(f2), v o f1 o u = f2
  int M = c.num_morphisms();
  std::vector<std::string> objs;
  for (int f = 0; f < M; ++f) objs.push_back("[" + c.mor_name(f) + "]");
  struct Square {
    int f1, f2, u, v;
  };
  std::vector<Square> sq;
  std::vector<std::string> mors;
  std::vector<int> src, dst, id;
  std::map<std::tuple<int, int, int, int>, int> index;
  for (int f1 = 0; f1 < M; ++f1)
    for (int f2 = 0; f2 < M; ++f2)
      for (int u : c.hom(c.src(f2), c.src(f1)))
        for (int v : c.hom(c.dst(f1), c.dst(f2)))
          if (c.compose(v, c.compose(f1, u)) == f2) {
            index[{f1, f2, u, v}] = static_cast<int>(sq.size());
            sq.push_back({f1, f2, u, v});
            mors.push_back("(" + c.mor_name(u) + ";" + c.mor_name(v) + ")");
            src.push_back(f1);
            dst.push_back(f2);
          }
  for (int f = 0; f < M; ++f)
    id.push_back(index.at({f, f, c.identity(c.src(f)), c.identity(c.dst(f))}));
  size_t MM = sq.size();
  std::vector<std::vector<int>> table(MM, std::vector<int>(MM, -1));
  for (size_t g = 0; g < MM; ++g)
    for (size_t f = 0; f < MM; ++f)
      if (dst[f] == src[g])
        table[g][f] = index.at({sq[f].f1, sq[g].f2, c.compose(sq[f].u, sq[g].u),
                                c.compose(sq[g].v, sq[f].v)});
  return FinCat(objs, mors, src, dst, id, table);
}

std::optional<int> terminal_object(const FinCat& c) {
  for (int t = 0; t < c.num_objects(); ++t) {
    bool ok = true;
    for (int x = 0; x < c.num_objects() && ok; ++x)
      ok = c.hom(x, t).size() == 1;
    if (ok) return t;
  }
  return std::nullopt;
}

// ---------------- directedness / nerve ----------------

DirectednessCertificate directedness(const FinCat& c) {
  int n = c.num_objects();
  std::vector<std::set<int>> out(static_cast<size_t>(n));
  for (int m : c.nonidentity()) {
    if (c.src(m) == c.dst(m)) {
      DirectednessCertificate bad;
      bad.cycle = {c.src(m)};
      return bad;
    }
    out[static_cast<size_t>(c.src(m))].insert(c.dst(m));
  }
  std::vector<int> indeg(static_cast<size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b : out[static_cast<size_t>(a)]) ++indeg[static_cast<size_t>(b)];
  std::vector<int> order;
  std::vector<int> stack;
  for (int a = 0; a < n; ++a)
    if (indeg[static_cast<size_t>(a)] == 0) stack.push_back(a);
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    order.push_back(a);
    for (int b : out[static_cast<size_t>(a)])
      if (--indeg[static_cast<size_t>(b)] == 0) stack.push_back(b);
  }
  if (static_cast<int>(order.size()) == n) {
    DirectednessCertificate good;
    good.directed = true;
    good.order = std::move(order);
    return good;
  }
  // tri-color DFS to extract a concrete cycle witness
  std::vector<int> color(static_cast<size_t>(n), 0);  // 0 white, 1 gray, 2 black
  std::vector<int> path;
  std::function<std::vector<int>(int)> dfs = [&](int a) -> std::vector<int> {
    color[static_cast<size_t>(a)] = 1;
    path.push_back(a);
    for (int b : out[static_cast<size_t>(a)]) {
      if (color[static_cast<size_t>(b)] == 1) {
        auto it = std::find(path.begin(), path.end(), b);
        return std::vector<int>(it, path.end());
      }
      if (color[static_cast<size_t>(b)] == 0) {
        auto cyc = dfs(b);
        if (!cyc.empty()) return cyc;
      }
    }
    color[static_cast<size_t>(a)] = 2;
    path.pop_back();
    return {};
  };
  for (int a = 0; a < n; ++a)
    if (color[static_cast<size_t>(a)] == 0) {
      auto cyc = dfs(a);
      if (!cyc.empty()) {
        DirectednessCertificate bad;
        bad.cycle = std::move(cyc);
        return bad;
      }
    }
  throw Error("directedness: inconsistent state");  // unreachable
}

int NerveResult::chain_index(int d, const std::vector<int>& chain) const {
  auto it = index_[static_cast<size_t>(d)].find(chain);
  if (it == index_[static_cast<size_t>(d)].end())
    throw Error("NerveResult: unknown chain");
  return it->second;
}

NerveResult nerve(const FinCatPtr& c) {
  auto cert = directedness(*c);
  if (!cert.directed) {
    std::string w;
    for (int x : cert.cycle) w += (w.empty() ? "" : " -> ") + c->obj_name(x);
    throw InfiniteNerve("nerve: category has a cycle through " + w);
  }
  NerveResult res;
  std::vector<std::vector<std::vector<int>>> chains;
  chains.emplace_back();  // dim 0: one empty chain per object
  for (int x = 0; x < c->num_objects(); ++x) chains[0].push_back({});
  auto nonid = c->nonidentity();
  std::vector<std::vector<int>> by_src(static_cast<size_t>(c->num_objects()));
  for (int m : nonid) by_src[static_cast<size_t>(c->src(m))].push_back(m);
  for (;;) {
    std::vector<std::vector<int>> next;
    if (chains.size() == 1) {
      for (int m : nonid) next.push_back({m});
    } else {
      for (const auto& ch : chains.back())
        for (int m : by_src[static_cast<size_t>(c->dst(ch.back()))]) {
          std::vector<int> ext = ch;
          ext.push_back(m);
          next.push_back(std::move(ext));
        }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    chains.push_back(std::move(next));
  }
  int D = static_cast<int>(chains.size()) - 1;
  res.index_.resize(static_cast<size_t>(D) + 1);
  for (int d = 0; d <= D; ++d)
    for (size_t i = 0; i < chains[static_cast<size_t>(d)].size(); ++i)
      res.index_[static_cast<size_t>(d)][chains[static_cast<size_t>(d)][i]] =
          static_cast<int>(i);
  // object index doubles as the dim-0 simplex index
  std::vector<std::vector<std::string>> names(static_cast<size_t>(D) + 1);
  std::vector<std::vector<std::vector<Simp>>> faces(static_cast<size_t>(D) + 1);
  for (int x = 0; x < c->num_objects(); ++x) names[0].push_back(c->obj_name(x));
  for (int d = 1; d <= D; ++d) {
    for (const auto& ch : chains[static_cast<size_t>(d)]) {
      std::string nm;
      for (int m : ch) nm += (nm.empty() ? "" : "|") + c->mor_name(m);
      names[static_cast<size_t>(d)].push_back(nm);
      std::vector<Simp> fs;
      for (int j = 0; j <= d; ++j) {
        if (d == 1) {
          fs.push_back(nondeg_simp(0, j == 0 ? c->dst(ch[0]) : c->src(ch[0])));
          continue;
        }
        std::vector<int> sub;
        if (j == 0) {
          sub.assign(ch.begin() + 1, ch.end());
        } else if (j == d) {
          sub.assign(ch.begin(), ch.end() - 1);
        } else {
          sub.assign(ch.begin(), ch.end());
          sub[static_cast<size_t>(j)] =
              c->compose(sub[static_cast<size_t>(j)], sub[static_cast<size_t>(j - 1)]);
          sub.erase(sub.begin() + (j - 1));
        }
        fs.push_back(nondeg_simp(d - 1, res.chain_index(d - 1, sub)));
      }
      faces[static_cast<size_t>(d)].push_back(std::move(fs));
    }
  }
  res.ss = std::make_shared<const SSet>(SSet(std::move(names), std::move(faces)));
  res.chains = std::move(chains);
  return res;
}

SSetMap nerve_map(const Functor& f, const NerveResult& nsrc, const NerveResult& ndst) {
  SSetMap out{nsrc.ss, ndst.ss, {}};
  out.image.resize(static_cast<size_t>(nsrc.ss->dim()) + 1);
  for (int x = 0; x < f.src->num_objects(); ++x)
    out.image[0].push_back(nondeg_simp(0, f.on_obj(x)));
  for (int d = 1; d <= nsrc.ss->dim(); ++d) {
    for (const auto& ch : nsrc.chains[static_cast<size_t>(d)]) {
      // drop identity images; the dropped positions define the degeneracy
      std::vector<int> reduced;
      std::vector<int> vals = {0};
      for (int m : ch) {
        int im = f.on_mor(m);
        if (!f.dst->is_identity(im)) reduced.push_back(im);
        vals.push_back(static_cast<int>(reduced.size()));
      }
      int k = static_cast<int>(reduced.size());
      int base = reduced.empty() ? f.on_obj(f.src->src(ch[0]))
                                 : ndst.chain_index(k, reduced);
      out.image[static_cast<size_t>(d)].push_back(
          Simp{MonotoneMap(d, k, vals), base});
    }
  }
  return out;
}

// ---------------- isomorphism testing ----------------

namespace {

struct IsoSearch {
  const FinCat& a;
  const FinCat& b;
  std::vector<int> omap;         // a-object -> b-object or -1
  std::vector<bool> used;
  long long budget = 5'000'000;

  IsoSearch(const FinCat& a_, const FinCat& b_) : a(a_), b(b_) {
    omap.assign(static_cast<size_t>(a.num_objects()), -1);
    used.assign(static_cast<size_t>(b.num_objects()), false);
  }

  bool compatible(int x, int y) {
    for (int x2 = 0; x2 < a.num_objects(); ++x2) {
      int y2 = omap[static_cast<size_t>(x2)];
      if (y2 < 0) continue;
      if (a.hom(x, x2).size() != b.hom(y, y2).size()) return false;
      if (a.hom(x2, x).size() != b.hom(y2, y).size()) return false;
    }
    return a.hom(x, x).size() == b.hom(y, y).size();
  }

  bool match_morphisms() {
    // per hom-set bijections, then a full table check
    std::vector<int> mmap(static_cast<size_t>(a.num_morphisms()), -1);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> cells;
    for (int x = 0; x < a.num_objects(); ++x)
      for (int y = 0; y < a.num_objects(); ++y) {
        auto ha = a.hom(x, y);
        auto hb = b.hom(omap[static_cast<size_t>(x)], omap[static_cast<size_t>(y)]);
        if (ha.size() != hb.size()) return false;
        if (!ha.empty()) cells.emplace_back(std::move(ha), std::move(hb));
      }
    for (int x = 0; x < a.num_objects(); ++x)
      mmap[static_cast<size_t>(a.identity(x))] =
          b.identity(omap[static_cast<size_t>(x)]);
    std::function<bool(size_t)> go = [&](size_t ci) -> bool {
      if (--budget < 0) throw Error("fincat_isomorphic: search budget exceeded");
      if (ci == cells.size()) {
        for (int f = 0; f < a.num_morphisms(); ++f)
          for (int g = 0; g < a.num_morphisms(); ++g)
            if (a.dst(f) == a.src(g) &&
                mmap[static_cast<size_t>(a.compose(g, f))] !=
                    b.compose(mmap[static_cast<size_t>(g)], mmap[static_cast<size_t>(f)]))
              return false;
        return true;
      }
      auto& [ha, hb] = cells[ci];
      std::vector<int> perm(hb);
      std::sort(perm.begin(), perm.end());
      // identities are pinned; permute only the rest consistently
      do {
        bool ok = true;
        for (size_t i = 0; i < ha.size() && ok; ++i) {
          int pinned = mmap[static_cast<size_t>(ha[i])];
          if (a.is_identity(ha[i]))
            ok = perm[i] == pinned;
          else
            ok = !b.is_identity(perm[i]);
        }
        if (!ok) continue;
        for (size_t i = 0; i < ha.size(); ++i) mmap[static_cast<size_t>(ha[i])] = perm[i];
        if (go(ci + 1)) return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
      for (int m : cells[ci].first)
        if (!a.is_identity(m)) mmap[static_cast<size_t>(m)] = -1;
      return false;
    };
    return go(0);
  }

  bool assign(int x) {
    if (--budget < 0) throw Error("fincat_isomorphic: search budget exceeded");
    if (x == a.num_objects()) return match_morphisms();
    for (int y = 0; y < b.num_objects(); ++y) {
      if (used[static_cast<size_t>(y)] || !compatible(x, y)) continue;
      omap[static_cast<size_t>(x)] = y;
      used[static_cast<size_t>(y)] = true;
      if (assign(x + 1)) return true;
      omap[static_cast<size_t>(x)] = -1;
      used[static_cast<size_t>(y)] = false;
    }
    return false;
  }
};

}  // namespace

bool fincat_isomorphic(const FinCat& a, const FinCat& b) {
  if (a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms())
    return false;
  IsoSearch s(a, b);
  return s.assign(0);
}

// ---------------- degree-capped homology ----------------

HomologyResult cat_homology_capped(const FinCat& c, int cap) {
  // normalized chains: composable non-identity morphism chains
  std::vector<std::vector<std::vector<int>>> chains(static_cast<size_t>(cap) + 2);
  std::vector<std::map<std::vector<int>, long long>> index(static_cast<size_t>(cap) + 2);
  for (int x = 0; x < c.num_objects(); ++x) chains[0].push_back({});
  auto nonid = c.nonidentity();
  std::vector<std::vector<int>> by_src(static_cast<size_t>(c.num_objects()));
  for (int m : nonid) by_src[static_cast<size_t>(c.src(m))].push_back(m);
  for (int d = 1; d <= cap + 1; ++d) {
    if (d == 1) {
      for (int m : nonid) chains[1].push_back({m});
    } else {
      for (const auto& ch : chains[static_cast<size_t>(d - 1)])
        for (int m : by_src[static_cast<size_t>(c.dst(ch.back()))]) {
          auto ext = ch;
          ext.push_back(m);
          chains[static_cast<size_t>(d)].push_back(std::move(ext));
        }
    }
  }
  for (size_t d = 0; d < chains.size(); ++d)
    for (size_t i = 0; i < chains[d].size(); ++i)
      index[d][chains[d][i]] = static_cast<long long>(i);

  ChainComplex cc;
  cc.dims.resize(static_cast<size_t>(cap) + 2);
  cc.boundary.resize(static_cast<size_t>(cap) + 2);
  for (int d = 0; d <= cap + 1; ++d)
    cc.dims[static_cast<size_t>(d)] =
        static_cast<long long>(chains[static_cast<size_t>(d)].size());
  cc.dims[0] = c.num_objects();
  for (int d = 1; d <= cap + 1; ++d) {
    SparseMatrix m(cc.dims[static_cast<size_t>(d - 1)], cc.dims[static_cast<size_t>(d)]);
    for (size_t i = 0; i < chains[static_cast<size_t>(d)].size(); ++i) {
      const auto& ch = chains[static_cast<size_t>(d)][i];
      for (int j = 0; j <= d; ++j) {
        long long row = -1;
        if (d == 1) {
          row = j == 0 ? c.dst(ch[0]) : c.src(ch[0]);
        } else {
          std::vector<int> sub;
          if (j == 0) {
            sub.assign(ch.begin() + 1, ch.end());
          } else if (j == d) {
            sub.assign(ch.begin(), ch.end() - 1);
          } else {
            sub.assign(ch.begin(), ch.end());
            int comp = c.compose(sub[static_cast<size_t>(j)], sub[static_cast<size_t>(j - 1)]);
            if (c.is_identity(comp)) continue;  // degenerate: zero in normalized chains
            sub[static_cast<size_t>(j)] = comp;
            sub.erase(sub.begin() + (j - 1));
          }
          row = index[static_cast<size_t>(d - 1)].at(sub);
        }
        m.add(row, static_cast<long long>(i), j % 2 == 0 ? 1 : -1);
      }
    }
    cc.boundary[static_cast<size_t>(d)] = std::move(m);
  }
  auto h = cc.homology();
  h.groups.resize(static_cast<size_t>(cap) + 1);
  h.degree_cap = cap;
  return h;
}

// ---------------- seeded corpus helper ----------------

FinCat random_directed_category(std::uint64_t seed, int max_objects) {
  std::mt19937_64 rng(seed);
  int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_objects - 1));
  CatPresentation p;
  for (int i = 0; i < n; ++i) p.vertices.push_back("v" + std::to_string(i));
  int edges = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n + 2));
  for (int e = 0; e < edges; ++e) {
    // arcs only go upward, so the free category is directed and finite
    int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    int b = a + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - a - 1));
    p.edges.push_back({"e" + std::to_string(e), a, b});
  }
  return *realize_presentation(p).cat;
}

}  // namespace paperlab
