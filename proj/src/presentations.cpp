#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "paperlab/fincat.hpp"

namespace paperlab {

namespace {

using Word = std::vector<int>;  // edge ids in diagrammatic order

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// Shortlex Knuth-Bendix completion over typed edge words.  Edges carry
/// source/target vertices; all words occurring here are composable paths, and
/// critical-pair overlaps are automatically well typed because the shared
/// subword fixes the typing.
struct Rewriter {
  struct Rule {
    Word lhs, rhs;
  };

  int bound;
  std::vector<Rule> rules;
  size_t max_lhs = 0;

  explicit Rewriter(int bound_) : bound(bound_) {}

  Word normalize(Word w) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t pos = 0; pos < w.size() && !changed; ++pos) {
        for (const auto& r : rules) {
          size_t L = r.lhs.size();
          if (pos + L > w.size()) continue;
          if (!std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + static_cast<long>(pos)))
            continue;
          Word next(w.begin(), w.begin() + static_cast<long>(pos));
          next.insert(next.end(), r.rhs.begin(), r.rhs.end());
          next.insert(next.end(), w.begin() + static_cast<long>(pos + L), w.end());
          w = std::move(next);
          changed = true;
          break;
        }
      }
    }
    return w;
  }

  void complete(std::vector<std::pair<Word, Word>> equations) {
    std::deque<std::pair<size_t, size_t>> agenda;
    long long budget = 2'000'000;
    auto add_rule = [&](Word a, Word b) {
      a = normalize(std::move(a));
      b = normalize(std::move(b));
      if (a == b) return;
      if (shortlex_less(a, b)) std::swap(a, b);
      if (static_cast<int>(a.size()) >= bound)
        throw ClosureBoundExceeded(
            "realize_presentation: rewriting rule reached the length bound " +
            std::to_string(bound));
      size_t idx = rules.size();
      if (idx > 20000)
        throw ClosureBoundExceeded("realize_presentation: rule count exploded");
      max_lhs = std::max(max_lhs, a.size());
      rules.push_back({std::move(a), std::move(b)});
      for (size_t j = 0; j <= idx; ++j) {
        agenda.emplace_back(idx, j);
        if (j != idx) agenda.emplace_back(j, idx);
      }
    };
    for (auto& [a, b] : equations) add_rule(std::move(a), std::move(b));
    while (!agenda.empty()) {
      if (--budget < 0)
        throw ClosureBoundExceeded("realize_presentation: completion did not stabilize");
      auto [i, j] = agenda.front();
      agenda.pop_front();
      const Word l1 = rules[i].lhs, r1 = rules[i].rhs;
      const Word l2 = rules[j].lhs, r2 = rules[j].rhs;
      // proper overlap: a nonempty suffix of l1 equals a prefix of l2
      for (size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
        if (!std::equal(l2.begin(), l2.begin() + static_cast<long>(k),
                        l1.end() - static_cast<long>(k)))
          continue;
        Word left = r1;  // reduce the front part
        left.insert(left.end(), l2.begin() + static_cast<long>(k), l2.end());
        Word right(l1.begin(), l1.end() - static_cast<long>(k));
        right.insert(right.end(), r2.begin(), r2.end());
        add_rule(std::move(left), std::move(right));
      }
      // containment: l2 occurs inside l1
      if (i != j && l2.size() <= l1.size()) {
        for (size_t p = 0; p + l2.size() <= l1.size(); ++p) {
          if (!std::equal(l2.begin(), l2.end(), l1.begin() + static_cast<long>(p)))
            continue;
          Word alt(l1.begin(), l1.begin() + static_cast<long>(p));
          alt.insert(alt.end(), r2.begin(), r2.end());
          alt.insert(alt.end(), l1.begin() + static_cast<long>(p + l2.size()), l1.end());
          add_rule(r1, std::move(alt));
        }
      }
    }
  }

  /// True when appending edge e to the irreducible word w stays irreducible.
  bool extend_irreducible(const Word& w, int e) const {
    for (const auto& r : rules) {
      size_t L = r.lhs.size();
      if (L > w.size() + 1 || L == 0) continue;
      if (r.lhs.back() != e) continue;
      if (std::equal(r.lhs.begin(), r.lhs.end() - 1, w.end() - static_cast<long>(L - 1)))
        return false;
    }
    return true;
  }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

RealizedPresentation realize_presentation(const CatPresentation& p, int bound) {
  if (bound < 1) throw Error("realize_presentation: bound must be >= 1");
  int nv = static_cast<int>(p.vertices.size());
  UnionFind uf(nv);
  for (auto& [a, b] : p.vertex_glue) uf.unite(a, b);

  std::vector<int> esrc, edst;
  for (const auto& e : p.edges) {
    esrc.push_back(uf.find(e.src));
    edst.push_back(uf.find(e.dst));
  }
  auto path_ends = [&](const CatPresentation::Path& path) {
    if (path.edges.empty()) {
      int v = uf.find(path.start);
      return std::pair<int, int>(v, v);
    }
    int s = esrc[static_cast<size_t>(path.edges[0])];
    int t = edst[static_cast<size_t>(path.edges[0])];
    for (size_t i = 1; i < path.edges.size(); ++i) {
      int e = path.edges[i];
      if (esrc[static_cast<size_t>(e)] != t)
        throw Error("realize_presentation: relation path is not composable");
      t = edst[static_cast<size_t>(e)];
    }
    return std::pair<int, int>(s, t);
  };

  std::vector<std::pair<Word, Word>> eqs;
  for (const auto& [lhs, rhs] : p.relations) {
    auto [ls, lt] = path_ends(lhs);
    auto [rs, rt] = path_ends(rhs);
    if (ls != rs || lt != rt)
      throw Error("realize_presentation: relation paths are not parallel");
    eqs.emplace_back(lhs.edges, rhs.edges);
  }

  auto rw = std::make_shared<Rewriter>(bound);
  rw->complete(std::move(eqs));

  // object set: glued vertex classes, ordered by least member
  std::vector<int> vertex_obj(static_cast<size_t>(nv), -1);
  std::vector<int> reps;
  for (int v = 0; v < nv; ++v)
    if (uf.find(v) == v) {
      vertex_obj[static_cast<size_t>(v)] = static_cast<int>(reps.size());
      reps.push_back(v);
    }
  for (int v = 0; v < nv; ++v) vertex_obj[static_cast<size_t>(v)] = vertex_obj[static_cast<size_t>(uf.find(v))];
  int nobj = static_cast<int>(reps.size());

  // enumerate irreducible words per starting object, shortest first
  std::vector<std::vector<int>> edges_from(static_cast<size_t>(nobj));
  for (size_t e = 0; e < esrc.size(); ++e)
    edges_from[static_cast<size_t>(vertex_obj[static_cast<size_t>(esrc[e])])].push_back(
        static_cast<int>(e));

  struct Mor {
    int src, dst;
    Word word;
  };
  std::vector<Mor> mors;
  auto word_map = std::make_shared<std::map<std::pair<int, Word>, int>>();
  for (int x = 0; x < nobj; ++x) {
    (*word_map)[{x, {}}] = static_cast<int>(mors.size());
    mors.push_back({x, x, {}});
  }
  std::deque<int> queue;
  for (int m = 0; m < nobj; ++m) queue.push_back(m);
  while (!queue.empty()) {
    int m = queue.front();
    queue.pop_front();
    const Mor cur = mors[static_cast<size_t>(m)];
    for (int e : edges_from[static_cast<size_t>(cur.dst)]) {
      if (!rw->extend_irreducible(cur.word, e)) continue;
      Word w = cur.word;
      w.push_back(e);
      if (static_cast<int>(w.size()) >= bound)
        throw ClosureBoundExceeded(
            "realize_presentation: canonical forms reach the length bound " +
            std::to_string(bound) + "; the category may be infinite");
      if (mors.size() > 5000)
        throw ClosureBoundExceeded("realize_presentation: morphism count exploded");
      int idx = static_cast<int>(mors.size());
      (*word_map)[{cur.src, w}] = idx;
      mors.push_back({cur.src, vertex_obj[static_cast<size_t>(edst[static_cast<size_t>(e)])],
                      std::move(w)});
      queue.push_back(idx);
    }
  }

  std::vector<std::string> obj_names, mor_names;
  for (int r : reps) obj_names.push_back(p.vertices[static_cast<size_t>(r)]);
  std::vector<int> src, dst, id;
  for (const auto& m : mors) {
    src.push_back(m.src);
    dst.push_back(m.dst);
    std::string nm;
    if (m.word.empty()) {
      nm = "id_" + obj_names[static_cast<size_t>(m.src)];
    } else {
      for (int e : m.word) nm += (nm.empty() ? "" : ".") + p.edges[static_cast<size_t>(e)].name;
    }
    mor_names.push_back(nm);
  }
  for (int x = 0; x < nobj; ++x) id.push_back(x);
  size_t M = mors.size();
  std::vector<std::vector<int>> table(M, std::vector<int>(M, -1));
  for (size_t f = 0; f < M; ++f)
    for (size_t g = 0; g < M; ++g)
      if (mors[f].dst == mors[g].src) {
        Word w = mors[f].word;
        w.insert(w.end(), mors[g].word.begin(), mors[g].word.end());
        table[g][f] = word_map->at({mors[f].src, rw->normalize(std::move(w))});
      }

  RealizedPresentation out;
  out.cat = std::make_shared<const FinCat>(
      FinCat(std::move(obj_names), std::move(mor_names), std::move(src), std::move(dst),
             std::move(id), std::move(table)));
  for (const auto& m : mors) out.mor_word.push_back(m.word);
  out.vertex_obj = vertex_obj;
  for (size_t e = 0; e < esrc.size(); ++e) {
    Word w = rw->normalize({static_cast<int>(e)});
    out.edge_mor.push_back(
        word_map->at({vertex_obj[static_cast<size_t>(esrc[e])], std::move(w)}));
  }
  std::vector<int> vobj = vertex_obj;
  std::vector<int> esrc_copy = esrc;
  out.eval = [rw, word_map, vobj, esrc_copy](const CatPresentation::Path& path) {
    int start = path.edges.empty()
                    ? vobj[static_cast<size_t>(path.start)]
                    : vobj[static_cast<size_t>(esrc_copy[static_cast<size_t>(path.edges[0])])];
    return word_map->at({start, rw->normalize(path.edges)});
  };
  return out;
}

// ---------------- colimits via presentations ----------------

CatColimit cat_colimit(const std::vector<FinCatPtr>& blocks,
                       const std::vector<CatSpan>& spans, int bound) {
  CatPresentation p;
  std::vector<int> obj_off, mor_edge_base;
  std::vector<std::vector<int>> edge_of;  // per block, morphism -> edge or -1
  std::vector<std::pair<int, int>> edge_owner;  // edge -> (block, block morphism)
  for (size_t bi = 0; bi < blocks.size(); ++bi) {
    const FinCat& b = *blocks[bi];
    obj_off.push_back(static_cast<int>(p.vertices.size()));
    for (int x = 0; x < b.num_objects(); ++x)
      p.vertices.push_back("B" + std::to_string(bi) + "." + b.obj_name(x));
    edge_of.emplace_back(static_cast<size_t>(b.num_morphisms()), -1);
    for (int m : b.nonidentity()) {
      edge_of[bi][static_cast<size_t>(m)] = static_cast<int>(p.edges.size());
      edge_owner.emplace_back(static_cast<int>(bi), m);
      p.edges.push_back({"B" + std::to_string(bi) + "." + b.mor_name(m),
                         obj_off[bi] + b.src(m), obj_off[bi] + b.dst(m)});
    }
  }
  auto path_of = [&](size_t bi, int m) {
    CatPresentation::Path path;
    const FinCat& b = *blocks[bi];
    path.start = obj_off[bi] + b.src(m);
    if (!b.is_identity(m)) path.edges.push_back(edge_of[bi][static_cast<size_t>(m)]);
    return path;
  };
  // block multiplication tables as path relations
  for (size_t bi = 0; bi < blocks.size(); ++bi) {
    const FinCat& b = *blocks[bi];
    for (int f : b.nonidentity())
      for (int g : b.nonidentity()) {
        if (b.dst(f) != b.src(g)) continue;
        CatPresentation::Path lhs;
        lhs.start = obj_off[bi] + b.src(f);
        lhs.edges = {edge_of[bi][static_cast<size_t>(f)], edge_of[bi][static_cast<size_t>(g)]};
        p.relations.emplace_back(lhs, path_of(bi, b.compose(g, f)));
      }
  }
  // span identifications
  for (const auto& sp : spans) {
    const FinCat& x = *sp.left.src;
    for (int o = 0; o < x.num_objects(); ++o)
      p.vertex_glue.emplace_back(obj_off[static_cast<size_t>(sp.left_block)] + sp.left.on_obj(o),
                                 obj_off[static_cast<size_t>(sp.right_block)] + sp.right.on_obj(o));
    for (int m : x.nonidentity())
      p.relations.emplace_back(path_of(static_cast<size_t>(sp.left_block), sp.left.on_mor(m)),
                               path_of(static_cast<size_t>(sp.right_block), sp.right.on_mor(m)));
  }
  auto rp = realize_presentation(p, bound);
  CatColimit out;
  out.cat = rp.cat;
  for (size_t bi = 0; bi < blocks.size(); ++bi) {
    const FinCat& b = *blocks[bi];
    Functor leg{blocks[bi], out.cat, {}, {}};
    for (int x = 0; x < b.num_objects(); ++x)
      leg.obj_map.push_back(rp.vertex_obj[static_cast<size_t>(obj_off[bi] + x)]);
    for (int m = 0; m < b.num_morphisms(); ++m)
      leg.mor_map.push_back(rp.eval(path_of(bi, m)));
    out.legs.push_back(std::move(leg));
  }
  out.obj_rep.assign(static_cast<size_t>(out.cat->num_objects()), {-1, -1});
  for (size_t bi = 0; bi < blocks.size(); ++bi)
    for (int x = 0; x < blocks[bi]->num_objects(); ++x) {
      int o = out.legs[bi].on_obj(x);
      if (out.obj_rep[static_cast<size_t>(o)].first < 0)
        out.obj_rep[static_cast<size_t>(o)] = {static_cast<int>(bi), x};
    }
  for (int m = 0; m < out.cat->num_morphisms(); ++m) {
    std::vector<std::pair<int, int>> word;
    for (int e : rp.mor_word[static_cast<size_t>(m)])
      word.push_back(edge_owner[static_cast<size_t>(e)]);
    out.factors.push_back(std::move(word));
  }
  return out;
}

Functor induce_functor(const CatColimit& col, const std::vector<Functor>& cocone) {
  if (cocone.empty()) throw Error("induce_functor: empty cocone");
  FinCatPtr target = cocone.front().dst;
  Functor out{col.cat, target, {}, {}};
  for (int o = 0; o < col.cat->num_objects(); ++o) {
    auto [bi, x] = col.obj_rep[static_cast<size_t>(o)];
    out.obj_map.push_back(cocone[static_cast<size_t>(bi)].on_obj(x));
  }
  for (int m = 0; m < col.cat->num_morphisms(); ++m) {
    const auto& word = col.factors[static_cast<size_t>(m)];
    int cur = target->identity(out.obj_map[static_cast<size_t>(col.cat->src(m))]);
    for (const auto& [bi, bm] : word)
      cur = target->compose(cocone[static_cast<size_t>(bi)].on_mor(bm), cur);
    out.mor_map.push_back(cur);
  }
  return out;
}

CatColimit cat_pushout(const Functor& f, const Functor& g, int bound) {
  if (!(*f.src == *g.src))
    throw UnsupportedPushout("cat_pushout: legs must share their source");
  CatSpan sp{f, g, 0, 1};
  return cat_colimit({f.dst, g.dst}, {sp}, bound);
}

// ---------------- categorification ----------------

Categorified categorify(const SSet& s, int bound) {
  CatPresentation p;
  for (int v = 0; v < s.count(0); ++v) p.vertices.push_back(s.name(0, v));
  int edges = s.dim() >= 1 ? s.count(1) : 0;
  for (int e = 0; e < edges; ++e)
    // an edge x runs from d1(x) to d0(x)
    p.edges.push_back({s.name(1, e), s.face(1, e, 1).base, s.face(1, e, 0).base});
  auto path_of_face = [&](const Simp& x, int start_vertex) {
    // a normalized 1-simplex: an edge, or an identity at a vertex
    CatPresentation::Path path;
    path.start = start_vertex;
    if (x.is_nondegenerate()) path.edges.push_back(x.base);
    return path;
  };
  if (s.dim() >= 2) {
    for (int y = 0; y < s.count(2); ++y) {
      Simp top = nondeg_simp(2, y);
      int v0 = s.vertex(top, 0);
      int v1 = s.vertex(top, 1);
      CatPresentation::Path lhs = path_of_face(s.face(2, y, 2), v0);
      CatPresentation::Path d0 = path_of_face(s.face(2, y, 0), v1);
      lhs.edges.insert(lhs.edges.end(), d0.edges.begin(), d0.edges.end());
      p.relations.emplace_back(lhs, path_of_face(s.face(2, y, 1), v0));
    }
  }
  auto rp = realize_presentation(p, bound);
  return Categorified{rp.cat, rp.vertex_obj, rp.edge_mor, rp.mor_word, rp.eval};
}

Functor categorify_map(const Categorified& cs, const Categorified& ct, const SSetMap& f) {
  Functor out{cs.cat, ct.cat, {}, {}};
  // categorify never glues vertices, so vertex_obj is invertible
  std::vector<int> obj_vertex(static_cast<size_t>(cs.cat->num_objects()), -1);
  for (size_t v = 0; v < cs.vertex_obj.size(); ++v)
    obj_vertex[static_cast<size_t>(cs.vertex_obj[v])] = static_cast<int>(v);
  auto image_vertex = [&](int obj) {
    const Simp& im = f.image[0][static_cast<size_t>(obj_vertex[static_cast<size_t>(obj)])];
    return im.base;
  };
  for (int x = 0; x < cs.cat->num_objects(); ++x)
    out.obj_map.push_back(ct.vertex_obj[static_cast<size_t>(image_vertex(x))]);
  for (int m = 0; m < cs.cat->num_morphisms(); ++m) {
    CatPresentation::Path path;
    path.start = image_vertex(cs.cat->src(m));
    for (int e : cs.mor_word[static_cast<size_t>(m)]) {
      const Simp& im = f.image[1][static_cast<size_t>(e)];
      if (im.is_nondegenerate()) path.edges.push_back(im.base);
    }
    out.mor_map.push_back(ct.eval(path));
  }
  return out;
}

}  // namespace paperlab
