#include "paperlab/subdivide.hpp"

#include <algorithm>
#include <memory>

namespace paperlab {

// ---------------- face posets ----------------

FacePosetResult face_poset(int n) {
  FacePosetResult res;
  std::vector<std::vector<int>> subsets;
  for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i <= n; ++i)
      if (mask & (1 << i)) sub.push_back(i);
    subsets.push_back(std::move(sub));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  auto name_of = [](const std::vector<int>& sub) {
    std::string nm = "{";
    for (size_t i = 0; i < sub.size(); ++i)
      nm += (i ? "," : "") + std::to_string(sub[i]);
    return nm + "}";
  };
  std::vector<std::string> objs, mors;
  std::vector<int> src, dst, id;
  for (size_t i = 0; i < subsets.size(); ++i) {
    res.index[subsets[i]] = static_cast<int>(i);
    objs.push_back(name_of(subsets[i]));
  }
  for (size_t a = 0; a < subsets.size(); ++a)
    for (size_t b = 0; b < subsets.size(); ++b)
      if (std::includes(subsets[b].begin(), subsets[b].end(), subsets[a].begin(),
                        subsets[a].end())) {
        res.arrow[{static_cast<int>(a), static_cast<int>(b)}] =
            static_cast<int>(mors.size());
        mors.push_back(objs[a] + "<=" + objs[b]);
        src.push_back(static_cast<int>(a));
        dst.push_back(static_cast<int>(b));
      }
  for (size_t a = 0; a < subsets.size(); ++a)
    id.push_back(res.arrow.at({static_cast<int>(a), static_cast<int>(a)}));
  size_t M = mors.size();
  std::vector<std::vector<int>> table(M, std::vector<int>(M, -1));
  for (size_t g = 0; g < M; ++g)
    for (size_t f = 0; f < M; ++f)
      if (dst[f] == src[g]) table[g][f] = res.arrow.at({src[f], dst[g]});
  res.cat = std::make_shared<const FinCat>(
      FinCat(std::move(objs), std::move(mors), std::move(src), std::move(dst),
             std::move(id), std::move(table)));
  res.subsets = std::move(subsets);
  return res;
}

Functor face_poset_functor(const FacePosetResult& fm, const FacePosetResult& fn,
                           const MonotoneMap& phi) {
  Functor out{fm.cat, fn.cat, {}, {}};
  auto image = [&](const std::vector<int>& sub) {
    std::vector<int> im;
    for (int v : sub) im.push_back(phi(v));
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  };
  for (const auto& sub : fm.subsets) out.obj_map.push_back(fn.index.at(image(sub)));
  for (int m = 0; m < fm.cat->num_morphisms(); ++m)
    out.mor_map.push_back(
        fn.arrow.at({out.obj_map[static_cast<size_t>(fm.cat->src(m))],
                     out.obj_map[static_cast<size_t>(fm.cat->dst(m))]}));
  return out;
}

CosimplicialSSet face_poset_nerves(int trunc) {
  auto posets = std::make_shared<std::vector<FacePosetResult>>();
  auto nerves = std::make_shared<std::vector<NerveResult>>();
  CosimplicialSSet b;
  b.trunc = trunc;
  for (int n = 0; n <= trunc; ++n) {
    posets->push_back(face_poset(n));
    nerves->push_back(nerve(posets->back().cat));
    b.level.push_back(nerves->back().ss);
  }
  b.map = [posets, nerves](const MonotoneMap& phi) {
    return nerve_map(face_poset_functor((*posets)[static_cast<size_t>(phi.src)],
                                        (*posets)[static_cast<size_t>(phi.dst)], phi),
                     (*nerves)[static_cast<size_t>(phi.src)],
                     (*nerves)[static_cast<size_t>(phi.dst)]);
  };
  return b;
}

// ---------------- the three subdivisions ----------------

namespace {

/// The composite monotone maps implementing the quoted operator formulas at
/// result level m (acting on source level 2m+1).
MonotoneMap edgewise_face(SubKind kind, int i, int m) {
  if (kind == SubKind::edgewise)
    return compose(coface(i + m + 1, 2 * m + 1), coface(i, 2 * m));
  return compose(coface(m + 1 + i, 2 * m + 1), coface(m - i, 2 * m));
}

MonotoneMap edgewise_degen(SubKind kind, int i, int m) {
  if (kind == SubKind::edgewise)
    return compose(codegeneracy(i, 2 * m + 1), codegeneracy(i + m + 2, 2 * m + 2));
  return compose(codegeneracy(m - i, 2 * m + 1), codegeneracy(m + 2 + i, 2 * m + 2));
}

}  // namespace

BuiltSSet subdivide(SubKind kind, const SSetPtr& s, int trunc) {
  if (kind == SubKind::barycentric) {
    if (trunc < 0) trunc = s->dim();
    return coend_sset(s, face_poset_nerves(trunc));
  }
  RawSSet raw;
  raw.level = [s, kind](int m) {
    std::vector<std::string> out;
    for (const auto& z : s->level(2 * m + 1)) out.push_back(s->simp_key(z));
    return out;
  };
  raw.face = [s, kind](int m, int i, const std::string& key) {
    Simp z = s->simp_from_key(2 * m + 1, key);
    return s->simp_key(s->apply(z, edgewise_face(kind, i, m)));
  };
  raw.degen = [s, kind](int m, int i, const std::string& key) {
    Simp z = s->simp_from_key(2 * m + 1, key);
    return s->simp_key(s->apply(z, edgewise_degen(kind, i, m)));
  };
  return build_from_raw(raw, s->dim() + 1);
}

SSetPtr subdivide_iter(SubKind kind, int k, SSetPtr s) {
  if (k < 0) throw Error("subdivide_iter: k must be >= 0");
  for (int step = 0; step < k; ++step) s = subdivide(kind, s).ss;
  return s;
}

SSetMap subdivide_map(SubKind kind, const SSetMap& f, int trunc) {
  if (kind == SubKind::barycentric) {
    if (trunc < 0) trunc = std::max(f.src->dim(), f.dst->dim());
    BuiltSSet src = subdivide(kind, f.src, trunc);
    BuiltSSet dst = subdivide(kind, f.dst, trunc);
    return coend_sset_map(f, src, dst);
  }
  BuiltSSet src = subdivide(kind, f.src);
  BuiltSSet dst = subdivide(kind, f.dst);
  SSetMap out{src.ss, dst.ss, {}};
  out.image.resize(static_cast<size_t>(src.ss->dim()) + 1);
  for (int m = 0; m <= src.ss->dim(); ++m)
    for (int i = 0; i < src.ss->count(m); ++i) {
      Simp z = f.src->simp_from_key(2 * m + 1, src.raw_of(m, i));
      out.image[static_cast<size_t>(m)].push_back(
          dst.normalize(m, f.dst->simp_key(f.apply_to(z))));
    }
  return out;
}

std::vector<std::vector<Rational>> subdivision_vertex_coordinates(SubKind kind, int k,
                                                                  int n) {
  if (kind == SubKind::barycentric)
    throw Error("subdivision_vertex_coordinates: edgewise kinds only");
  SSetPtr cur = std::make_shared<const SSet>(standard_simplex(n));
  std::vector<std::vector<Rational>> coords;
  for (int v = 0; v <= n; ++v) {
    std::vector<Rational> e(static_cast<size_t>(n) + 1, Rational(0));
    e[static_cast<size_t>(v)] = Rational(1);
    coords.push_back(std::move(e));
  }
  for (int step = 0; step < k; ++step) {
    BuiltSSet next = subdivide(kind, cur);
    std::vector<std::vector<Rational>> nc;
    for (int v = 0; v < next.ss->count(0); ++v) {
      // a new vertex is an old 1-simplex; its point is the edge midpoint
      Simp z = cur->simp_from_key(1, next.raw_of(0, v));
      int a = cur->vertex(z, 0), b = cur->vertex(z, 1);
      std::vector<Rational> p;
      for (int j = 0; j <= n; ++j)
        p.push_back((coords[static_cast<size_t>(a)][static_cast<size_t>(j)] +
                     coords[static_cast<size_t>(b)][static_cast<size_t>(j)]) /
                    Rational(2));
      nc.push_back(std::move(p));
    }
    cur = next.ss;
    coords = std::move(nc);
  }
  return coords;
}

ProductCheck subdivision_product_check(SubKind kind, const SSetPtr& s, const SSetPtr& t) {
  ProductCheck out;
  ProductResult p = product(s, t);
  auto pp = std::make_shared<const SSet>(p.ss);
  BuiltSSet subp = subdivide(kind, pp);
  BuiltSSet subs = subdivide(kind, s);
  BuiltSSet subt = subdivide(kind, t);
  ProductResult q = product(subs.ss, subt.ss);
  auto vertices = [](const SSet& x) { return x.count(0); };
  if (kind == SubKind::barycentric) {
    out.preserved = sset_isomorphic(*subp.ss, q.ss);
    out.witness = "vertices " + std::to_string(vertices(*subp.ss)) + " vs " +
                  std::to_string(vertices(q.ss));
    return out;
  }
  // canonical comparison sub(SxT) -> sub(S) x sub(T), componentwise
  auto qp = std::make_shared<const SSet>(q.ss);
  SSetMap cmp{subp.ss, qp, {}};
  cmp.image.resize(static_cast<size_t>(subp.ss->dim()) + 1);
  for (int m = 0; m <= subp.ss->dim(); ++m)
    for (int i = 0; i < subp.ss->count(m); ++i) {
      Simp z = pp->simp_from_key(2 * m + 1, subp.raw_of(m, i));
      const auto& [bx, by] =
          p.pairs[static_cast<size_t>(z.base_dim())][static_cast<size_t>(z.base)];
      Simp xs = s->apply(bx, z.surj);
      Simp yt = t->apply(by, z.surj);
      cmp.image[static_cast<size_t>(m)].push_back(
          q.pair_lookup(subs.normalize(m, s->simp_key(xs)),
                        subt.normalize(m, t->simp_key(yt))));
    }
  cmp.validate();
  out.preserved = is_isomorphism(cmp);
  out.witness = "vertices " + std::to_string(vertices(*subp.ss)) + " vs " +
                std::to_string(vertices(q.ss));
  return out;
}

}  // namespace paperlab
