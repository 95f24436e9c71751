#include "paperlab/sset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace paperlab {

Simp nondeg_simp(int dim, int base) { return Simp{identity_map(dim), base}; }

SSet::SSet(std::vector<std::vector<std::string>> names,
           std::vector<std::vector<std::vector<Simp>>> faces)
    : names_(std::move(names)), faces_(std::move(faces)) {
  if (names_.empty() || names_[0].empty())
    throw Error("SSet: must have at least one vertex");
  while (names_.size() > 1 && names_.back().empty()) {
    names_.pop_back();
    faces_.pop_back();
  }
  if (faces_.size() != names_.size()) throw Error("SSet: names/faces mismatch");
  for (size_t d = 1; d < names_.size(); ++d) {
    if (faces_[d].size() != names_[d].size())
      throw Error("SSet: face table size mismatch");
    for (auto& fs : faces_[d]) {
      if (fs.size() != d + 1) throw Error("SSet: wrong face count");
      for (auto& f : fs) {
        if (f.dim() != static_cast<int>(d) - 1 || !f.surj.is_surjective())
          throw Error("SSet: face not normalized");
        if (f.base < 0 || f.base >= count(f.base_dim()))
          throw Error("SSet: face base out of range");
      }
    }
  }
}

int SSet::count(int d) const {
  if (d < 0 || d > dim()) return 0;
  return static_cast<int>(names_[static_cast<size_t>(d)].size());
}

int SSet::total_count() const {
  int t = 0;
  for (int d = 0; d <= dim(); ++d) t += count(d);
  return t;
}

int SSet::index_of(int d, const std::string& nm) const {
  const auto& v = names_[static_cast<size_t>(d)];
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] == nm) return static_cast<int>(i);
  throw Error("SSet: unknown simplex name " + nm);
}

const Simp& SSet::face(int d, int i, int j) const {
  return faces_[static_cast<size_t>(d)][static_cast<size_t>(i)][static_cast<size_t>(j)];
}

namespace {
// inj = coface(i) o lowered, where i is the largest missing value of inj
MonotoneMap drop_missing(const MonotoneMap& inj, int i) {
  std::vector<int> v = inj.values;
  for (int& x : v)
    if (x > i) --x;
  return MonotoneMap(inj.src, inj.dst - 1, std::move(v));
}
}  // namespace

Simp SSet::apply(const Simp& x, const MonotoneMap& f) const {
  if (f.dst != x.dim()) throw CompositionMismatch("SSet::apply: dimension mismatch");
  MonotoneMap comp = paperlab::compose(x.surj, f);
  EZFactorization ez = ez_factorize(comp);
  // apply the injection to the nondegenerate base by peeling cofaces
  Simp y = nondeg_simp(ez.injection.src, x.base);
  if (!ez.injection.is_identity()) {
    const auto miss = missing_values(ez.injection);
    int i = miss.front();
    const Simp& fi = face(comp.dst, x.base, i);
    y = apply(fi, drop_missing(ez.injection, i));
  }
  return Simp{paperlab::compose(y.surj, ez.surjection), y.base};
}

std::vector<Simp> SSet::level(int n) const {
  std::vector<Simp> out;
  for (int k = 0; k <= std::min(n, dim()); ++k) {
    for (auto& s : all_surjective(n, k))
      for (int b = 0; b < count(k); ++b) out.push_back(Simp{s, b});
  }
  return out;
}

int SSet::vertex(const Simp& x, int i) const {
  Simp v = apply(x, MonotoneMap(0, x.dim(), {i}));
  return v.base;
}

std::vector<int> SSet::f_vector() const {
  std::vector<int> out;
  for (int d = 0; d <= dim(); ++d) out.push_back(count(d));
  return out;
}

long long SSet::euler_characteristic() const {
  long long chi = 0;
  for (int d = 0; d <= dim(); ++d) chi += (d % 2 == 0 ? 1 : -1) * count(d);
  return chi;
}

std::string SSet::simp_key(const Simp& x) const {
  std::ostringstream os;
  for (size_t i = 0; i < x.surj.values.size(); ++i) {
    if (i) os << ",";
    os << x.surj.values[i];
  }
  os << ":" << x.base;
  return os.str();
}

Simp SSet::simp_from_key(int d, const std::string& key) const {
  auto colon = key.rfind(':');
  if (colon == std::string::npos) throw Error("simp_from_key: bad key");
  std::vector<int> vals;
  {
    std::istringstream is(key.substr(0, colon));
    std::string tok;
    while (std::getline(is, tok, ',')) vals.push_back(std::stoi(tok));
  }
  int base = std::stoi(key.substr(colon + 1));
  int k = vals.back();
  int src = static_cast<int>(vals.size()) - 1;
  (void)d;
  return Simp{MonotoneMap(src, k, std::move(vals)), base};
}

void SSet::audit() const {
  for (int d = 2; d <= dim(); ++d) {
    for (int s = 0; s < count(d); ++s) {
      for (int j = 1; j <= d; ++j) {
        for (int i = 0; i < j; ++i) {
          Simp a = apply(face(d, s, j), coface(i, d - 1));
          Simp b = apply(face(d, s, i), coface(j - 1, d - 1));
          if (!(a == b))
            throw Error("SSet::audit: simplicial identity failed at dim " +
                        std::to_string(d) + " simplex " + name(d, s));
        }
      }
    }
  }
}

ChainComplex SSet::chain_complex() const {
  ChainComplex cc;
  cc.dims.resize(static_cast<size_t>(dim()) + 1);
  cc.boundary.resize(static_cast<size_t>(dim()) + 1);
  for (int d = 0; d <= dim(); ++d) cc.dims[static_cast<size_t>(d)] = count(d);
  for (int d = 1; d <= dim(); ++d) {
    SparseMatrix m(count(d - 1), count(d));
    for (int s = 0; s < count(d); ++s)
      for (int j = 0; j <= d; ++j) {
        const Simp& f = face(d, s, j);
        if (f.is_nondegenerate()) m.add(f.base, s, j % 2 == 0 ? 1 : -1);
      }
    cc.boundary[static_cast<size_t>(d)] = std::move(m);
  }
  cc.validate();
  return cc;
}

HomologyResult SSet::homology() const { return chain_complex().homology(); }

bool SSet::is_homology_point() const { return homology().is_point(); }

// ---------------- SSetMap ----------------

Simp SSetMap::apply_to(const Simp& x) const {
  const Simp& im = image[static_cast<size_t>(x.base_dim())][static_cast<size_t>(x.base)];
  return Simp{paperlab::compose(im.surj, x.surj), im.base};
}

void SSetMap::validate() const {
  if (image.size() != static_cast<size_t>(src->dim()) + 1)
    throw Error("SSetMap: image table wrong size");
  for (int d = 0; d <= src->dim(); ++d) {
    if (image[static_cast<size_t>(d)].size() != static_cast<size_t>(src->count(d)))
      throw Error("SSetMap: image row wrong size");
    for (int s = 0; s < src->count(d); ++s) {
      const Simp& im = image[static_cast<size_t>(d)][static_cast<size_t>(s)];
      if (im.dim() != d) throw Error("SSetMap: image dimension mismatch");
      if (d == 0) continue;
      for (int j = 0; j <= d; ++j) {
        Simp lhs = apply_to(src->face(d, s, j));
        Simp rhs = dst->apply(im, coface(j, d));
        if (!(lhs == rhs))
          throw Error("SSetMap: does not commute with face " + std::to_string(j) +
                      " of " + src->name(d, s));
      }
    }
  }
}

bool SSetMap::is_injective() const {
  for (int d = 0; d <= src->dim(); ++d) {
    std::set<std::pair<int, int>> seen;
    for (int s = 0; s < src->count(d); ++s) {
      const Simp& im = image[static_cast<size_t>(d)][static_cast<size_t>(s)];
      if (!im.is_nondegenerate()) return false;
      if (!seen.insert({im.base_dim(), im.base}).second) return false;
    }
  }
  return true;
}

SSetMap identity_sset_map(const SSetPtr& s) {
  SSetMap m{s, s, {}};
  m.image.resize(static_cast<size_t>(s->dim()) + 1);
  for (int d = 0; d <= s->dim(); ++d)
    for (int i = 0; i < s->count(d); ++i)
      m.image[static_cast<size_t>(d)].push_back(nondeg_simp(d, i));
  return m;
}

SSetMap compose(const SSetMap& f, const SSetMap& g) {
  if (!(*f.src == *g.dst)) throw CompositionMismatch("SSetMap compose mismatch");
  SSetMap m{g.src, f.dst, {}};
  m.image.resize(static_cast<size_t>(g.src->dim()) + 1);
  for (int d = 0; d <= g.src->dim(); ++d)
    for (int i = 0; i < g.src->count(d); ++i)
      m.image[static_cast<size_t>(d)].push_back(
          f.apply_to(g.image[static_cast<size_t>(d)][static_cast<size_t>(i)]));
  return m;
}

// ---------------- standard simplices ----------------

namespace {
std::string vertex_list_name(const std::vector<int>& vals) {
  std::ostringstream os;
  for (size_t i = 0; i < vals.size(); ++i) {
    if (i) os << ".";
    os << vals[i];
  }
  return os.str();
}
}  // namespace

SSet standard_simplex(int n) {
  if (n < 0) throw Error("standard_simplex: n must be >= 0");
  std::vector<std::vector<std::string>> names(static_cast<size_t>(n) + 1);
  std::vector<std::vector<std::vector<Simp>>> faces(static_cast<size_t>(n) + 1);
  std::vector<std::map<std::vector<int>, int>> index(static_cast<size_t>(n) + 1);
  std::vector<std::vector<MonotoneMap>> injs(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    injs[static_cast<size_t>(k)] = all_injective(k, n);
    for (auto& u : injs[static_cast<size_t>(k)]) {
      index[static_cast<size_t>(k)][u.values] =
          static_cast<int>(names[static_cast<size_t>(k)].size());
      names[static_cast<size_t>(k)].push_back(vertex_list_name(u.values));
    }
  }
  for (int k = 1; k <= n; ++k) {
    for (auto& u : injs[static_cast<size_t>(k)]) {
      std::vector<Simp> fs;
      for (int j = 0; j <= k; ++j) {
        MonotoneMap v = compose(u, coface(j, k));
        fs.push_back(nondeg_simp(k - 1, index[static_cast<size_t>(k - 1)].at(v.values)));
      }
      faces[static_cast<size_t>(k)].push_back(std::move(fs));
    }
  }
  return SSet(std::move(names), std::move(faces));
}

SSetMap standard_simplex_map(const MonotoneMap& f) {
  auto src = std::make_shared<const SSet>(standard_simplex(f.src));
  auto dst = std::make_shared<const SSet>(standard_simplex(f.dst));
  SSetMap m{src, dst, {}};
  m.image.resize(static_cast<size_t>(f.src) + 1);
  for (int k = 0; k <= f.src; ++k) {
    for (int i = 0; i < src->count(k); ++i) {
      // recover the injection from the name, compose with f, normalize
      std::vector<int> vals;
      {
        std::istringstream is(src->name(k, i));
        std::string tok;
        while (std::getline(is, tok, '.')) vals.push_back(std::stoi(tok));
      }
      MonotoneMap u(k, f.src, std::move(vals));
      EZFactorization ez = ez_factorize(compose(f, u));
      int b = dst->index_of(ez.injection.src, vertex_list_name(ez.injection.values));
      m.image[static_cast<size_t>(k)].push_back(Simp{ez.surjection, b});
    }
  }
  return m;
}

// ---------------- subcomplexes ----------------

SubcomplexResult subcomplex(const SSetPtr& s, const std::vector<std::vector<bool>>& keep) {
  if (keep.size() != static_cast<size_t>(s->dim()) + 1)
    throw NotASubcomplex("subcomplex: flag table wrong size");
  std::vector<std::vector<int>> new_index(keep.size());
  std::vector<std::vector<int>> old_index(keep.size());
  for (int d = 0; d <= s->dim(); ++d) {
    new_index[static_cast<size_t>(d)].assign(static_cast<size_t>(s->count(d)), -1);
    for (int i = 0; i < s->count(d); ++i)
      if (keep[static_cast<size_t>(d)][static_cast<size_t>(i)]) {
        new_index[static_cast<size_t>(d)][static_cast<size_t>(i)] =
            static_cast<int>(old_index[static_cast<size_t>(d)].size());
        old_index[static_cast<size_t>(d)].push_back(i);
      }
  }
  // face closure
  for (int d = 1; d <= s->dim(); ++d)
    for (int oi : old_index[static_cast<size_t>(d)])
      for (int j = 0; j <= d; ++j) {
        const Simp& f = s->face(d, oi, j);
        if (new_index[static_cast<size_t>(f.base_dim())][static_cast<size_t>(f.base)] < 0)
          throw NotASubcomplex("subcomplex: flagged set not face-closed at " +
                               s->name(d, oi));
      }
  std::vector<std::vector<std::string>> names(keep.size());
  std::vector<std::vector<std::vector<Simp>>> faces(keep.size());
  for (int d = 0; d <= s->dim(); ++d) {
    for (int oi : old_index[static_cast<size_t>(d)]) {
      names[static_cast<size_t>(d)].push_back(s->name(d, oi));
      if (d >= 1) {
        std::vector<Simp> fs;
        for (int j = 0; j <= d; ++j) {
          Simp f = s->face(d, oi, j);
          f.base = new_index[static_cast<size_t>(f.base_dim())][static_cast<size_t>(f.base)];
          fs.push_back(std::move(f));
        }
        faces[static_cast<size_t>(d)].push_back(std::move(fs));
      }
    }
  }
  SubcomplexResult res;
  res.ss = SSet(std::move(names), std::move(faces));
  auto sub = std::make_shared<const SSet>(res.ss);
  res.inclusion = SSetMap{sub, s, {}};
  res.inclusion.image.resize(static_cast<size_t>(res.ss.dim()) + 1);
  for (int d = 0; d <= res.ss.dim(); ++d)
    for (int i = 0; i < res.ss.count(d); ++i)
      res.inclusion.image[static_cast<size_t>(d)].push_back(
          nondeg_simp(d, old_index[static_cast<size_t>(d)][static_cast<size_t>(i)]));
  res.old_index = std::move(old_index);
  return res;
}

SubcomplexResult boundary(int n) {
  if (n < 1)
    throw EmptyBoundary("boundary: the boundary of Delta^0 is empty and not representable");
  auto full = std::make_shared<const SSet>(standard_simplex(n));
  std::vector<std::vector<bool>> keep(static_cast<size_t>(n) + 1);
  for (int d = 0; d <= n; ++d)
    keep[static_cast<size_t>(d)].assign(static_cast<size_t>(full->count(d)), d < n);
  return subcomplex(full, keep);
}

SubcomplexResult skeleton(const SSetPtr& s, int k) {
  std::vector<std::vector<bool>> keep(static_cast<size_t>(s->dim()) + 1);
  for (int d = 0; d <= s->dim(); ++d)
    keep[static_cast<size_t>(d)].assign(static_cast<size_t>(s->count(d)), d <= k);
  return subcomplex(s, keep);
}

// ---------------- raw construction ----------------

namespace {

struct RawState {
  RawSSet raw;
  int cap = 0;
  std::vector<std::vector<std::string>> keys;                   // per level
  std::vector<std::unordered_map<std::string, int>> nondeg_idx;  // key -> index
  std::vector<std::vector<std::string>> nondeg_keys;
  std::vector<std::unordered_map<std::string, Simp>> memo;

  Simp normalize(int n, const std::string& key) {
    if (n < 0)
      throw Error("build_from_raw: normalize called at negative level");
    // above the cap every element is degenerate; peel downward on demand
    if (n >= static_cast<int>(memo.size())) memo.resize(static_cast<size_t>(n) + 1);
    auto& m = memo[static_cast<size_t>(n)];
    auto it = m.find(key);
    if (it != m.end()) return it->second;
    Simp out;
    int nondeg = -1;
    if (n <= cap) {
      auto nit = nondeg_idx[static_cast<size_t>(n)].find(key);
      if (nit != nondeg_idx[static_cast<size_t>(n)].end()) nondeg = nit->second;
    }
    if (nondeg >= 0) {
      out = nondeg_simp(n, nondeg);
    } else {
      bool found = false;
      for (int i = 0; i < n && !found; ++i) {
        std::string down = raw.face(n, i, key);
        if (raw.degen(n - 1, i, down) == key) {
          Simp z = normalize(n - 1, down);
          out = Simp{compose(z.surj, codegeneracy(i, n - 1)), z.base};
          found = true;
        }
      }
      if (!found) throw Error("build_from_raw: cannot normalize element at level " +
                              std::to_string(n));
    }
    m.emplace(key, out);
    return out;
  }
};

}  // namespace

BuiltSSet build_from_raw(const RawSSet& raw, int cap) {
  auto st = std::make_shared<RawState>();
  st->raw = raw;
  st->cap = cap;
  st->keys.resize(static_cast<size_t>(cap) + 1);
  st->nondeg_idx.resize(static_cast<size_t>(cap) + 1);
  st->nondeg_keys.resize(static_cast<size_t>(cap) + 1);
  st->memo.resize(static_cast<size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    st->keys[static_cast<size_t>(n)] = raw.level(n);
    for (auto& key : st->keys[static_cast<size_t>(n)]) {
      bool degenerate = false;
      for (int i = 0; i < n && !degenerate; ++i)
        degenerate = raw.degen(n - 1, i, raw.face(n, i, key)) == key;
      if (!degenerate) {
        st->nondeg_idx[static_cast<size_t>(n)][key] =
            static_cast<int>(st->nondeg_keys[static_cast<size_t>(n)].size());
        st->nondeg_keys[static_cast<size_t>(n)].push_back(key);
      }
    }
  }
  if (!st->nondeg_keys[static_cast<size_t>(cap)].empty())
    throw Error("build_from_raw: nondegenerate simplices at the cap level " +
                std::to_string(cap) + "; raise the cap");
  int D = 0;
  for (int n = 0; n <= cap; ++n)
    if (!st->nondeg_keys[static_cast<size_t>(n)].empty()) D = n;

  std::vector<std::vector<std::string>> names(static_cast<size_t>(D) + 1);
  std::vector<std::vector<std::vector<Simp>>> faces(static_cast<size_t>(D) + 1);
  std::set<std::string> used_names;
  for (int d = 0; d <= D; ++d) {
    for (auto& key : st->nondeg_keys[static_cast<size_t>(d)]) {
      std::string nm = raw.display ? raw.display(d, key) : key;
      std::string candidate = nm;
      int suffix = 1;
      while (!used_names.insert(candidate).second)
        candidate = nm + "#" + std::to_string(++suffix);
      names[static_cast<size_t>(d)].push_back(candidate);
      if (d >= 1) {
        std::vector<Simp> fs;
        for (int j = 0; j <= d; ++j)
          fs.push_back(st->normalize(d - 1, raw.face(d, j, key)));
        faces[static_cast<size_t>(d)].push_back(std::move(fs));
      }
    }
  }
  BuiltSSet out;
  out.ss = std::make_shared<const SSet>(SSet(std::move(names), std::move(faces)));
  out.normalize = [st](int n, const std::string& key) {
    return st->normalize(n, st->raw.canon ? st->raw.canon(n, key) : key);
  };
  out.raw_of = [st](int d, int i) -> const std::string& {
    return st->nondeg_keys[static_cast<size_t>(d)][static_cast<size_t>(i)];
  };
  return out;
}

BuiltSSet diag(const RawBiSSet& b, int cap) {
  RawSSet raw;
  raw.level = [b](int n) { return b.level(n, n); };
  raw.face = [b](int n, int i, const std::string& key) {
    return b.vface(n - 1, n, i, b.hface(n, n, i, key));
  };
  raw.degen = [b](int n, int i, const std::string& key) {
    return b.vdeg(n + 1, n, i, b.hdeg(n, n, i, key));
  };
  return build_from_raw(raw, cap);
}

// ---------------- product ----------------

ProductResult product(const SSetPtr& s, const SSetPtr& t) {
  RawSSet raw;
  raw.level = [s, t](int n) {
    std::vector<std::string> out;
    auto ls = s->level(n);
    auto lt = t->level(n);
    for (auto& x : ls)
      for (auto& y : lt) out.push_back(s->simp_key(x) + "|" + t->simp_key(y));
    return out;
  };
  auto split = [](const std::string& key) {
    auto bar = key.find('|');
    return std::pair<std::string, std::string>(key.substr(0, bar), key.substr(bar + 1));
  };
  auto componentwise = [s, t, split](int n, const MonotoneMap& op, const std::string& key) {
    auto [ks, kt] = split(key);
    Simp x = s->apply(s->simp_from_key(n, ks), op);
    Simp y = t->apply(t->simp_from_key(n, kt), op);
    return s->simp_key(x) + "|" + t->simp_key(y);
  };
  raw.face = [componentwise](int n, int i, const std::string& key) {
    return componentwise(n, coface(i, n), key);
  };
  raw.degen = [componentwise](int n, int i, const std::string& key) {
    return componentwise(n, codegeneracy(i, n), key);
  };
  raw.display = [s, t, split](int d, const std::string& key) {
    auto [ks, kt] = split(key);
    Simp x = s->simp_from_key(d, ks);
    Simp y = t->simp_from_key(d, kt);
    return "(" + s->simp_key(x) + "|" + t->simp_key(y) + ")";
  };
  BuiltSSet built = build_from_raw(raw, s->dim() + t->dim() + 1);

  ProductResult res;
  res.ss = *built.ss;
  auto prod = std::make_shared<const SSet>(res.ss);
  res.proj1 = SSetMap{prod, s, {}};
  res.proj2 = SSetMap{prod, t, {}};
  res.proj1.image.resize(static_cast<size_t>(res.ss.dim()) + 1);
  res.proj2.image.resize(static_cast<size_t>(res.ss.dim()) + 1);
  res.pairs.resize(static_cast<size_t>(res.ss.dim()) + 1);
  for (int d = 0; d <= res.ss.dim(); ++d) {
    for (int i = 0; i < res.ss.count(d); ++i) {
      const std::string& key = built.raw_of(d, i);
      auto bar = key.find('|');
      Simp x = s->simp_from_key(d, key.substr(0, bar));
      Simp y = t->simp_from_key(d, key.substr(bar + 1));
      res.proj1.image[static_cast<size_t>(d)].push_back(x);
      res.proj2.image[static_cast<size_t>(d)].push_back(y);
      res.pairs[static_cast<size_t>(d)].emplace_back(x, y);
    }
  }
  res.pair_lookup = [s, t, built](const Simp& x, const Simp& y) {
    if (x.dim() != y.dim()) throw Error("product pair_lookup: dimension mismatch");
    return built.normalize(x.dim(), s->simp_key(x) + "|" + t->simp_key(y));
  };
  return res;
}

// ---------------- pushout / quotient ----------------

PushoutResult pushout(const SSetMap& f, const SSetMap& g) {
  if (!(*f.src == *g.src))
    throw UnsupportedPushout("pushout: legs must share their source");
  if (!f.is_injective())
    throw UnsupportedPushout("pushout: the first leg must be injective");
  const SSetPtr& a = f.src;
  const SSetPtr& s = f.dst;
  const SSetPtr& t = g.dst;

  // mark the image of f inside s
  std::vector<std::vector<int>> preimage(static_cast<size_t>(s->dim()) + 1);
  for (int d = 0; d <= s->dim(); ++d)
    preimage[static_cast<size_t>(d)].assign(static_cast<size_t>(s->count(d)), -1);
  for (int d = 0; d <= a->dim(); ++d)
    for (int i = 0; i < a->count(d); ++i) {
      const Simp& im = f.image[static_cast<size_t>(d)][static_cast<size_t>(i)];
      preimage[static_cast<size_t>(d)][static_cast<size_t>(im.base)] = i;
    }

  int dd = std::max(s->dim(), t->dim());
  std::vector<std::vector<std::string>> names(static_cast<size_t>(dd) + 1);
  std::vector<std::vector<std::vector<Simp>>> faces(static_cast<size_t>(dd) + 1);
  std::vector<std::vector<int>> s_new(static_cast<size_t>(s->dim()) + 1);
  std::set<std::string> used;
  auto fresh = [&used](const std::string& nm) {
    std::string c = nm;
    int k = 1;
    while (!used.insert(c).second) c = nm + "#" + std::to_string(++k);
    return c;
  };
  // t-part first, preserving t indices
  for (int d = 0; d <= t->dim(); ++d)
    for (int i = 0; i < t->count(d); ++i)
      names[static_cast<size_t>(d)].push_back(fresh(t->name(d, i)));
  for (int d = 0; d <= s->dim(); ++d) {
    s_new[static_cast<size_t>(d)].assign(static_cast<size_t>(s->count(d)), -1);
    for (int i = 0; i < s->count(d); ++i) {
      if (preimage[static_cast<size_t>(d)][static_cast<size_t>(i)] >= 0) continue;
      s_new[static_cast<size_t>(d)][static_cast<size_t>(i)] =
          static_cast<int>(names[static_cast<size_t>(d)].size());
      names[static_cast<size_t>(d)].push_back(fresh(s->name(d, i)));
    }
  }
  // push an s-side face into the pushout
  auto push_face = [&](const Simp& fc) -> Simp {
    int bd = fc.base_dim();
    int pre = preimage[static_cast<size_t>(bd)][static_cast<size_t>(fc.base)];
    if (pre >= 0) {
      const Simp& gt = g.image[static_cast<size_t>(bd)][static_cast<size_t>(pre)];
      return Simp{compose(gt.surj, fc.surj), gt.base};
    }
    return Simp{fc.surj, s_new[static_cast<size_t>(bd)][static_cast<size_t>(fc.base)]};
  };
  for (int d = 1; d <= dd; ++d) {
    if (d <= t->dim())
      for (int i = 0; i < t->count(d); ++i) {
        std::vector<Simp> fs;
        for (int j = 0; j <= d; ++j) fs.push_back(t->face(d, i, j));
        faces[static_cast<size_t>(d)].push_back(std::move(fs));
      }
    if (d <= s->dim())
      for (int i = 0; i < s->count(d); ++i) {
        if (preimage[static_cast<size_t>(d)][static_cast<size_t>(i)] >= 0) continue;
        std::vector<Simp> fs;
        for (int j = 0; j <= d; ++j) fs.push_back(push_face(s->face(d, i, j)));
        faces[static_cast<size_t>(d)].push_back(std::move(fs));
      }
  }
  PushoutResult res;
  res.ss = SSet(std::move(names), std::move(faces));
  auto p = std::make_shared<const SSet>(res.ss);
  res.from_target_of_g = SSetMap{t, p, {}};
  res.from_target_of_g.image.resize(static_cast<size_t>(t->dim()) + 1);
  for (int d = 0; d <= t->dim(); ++d)
    for (int i = 0; i < t->count(d); ++i)
      res.from_target_of_g.image[static_cast<size_t>(d)].push_back(nondeg_simp(d, i));
  res.from_target_of_f = SSetMap{s, p, {}};
  res.from_target_of_f.image.resize(static_cast<size_t>(s->dim()) + 1);
  for (int d = 0; d <= s->dim(); ++d)
    for (int i = 0; i < s->count(d); ++i)
      res.from_target_of_f.image[static_cast<size_t>(d)].push_back(
          push_face(nondeg_simp(d, i)));
  return res;
}

SSetMap terminal_map(const SSetPtr& s, const SSetPtr& point) {
  if (point->dim() != 0 || point->count(0) != 1)
    throw Error("terminal_map: target is not a point");
  SSetMap m{s, point, {}};
  m.image.resize(static_cast<size_t>(s->dim()) + 1);
  for (int d = 0; d <= s->dim(); ++d)
    for (int i = 0; i < s->count(d); ++i)
      m.image[static_cast<size_t>(d)].push_back(
          Simp{MonotoneMap(d, 0, std::vector<int>(static_cast<size_t>(d) + 1, 0)), 0});
  return m;
}

QuotientResult quotient(const SSetPtr& s, const std::vector<std::vector<bool>>& sub) {
  bool any = false;
  for (auto& row : sub)
    for (bool b : row) any = any || b;
  if (!any)
    throw NotASubcomplex("quotient: the empty subcomplex is not representable");
  SubcomplexResult a = subcomplex(s, sub);
  auto apt = std::make_shared<const SSet>(a.ss);
  SSetMap incl = a.inclusion;
  incl.src = apt;
  auto point = std::make_shared<const SSet>(standard_simplex(0));
  SSetMap collapse = terminal_map(apt, point);
  PushoutResult p = pushout(incl, collapse);
  QuotientResult q;
  q.ss = std::move(p.ss);
  q.projection = std::move(p.from_target_of_f);
  return q;
}

// ---------------- isomorphism search ----------------

namespace {

struct IsoContext {
  const SSet* a;
  const SSet* b;
  long long budget = 5000000;
  std::vector<std::vector<int>> assign;  // per dim, a-index -> b-index

  void spend() {
    if (--budget <= 0) throw Error("sset_isomorphic: search budget exceeded");
  }

  Simp mapped(const Simp& x) const {
    return Simp{x.surj,
                assign[static_cast<size_t>(x.base_dim())][static_cast<size_t>(x.base)]};
  }

  bool faces_match(int d, int ai, int bi) const {
    for (int j = 0; j <= d; ++j) {
      if (!(mapped(a->face(d, ai, j)) == b->face(d, bi, j))) return false;
    }
    return true;
  }

  bool solve_dim(int d) {
    if (d > a->dim()) return true;
    int n = a->count(d);
    std::vector<std::vector<int>> cand(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (faces_match(d, i, j)) cand[static_cast<size_t>(i)].push_back(j);
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return cand[static_cast<size_t>(x)].size() < cand[static_cast<size_t>(y)].size();
    });
    std::vector<bool> used(static_cast<size_t>(n), false);
    auto rec = [&](auto&& self, size_t pos) -> bool {
      spend();
      if (pos == order.size()) return solve_dim(d + 1);
      int i = order[pos];
      for (int j : cand[static_cast<size_t>(i)]) {
        if (used[static_cast<size_t>(j)]) continue;
        used[static_cast<size_t>(j)] = true;
        assign[static_cast<size_t>(d)][static_cast<size_t>(i)] = j;
        if (self(self, pos + 1)) return true;
        used[static_cast<size_t>(j)] = false;
      }
      return false;
    };
    return rec(rec, 0);
  }
};

// simple vertex invariant: counts of (dim, vertex-position) incidences
std::vector<std::string> vertex_signatures(const SSet& s) {
  std::vector<std::map<std::pair<int, int>, int>> counts(
      static_cast<size_t>(s.count(0)));
  for (int d = 1; d <= s.dim(); ++d)
    for (int i = 0; i < s.count(d); ++i)
      for (int p = 0; p <= d; ++p) {
        int v = s.vertex(nondeg_simp(d, i), p);
        counts[static_cast<size_t>(v)][{d, p}]++;
      }
  std::vector<std::string> sig;
  for (auto& c : counts) {
    std::ostringstream os;
    for (auto& [k, v] : c) os << k.first << "." << k.second << ":" << v << ";";
    sig.push_back(os.str());
  }
  return sig;
}

}  // namespace

bool sset_isomorphic(const SSet& a, const SSet& b) {
  if (a.f_vector() != b.f_vector()) return false;
  IsoContext ctx;
  ctx.a = &a;
  ctx.b = &b;
  ctx.assign.resize(static_cast<size_t>(a.dim()) + 1);
  for (int d = 0; d <= a.dim(); ++d)
    ctx.assign[static_cast<size_t>(d)].assign(static_cast<size_t>(a.count(d)), -1);

  auto siga = vertex_signatures(a);
  auto sigb = vertex_signatures(b);
  {
    auto sa = siga, sb = sigb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  int nv = a.count(0);
  std::vector<bool> used(static_cast<size_t>(nv), false);
  auto rec = [&](auto&& self, int v) -> bool {
    ctx.spend();
    if (v == nv) return ctx.solve_dim(1);
    for (int w = 0; w < nv; ++w) {
      if (used[static_cast<size_t>(w)]) continue;
      if (siga[static_cast<size_t>(v)] != sigb[static_cast<size_t>(w)]) continue;
      used[static_cast<size_t>(w)] = true;
      ctx.assign[0][static_cast<size_t>(v)] = w;
      if (self(self, v + 1)) return true;
      used[static_cast<size_t>(w)] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

bool is_isomorphism(const SSetMap& m) {
  m.validate();
  if (m.src->dim() != m.dst->dim()) return false;
  for (int d = 0; d <= m.src->dim(); ++d) {
    if (m.src->count(d) != m.dst->count(d)) return false;
    std::vector<bool> hit(static_cast<size_t>(m.dst->count(d)), false);
    for (int i = 0; i < m.src->count(d); ++i) {
      const Simp& im = m.image[static_cast<size_t>(d)][static_cast<size_t>(i)];
      if (!im.is_nondegenerate()) return false;
      if (hit[static_cast<size_t>(im.base)]) return false;
      hit[static_cast<size_t>(im.base)] = true;
    }
  }
  return true;
}

}  // namespace paperlab
