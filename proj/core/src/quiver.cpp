#include "xprod/quiver.hpp"

#include <algorithm>
#include <map>

#include "xprod/errors.hpp"

namespace xprod {

uint32_t BoundQuiver::path_source(const Path& p) const { return arrows[p.front()].src; }

uint32_t BoundQuiver::path_target(const Path& p) const { return arrows[p.back()].dst; }

bool BoundQuiver::path_valid(const Path& p) const {
  if (p.empty()) return false;
  for (uint32_t a : p)
    if (a >= arrows.size()) return false;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (arrows[p[i]].dst != arrows[p[i + 1]].src) return false;
  return true;
}

namespace {

struct Layer {
  std::vector<Path> paths;                // all valid paths of this length, lex order
  std::map<Path, size_t> index;           // path -> position in `paths`
  std::vector<size_t> kept;               // indices of surviving (non-pivot) paths
  std::vector<size_t> basis_of;           // per kept path: global basis index
  // per path: reduction to kept paths of the same length (coords over kept)
  std::vector<Vec> reduce;
};

}  // namespace

PathAlgebra path_algebra(const BoundQuiver& q, size_t length_cap) {
  const Field& f = q.field;
  const size_t nv = q.vertices.size();
  if (nv == 0) throw ValidationError("quiver needs at least one vertex");
  for (const auto& a : q.arrows)
    if (a.src >= nv || a.dst >= nv) throw ValidationError("arrow endpoint out of range");

  // Admissibility of the relations: valid parallel paths of one common
  // length >= 2.  (Mixed-length combinations can leave the ideal
  // non-admissible, so they are rejected rather than interpreted.)
  for (size_t r = 0; r < q.relations.size(); ++r) {
    const auto& rel = q.relations[r];
    if (rel.terms.empty()) throw InhomogeneousRelation(r, "empty relation");
    size_t len = rel.terms[0].second.size();
    if (!q.path_valid(rel.terms[0].second)) throw InhomogeneousRelation(r, "invalid path");
    uint32_t src = q.path_source(rel.terms[0].second);
    uint32_t dst = q.path_target(rel.terms[0].second);
    for (const auto& [c, p] : rel.terms) {
      if (!q.path_valid(p)) throw InhomogeneousRelation(r, "invalid path");
      if (p.size() < 2) throw InhomogeneousRelation(r, "path of length < 2");
      if (p.size() != len) throw InhomogeneousRelation(r, "paths of differing lengths");
      if (q.path_source(p) != src || q.path_target(p) != dst)
        throw InhomogeneousRelation(r, "paths with differing endpoints");
      check_same_field(f, c.field());
    }
  }

  std::vector<Layer> layers;  // layers[L] for L >= 1
  size_t basis_count = nv;

  // Length-1 layer: the arrows themselves (relations start at length 2).
  auto enumerate_next = [&](size_t L) {
    Layer layer;
    if (L == 1) {
      for (uint32_t a = 0; a < q.arrows.size(); ++a) layer.paths.push_back({a});
    } else {
      const Layer& prev = layers[L - 2];
      for (const Path& p : prev.paths)
        for (uint32_t a = 0; a < q.arrows.size(); ++a)
          if (q.arrows[p.back()].dst == q.arrows[a].src) {
            Path np = p;
            np.push_back(a);
            layer.paths.push_back(np);
          }
      std::sort(layer.paths.begin(), layer.paths.end());
    }
    for (size_t i = 0; i < layer.paths.size(); ++i) layer.index[layer.paths[i]] = i;
    return layer;
  };

  for (size_t L = 1;; ++L) {
    if (L > length_cap)
      throw InfiniteDimensional("no vanishing layer up to length " + std::to_string(length_cap));
    Layer layer = enumerate_next(L);
    if (layer.paths.empty()) break;

    // Ideal component at this length: u * r * w with matching lengths.
    std::vector<Vec> gens;
    for (const auto& rel : q.relations) {
      size_t lr = rel.terms[0].second.size();
      if (lr > L) continue;
      uint32_t rsrc = q.path_source(rel.terms[0].second);
      uint32_t rdst = q.path_target(rel.terms[0].second);
      for (size_t lw = 0; lw + lr <= L; ++lw) {
        size_t lu = L - lr - lw;
        // left-of-w paths (applied first), then the relation, then u.
        std::vector<std::pair<Path, bool>> ws, us;  // bool: is vertex path
        if (lw == 0)
          ws.push_back({{}, true});
        else
          for (const Path& p : layers[lw - 1].paths)
            if (q.path_target(p) == rsrc) ws.push_back({p, false});
        if (lu == 0)
          us.push_back({{}, true});
        else
          for (const Path& p : layers[lu - 1].paths)
            if (q.path_source(p) == rdst) us.push_back({p, false});
        for (const auto& [w, wv] : ws)
          for (const auto& [u, uv] : us) {
            Vec g = zero_vec(f, layer.paths.size());
            bool any = false;
            for (const auto& [c, pr] : rel.terms) {
              Path comp = w;
              comp.insert(comp.end(), pr.begin(), pr.end());
              comp.insert(comp.end(), u.begin(), u.end());
              auto it = layer.index.find(comp);
              if (it == layer.index.end()) continue;  // prefix died earlier; composite is 0
              g[it->second] += c;
              any = true;
            }
            if (any && !vec_is_zero(g)) gens.push_back(g);
          }
      }
    }

    // Rows = generators; pivots are the eliminated paths.
    std::vector<bool> pivot(layer.paths.size(), false);
    std::vector<Vec> pivot_expr(layer.paths.size());
    if (!gens.empty()) {
      Matrix gm(f, gens.size(), layer.paths.size());
      for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < layer.paths.size(); ++j) gm.at(i, j) = gens[i][j];
      RrefForm rr = gm.rref();
      for (size_t i = 0; i < rr.pivots.size(); ++i) {
        size_t pc = rr.pivots[i];
        pivot[pc] = true;
        pivot_expr[pc] = rr.m.row_vec(i);
      }
    }
    for (size_t j = 0; j < layer.paths.size(); ++j)
      if (!pivot[j]) layer.kept.push_back(j);

    // reduce[j]: coordinates over kept paths of this layer.
    std::vector<size_t> kept_pos(layer.paths.size(), SIZE_MAX);
    for (size_t t = 0; t < layer.kept.size(); ++t) kept_pos[layer.kept[t]] = t;
    layer.reduce.assign(layer.paths.size(), Vec());
    for (size_t j = 0; j < layer.paths.size(); ++j) {
      Vec v = zero_vec(f, layer.kept.size());
      if (!pivot[j]) {
        v[kept_pos[j]] = Scalar::one(f);
      } else {
        for (size_t t = 0; t < layer.kept.size(); ++t) {
          size_t col = layer.kept[t];
          if (!pivot_expr[j][col].is_zero()) v[t] = -pivot_expr[j][col];
        }
      }
      layer.reduce[j] = v;
    }

    for (size_t t = 0; t < layer.kept.size(); ++t) layer.basis_of.push_back(basis_count++);
    bool done = layer.kept.empty();
    layers.push_back(std::move(layer));
    if (done) break;
  }

  // Global basis: vertices then kept paths by layer.
  const size_t dim = basis_count;
  std::vector<Path> basis_paths(dim);
  std::vector<uint32_t> basis_src(dim), basis_tgt(dim), basis_len(dim);
  for (uint32_t v = 0; v < nv; ++v) {
    basis_paths[v] = {};
    basis_src[v] = basis_tgt[v] = v;
    basis_len[v] = 0;
  }
  for (size_t L = 0; L < layers.size(); ++L)
    for (size_t t = 0; t < layers[L].kept.size(); ++t) {
      size_t bi = layers[L].basis_of[t];
      const Path& p = layers[L].paths[layers[L].kept[t]];
      basis_paths[bi] = p;
      basis_src[bi] = q.path_source(p);
      basis_tgt[bi] = q.path_target(p);
      basis_len[bi] = uint32_t(L + 1);
    }

  // Class of an arbitrary path written over the global basis.
  auto reduce_to_basis = [&](const Path& p) {
    Vec out = zero_vec(f, dim);
    size_t L = p.size();
    if (L == 0) throw Error("internal: vertex paths are basis elements");
    if (L > layers.size()) return out;
    const Layer& layer = layers[L - 1];
    auto it = layer.index.find(p);
    if (it == layer.index.end()) return out;
    const Vec& r = layer.reduce[it->second];
    for (size_t t = 0; t < layer.kept.size(); ++t)
      if (!r[t].is_zero()) out[layer.basis_of[t]] = r[t];
    return out;
  };

  std::vector<FDAlgebra::Quad> quads;
  auto emit = [&](uint32_t i, uint32_t j, const Vec& v) {
    for (uint32_t k = 0; k < dim; ++k)
      if (!v[k].is_zero()) quads.push_back({i, j, k, v[k]});
  };
  for (uint32_t i = 0; i < dim; ++i)
    for (uint32_t j = 0; j < dim; ++j) {
      // p_i * p_j = "p_j then p_i"; defined when target(p_j) == source(p_i).
      if (basis_tgt[j] != basis_src[i]) continue;
      if (basis_len[i] == 0 && basis_len[j] == 0) {
        if (i == j) quads.push_back({i, j, i, Scalar::one(f)});
        continue;
      }
      if (basis_len[i] == 0) {
        quads.push_back({i, j, j, Scalar::one(f)});
        continue;
      }
      if (basis_len[j] == 0) {
        quads.push_back({i, j, i, Scalar::one(f)});
        continue;
      }
      Path comp = basis_paths[j];
      comp.insert(comp.end(), basis_paths[i].begin(), basis_paths[i].end());
      emit(i, j, reduce_to_basis(comp));
    }

  Vec one = zero_vec(f, dim);
  for (uint32_t v = 0; v < nv; ++v) one[v] = Scalar::one(f);

  PathAlgebra pa;
  pa.alg = FDAlgebra::from_structure_constants(f, dim, quads, one);
  pa.quiver = q;
  for (uint32_t v = 0; v < nv; ++v)
    pa.vertex_idempotents.elems.push_back(algebra_element(pa.alg, unit_vec(f, dim, v)));
  {
    Matrix pos(f, dim, dim - nv);
    for (uint32_t k = nv; k < dim; ++k) pos.at(k, k - nv) = Scalar::one(f);
    pa.arrow_radical = Subspace::from_spanning(pos);
  }
  pa.basis_paths = basis_paths;
  return pa;
}

Vec PathAlgebra::reduce_path(const Path& p) const {
  if (!quiver.path_valid(p)) throw ValidationError("invalid path");
  Vec acc = unit_vec(alg->field(), alg->dim(), quiver.arrows[p[0]].src);
  // multiply arrow classes one at a time, later arrows acting on the left
  for (uint32_t a : p) {
    size_t ai = quiver.vertices.size() + a;  // arrows survive: admissible relations
    acc = alg->multiply(unit_vec(alg->field(), alg->dim(), ai), acc);
  }
  return acc;
}

std::string PathAlgebra::path_name(size_t basis_index) const {
  const Path& p = basis_paths[basis_index];
  if (p.empty()) return "e_" + quiver.vertices[basis_index];
  std::string s;
  for (size_t i = p.size(); i-- > 0;) {
    s += quiver.arrows[p[i]].name;
    if (i) s += "*";
  }
  return s;
}

Matrix symmetry_to_automorphism(const PathAlgebra& pa, const QuiverSymmetry& s) {
  const BoundQuiver& q = pa.quiver;
  if (s.vertex_perm.size() != q.vertices.size() || s.arrow_perm.size() != q.arrows.size())
    throw ValidationError("symmetry permutation sizes do not match the quiver");
  for (uint32_t a = 0; a < q.arrows.size(); ++a) {
    uint32_t ia = s.arrow_perm[a];
    if (ia >= q.arrows.size()) throw ValidationError("arrow permutation out of range");
    if (q.arrows[ia].src != s.vertex_perm[q.arrows[a].src] ||
        q.arrows[ia].dst != s.vertex_perm[q.arrows[a].dst])
      throw ValidationError("arrow permutation incompatible with vertex permutation");
  }

  // Relations must land in the ideal: the mapped combination reduces to 0.
  for (size_t r = 0; r < q.relations.size(); ++r) {
    Vec img = zero_vec(q.field, pa.alg->dim());
    for (const auto& [c, p] : q.relations[r].terms) {
      Path mp(p.size());
      for (size_t i = 0; i < p.size(); ++i) mp[i] = s.arrow_perm[p[i]];
      img = vec_add(img, vec_scale(c, pa.reduce_path(mp)));
    }
    if (!vec_is_zero(img)) throw RelationsNotPreserved(r);
  }

  const size_t dim = pa.alg->dim(), nv = q.vertices.size();
  Matrix m(q.field, dim, dim);
  for (size_t b = 0; b < dim; ++b) {
    if (b < nv) {
      m.at(s.vertex_perm[b], b) = Scalar::one(q.field);
      continue;
    }
    const Path& p = pa.basis_paths[b];
    Path mp(p.size());
    for (size_t i = 0; i < p.size(); ++i) mp[i] = s.arrow_perm[p[i]];
    m.set_col(b, pa.reduce_path(mp));
  }
  if (!is_algebra_automorphism(*pa.alg, m))
    throw Error("internal: induced symmetry map is not an automorphism");
  return m;
}

}  // namespace xprod
