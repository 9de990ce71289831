#include "hexorb/spanning.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hexorb {
namespace {

[[noreturn]] void internal(const std::string& what) { throw Error(ErrorKind::kInternal, what); }

// Membership mask; throws on out-of-range or repeated vertices.
std::vector<char> mask_of(const RotationSystem& r, const std::vector<int>& vs, bool* dup = nullptr) {
  std::vector<char> in(r.vertex_count(), 0);
  if (dup) *dup = false;
  for (int v : vs) {
    if (v < 0 || v >= r.vertex_count()) throw Error(ErrorKind::kBadInput, "vertex out of range");
    if (in[v] && dup) *dup = true;
    in[v] = 1;
  }
  return in;
}

// Edges of R with both ends inside the mask (parallel edges counted).
int induced_edge_count(const RotationSystem& r, const std::vector<char>& in) {
  int n = 0;
  for (const auto& e : r.edges()) n += in[e.u] && in[e.v];
  return n;
}

// Connected components of the subgraph induced by `in`.
std::vector<std::vector<int>> induced_components(const RotationSystem& r,
                                                 const std::vector<char>& in) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(r.vertex_count(), 0);
  for (int s = 0; s < r.vertex_count(); ++s) {
    if (!in[s] || seen[s]) continue;
    out.emplace_back();
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (Dart d : r.rotation(v)) {
        const int w = r.target(d);
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool induces_tree(const RotationSystem& r, const std::vector<char>& in, int order) {
  if (order == 0) return false;
  return induced_edge_count(r, in) == order - 1 && induced_components(r, in).size() == 1;
}

// Distinct neighbours of v inside the mask.
std::vector<int> inner_neighbours(const RotationSystem& r, const std::vector<char>& in, int v) {
  std::vector<int> out;
  for (Dart d : r.rotation(v)) {
    const int w = r.target(d);
    if (in[w] && std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  return out;
}

// The vertices of an induced path component in order from its smaller end.
std::vector<int> order_path(const RotationSystem& r, const std::vector<int>& comp) {
  const auto in = mask_of(r, comp);
  int start = -1;
  for (int v : comp) {
    if (inner_neighbours(r, in, v).size() <= 1) {
      start = v;
      break;
    }
  }
  if (start < 0) return {};
  std::vector<int> out{start};
  int prev = -1, cur = start;
  for (;;) {
    int nxt = -1;
    for (int w : inner_neighbours(r, in, cur)) {
      if (w != prev) nxt = w;
    }
    if (nxt < 0 || static_cast<int>(out.size()) >= static_cast<int>(comp.size())) break;
    out.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  return out;
}

bool is_path_component(const RotationSystem& r, const std::vector<int>& comp) {
  const auto in = mask_of(r, comp);
  if (induced_edge_count(r, in) != static_cast<int>(comp.size()) - 1) return false;
  for (int v : comp) {
    if (inner_neighbours(r, in, v).size() > 2) return false;
  }
  return induced_components(r, in).size() == 1;
}

Verdict fail(std::string why) { return {false, std::move(why)}; }

}  // namespace

// -- bonds -------------------------------------------------------------------

bool is_hamilton_bond(const RotationSystem& r, const Bipartition& p) {
  const int n = r.vertex_count();
  if (p.side_a.empty() || p.side_b.empty()) {
    throw Error(ErrorKind::kBadInput, "both sides of a bipartition must be non-empty");
  }
  if (static_cast<int>(p.side_a.size() + p.side_b.size()) != n) {
    throw Error(ErrorKind::kBadInput, "bipartition does not cover the vertex set exactly");
  }
  std::vector<int> all(p.side_a);
  all.insert(all.end(), p.side_b.begin(), p.side_b.end());
  bool dup = false;
  mask_of(r, all, &dup);
  if (dup) throw Error(ErrorKind::kBadInput, "bipartition sides overlap");
  const auto a = mask_of(r, p.side_a), b = mask_of(r, p.side_b);
  return induces_tree(r, a, static_cast<int>(p.side_a.size())) &&
         induces_tree(r, b, static_cast<int>(p.side_b.size()));
}

void enumerate_hamilton_bonds(const RotationSystem& r,
                              const std::function<bool(const Bipartition&)>& visit, int limit) {
  const int n = r.vertex_count();
  if (n > limit) {
    throw Error(ErrorKind::kPrecondition, "bond enumeration is limited to " +
                                              std::to_string(limit) + " vertices, graph has " +
                                              std::to_string(n));
  }
  if (n < 2 || !is_connected(r)) return;

  // state: 0 = undecided, 1 = in the tree, 2 = excluded
  std::vector<int> state(n, 0);
  std::vector<int> tree_links(n, 0);  // edges into the tree, with multiplicity
  int tree_size = 0;
  bool stop = false;

  auto add = [&](int v, int delta) {
    tree_size += delta;
    for (Dart d : r.rotation(v)) tree_links[r.target(d)] += delta;
  };

  auto emit = [&] {
    if (tree_size == n) return;
    std::vector<char> out(n, 0);
    Bipartition p;
    for (int v = 0; v < n; ++v) {
      if (state[v] == 1) {
        p.side_a.push_back(v);
      } else {
        p.side_b.push_back(v);
        out[v] = 1;
      }
    }
    if (induces_tree(r, out, static_cast<int>(p.side_b.size()))) stop = !visit(p);
  };

  std::function<void()> grow = [&] {
    if (stop) return;
    int frontier = -1;
    for (int v = 0; v < n; ++v) {
      if (state[v] == 0 && tree_links[v] > 0) {
        frontier = v;
        break;
      }
    }
    if (frontier < 0) {
      emit();
      return;
    }
    if (tree_links[frontier] == 1) {
      state[frontier] = 1;
      add(frontier, 1);
      grow();
      add(frontier, -1);
    }
    state[frontier] = 2;
    grow();
    state[frontier] = 0;
  };

  state[0] = 1;
  add(0, 1);
  grow();
}

std::vector<Bipartition> hamilton_bonds(const RotationSystem& r, int limit) {
  std::vector<Bipartition> out;
  enumerate_hamilton_bonds(
      r,
      [&](const Bipartition& p) {
        out.push_back(p);
        return true;
      },
      limit);
  return out;
}

int DegreeCensus::total() const {
  int t = 0;
  for (const auto& [deg, c] : counts) t += c;
  return t;
}

long DegreeCensus::weighted() const {
  long w = 0;
  for (const auto& [deg, c] : counts) w += static_cast<long>(deg - 2) * c;
  return w;
}

bool EndTreeCensus::balanced_P() const {
  auto threes = [](const DegreeCensus& c) {
    const auto it = c.counts.find(3);
    return it == c.counts.end() ? 0 : it->second;
  };
  return a.counts == b.counts && threes(a) == 2 && threes(b) == 2;
}

bool EndTreeCensus::within_3() const { return std::abs(a.total() - b.total()) <= 3; }

bool EndTreeCensus::weighted_degrees_equal() const { return a.weighted() == b.weighted(); }

EndTreeCensus end_tree_census(const RotationSystem& r, const Bipartition& p) {
  if (!is_hamilton_bond(r, p)) {
    throw Error(ErrorKind::kPrecondition, "bipartition is not a Hamilton bond");
  }
  EndTreeCensus c;
  for (int v : p.side_a) ++c.a.counts[r.degree(v)];
  for (int v : p.side_b) ++c.b.counts[r.degree(v)];
  return c;
}

Int window_pow2(Int a, Int b, Int m) {
  if (m < 3 || a < 0 || a > b || b > m) {
    throw Error(ErrorKind::kPrecondition, "window_pow2 needs m ≥ 3 and 0 ≤ a ≤ b ≤ m");
  }
  Int best = -1;
  for (Int p = 1; p <= m; p *= 2) {
    for (Int v : {p, m - p}) {
      if (a <= v && v <= b && (best < 0 || v < best)) best = v;
    }
  }
  if (best < 0) {
    throw Error(ErrorKind::kPrecondition, "no power of two or its complement lies in [" +
                                              std::to_string(a) + ", " + std::to_string(b) +
                                              "]");
  }
  return best;
}

// -- certificates ------------------------------------------------------------

Verdict verify_certificate(const RotationSystem& r, const CaterpillarCertificate& c) {
  const int n = r.vertex_count();
  auto in_range = [n](const std::vector<int>& vs) {
    return std::all_of(vs.begin(), vs.end(), [n](int v) { return v >= 0 && v < n; });
  };
  if (c.vertices.empty()) return fail("empty-tree");
  if (!in_range(c.vertices) || !in_range(c.spine)) return fail("vertex-out-of-range");
  for (const auto& leg : c.legs) {
    if (!in_range(leg)) return fail("vertex-out-of-range");
  }
  bool dup = false;
  const auto tree = mask_of(r, c.vertices, &dup);
  if (dup) return fail("repeated-vertex");
  if (!induces_tree(r, tree, static_cast<int>(c.vertices.size()))) return fail("not-induced-tree");

  if (c.spine.empty()) return fail("empty-spine");
  const auto spine = mask_of(r, c.spine, &dup);
  if (dup) return fail("spine-repeats-vertex");
  for (int v : c.spine) {
    if (!tree[v]) return fail("spine-outside-tree");
  }
  if (!is_path_component(r, c.spine)) return fail("spine-not-induced-path");
  for (size_t i = 0; i + 1 < c.spine.size(); ++i) {
    const auto nb = inner_neighbours(r, spine, c.spine[i]);
    if (std::find(nb.begin(), nb.end(), c.spine[i + 1]) == nb.end()) {
      return fail("spine-order-broken");
    }
  }

  std::vector<char> rest(n, 0);
  for (int v = 0; v < n; ++v) rest[v] = tree[v] && !spine[v];
  auto comps = induced_components(r, rest);
  std::vector<std::vector<int>> legs;
  for (const auto& leg : c.legs) {
    auto sorted = leg;
    std::sort(sorted.begin(), sorted.end());
    legs.push_back(sorted);
  }
  std::sort(comps.begin(), comps.end());
  std::sort(legs.begin(), legs.end());
  if (comps != legs) return fail("legs-differ-from-components");
  if (c.legs.empty()) {
    if (c.leg_order != 0) return fail("leg-order-without-legs");
    return {};
  }
  for (const auto& leg : c.legs) {
    if (static_cast<int>(leg.size()) != c.leg_order) return fail("leg-order-mismatch");
    if (!is_path_component(r, leg)) return fail("leg-not-path");
    const auto lm = mask_of(r, leg);
    for (size_t i = 0; i + 1 < leg.size(); ++i) {
      const auto nb = inner_neighbours(r, lm, leg[i]);
      if (std::find(nb.begin(), nb.end(), leg[i + 1]) == nb.end()) return fail("leg-order-broken");
    }
  }
  if (c.leg_order % 2 != 0) return fail("odd-leg-order");
  return {};
}

Verdict verify_certificate(const RotationSystem& r, const PathCertificate& c) {
  const int n = r.vertex_count();
  if (c.vertices.empty()) return fail("empty-path");
  for (int v : c.vertices) {
    if (v < 0 || v >= n) return fail("vertex-out-of-range");
  }
  bool dup = false;
  const auto in = mask_of(r, c.vertices, &dup);
  if (dup) return fail("repeated-vertex");
  for (size_t i = 0; i + 1 < c.vertices.size(); ++i) {
    const auto nb = inner_neighbours(r, in, c.vertices[i]);
    if (std::find(nb.begin(), nb.end(), c.vertices[i + 1]) == nb.end()) {
      return fail("consecutive-not-adjacent");
    }
  }
  if (induced_edge_count(r, in) != static_cast<int>(c.vertices.size()) - 1) {
    return fail("not-induced");
  }
  return {};
}

TwoColoring equitable_two_coloring(const RotationSystem& r, const std::vector<int>& vertices) {
  bool dup = false;
  const auto in = mask_of(r, vertices, &dup);
  if (dup || !induces_tree(r, in, static_cast<int>(vertices.size()))) {
    throw Error(ErrorKind::kBadInput, "vertex set does not induce a tree");
  }
  std::vector<int> colour(r.vertex_count(), -1);
  std::vector<int> stack{vertices.front()};
  colour[vertices.front()] = 0;
  int count[2] = {0, 0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++count[colour[v]];
    for (int w : inner_neighbours(r, in, v)) {
      if (colour[w] < 0) {
        colour[w] = 1 - colour[v];
        stack.push_back(w);
      }
    }
  }
  TwoColoring t;
  t.larger = std::max(count[0], count[1]);
  t.smaller = std::min(count[0], count[1]);
  t.equitable = t.larger - t.smaller <= 1;
  return t;
}

CaterpillarCertificate even_caterpillar_certificate(const RotationSystem& r,
                                                    const std::vector<int>& vertices) {
  bool dup = false;
  const auto in = mask_of(r, vertices, &dup);
  if (dup || !induces_tree(r, in, static_cast<int>(vertices.size()))) {
    internal("caterpillar candidate does not induce a tree");
  }
  std::vector<int> vs(vertices);
  std::sort(vs.begin(), vs.end());
  const int n = r.vertex_count();

  std::vector<std::vector<int>> nb(n);
  for (int v : vs) nb[v] = inner_neighbours(r, in, v);

  // Try the tree path between every pair of ends as the spine.
  for (int a : vs) {
    std::vector<int> parent(n, -2);
    std::vector<int> queue{a};
    parent[a] = -1;
    for (size_t h = 0; h < queue.size(); ++h) {
      for (int w : nb[queue[h]]) {
        if (parent[w] == -2) {
          parent[w] = queue[h];
          queue.push_back(w);
        }
      }
    }
    for (int b : vs) {
      if (b < a) continue;
      std::vector<int> spine;
      for (int x = b; x != -1; x = parent[x]) spine.push_back(x);
      std::reverse(spine.begin(), spine.end());
      std::vector<char> rest(in);
      for (int x : spine) rest[x] = 0;
      const auto comps = induced_components(r, rest);
      bool ok = true;
      for (const auto& c : comps) {
        if (c.size() != comps.front().size() || c.size() % 2 != 0 || !is_path_component(r, c)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      CaterpillarCertificate cert;
      cert.vertices = vs;
      cert.spine = spine;
      for (const auto& c : comps) cert.legs.push_back(order_path(r, c));
      cert.leg_order = comps.empty() ? 0 : static_cast<int>(comps.front().size());
      return cert;
    }
  }
  internal("induced tree of order " + std::to_string(vs.size()) + " is not an even caterpillar");
}

// -- constructions -----------------------------------------------------------

namespace {

struct Slot {
  int layer = 0;
  int p = 0;
};

// One slot per vertex.
std::vector<Slot> slot_table(const LayeredDrawing& d) {
  std::vector<Slot> out(d.system.vertex_count());
  for (int i = d.k; i >= 0; --i) {
    for (int p = d.slots() - 1; p >= 0; --p) out[d.vertex(i, p)] = {i, p};
  }
  return out;
}

int measured_s_plus(const LayeredDrawing& d) {
  const Factorization f = factorize(d.system);
  return s_walk(d.system, f, d.anchor_class, Sign::kPlus);
}

std::vector<int> complement(int n, const std::vector<char>& in) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

std::vector<int> members(const std::vector<char>& in) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(in.size()); ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

// T and S of the two-layer case.
std::pair<std::vector<int>, std::vector<int>> two_layer_sets(const LayeredDrawing& d) {
  const int m = d.m, two_m = d.slots();
  const int n = d.system.vertex_count();
  const int s = measured_s_plus(d);
  auto v_at = [&](int i) { return d.vertex(0, -i); };
  auto t_at = [&](int i) { return d.vertex(1, -i - 1); };
  std::vector<char> in(n, 0);

  if (s == m - 1) {
    in[v_at(0)] = 1;
    for (int i = 0; i <= two_m - 2; ++i) in[t_at(i)] = 1;
    const int a = t_at(two_m - 1), b = t_at(0);
    int u = -1;
    for (int p = 0; p < two_m; ++p) {
      const int w = d.vertex(2, p);
      if (d.system.degree(w) != 3) continue;
      bool to_a = false, to_b = false;
      for (Dart x : d.system.rotation(w)) {
        to_a |= d.system.target(x) == a;
        to_b |= d.system.target(x) == b;
      }
      if (to_a && to_b) u = w;
    }
    if (u < 0) internal("no outer end adjacent to both cycle ends");
    in[u] = 1;
    return {members(in), complement(n, in)};
  }

  const int dd = static_cast<int>(std::gcd(s + 1, m));
  // The cycle folded onto a path: t_i and t_{2m-i} coincide.
  const LayeredDrawing hg = layered_drawing(1, m, -1, d.outer_fold);
  const Factorization fg = factorize(hg.system);
  const auto hslots = slot_table(hg);
  const PathWalk walk = walk_path(hg.system, fg, hg.vertex(0, -1), hg.anchor_class - 1);

  std::vector<int> index_set;
  for (int v : walk.vertices) {
    const Slot sl = hslots[v];
    if (sl.layer == 0) {
      const int i = d.wrap(-1 - sl.p);
      index_set.push_back(std::min(i, two_m - i));
    } else {
      in[d.vertex(2, sl.p)] = 1;
    }
  }
  for (int i : index_set) {
    in[v_at(i)] = 1;
    in[t_at(i)] = 1;
    in[t_at(two_m - i)] = 1;
    for (int j = 1; j <= 2 * dd - 2; ++j) {
      in[t_at(i + j)] = 1;
      if (i != 0 && i != m) in[t_at(two_m - i + j)] = 1;
    }
  }

  // T meets the cycle in paths of order 2d-1 and S meets it in isolated vertices.
  for (int p = 0; p < two_m; ++p) {
    if (!in[d.vertex(1, p)] && !in[d.vertex(1, p + 1)]) {
      internal("two adjacent cycle vertices left outside the caterpillar");
    }
    if (in[d.vertex(1, p)] && !in[d.vertex(1, p + 1)]) {
      int run = 0;
      for (int q = p; in[d.vertex(1, q)] && run <= two_m; --q) ++run;
      if (run != 2 * dd - 1) internal("cycle run of the caterpillar has the wrong order");
    }
  }
  return {members(in), complement(n, in)};
}

}  // namespace

namespace detail {

std::pair<std::vector<int>, std::vector<int>> even_caterpillar_sets(const LayeredDrawing& d) {
  if (d.k % 2 != 0) internal("caterpillar construction needs an even layer count");
  if (d.inner_fold != 0) internal("caterpillar construction needs inner fold 0");
  if (d.k == 2) return two_layer_sets(d);

  // Identify layer k-1 onto layer k-3 and drop layer k-2.
  const int kx = d.k - 3;
  const LayeredDrawing h = layered_drawing(d.k - 2, d.m, 0, d.outer_fold + 1);
  const auto [th, sh] = even_caterpillar_sets(h);
  const auto in_t = mask_of(h.system, th);
  const auto hslots = slot_table(h);

  const int n = d.system.vertex_count();
  std::vector<char> in(n, 0);
  for (int v = 0; v < h.system.vertex_count(); ++v) {
    const Slot sl = hslots[v];
    if (sl.layer == kx) continue;
    if (!in_t[v]) continue;
    if (sl.layer < kx) {
      in[d.vertex(sl.layer, sl.p)] = 1;
    } else {
      in[d.vertex(sl.layer + 2, sl.p - 1)] = 1;
    }
  }
  for (int p = 0; p < d.slots(); ++p) {
    const bool t = in_t[h.vertex(kx, p)];
    in[d.vertex(kx, p)] = t;
    in[d.vertex(kx + 2, p - 1)] = t;
    in[d.vertex(kx + 1, p - 1)] = !t;
  }
  return {members(in), complement(n, in)};
}

std::pair<std::vector<int>, std::vector<int>> induced_path_sequences(const LayeredDrawing& d) {
  if (d.inner_fold != 0) internal("path construction needs inner fold 0");
  const Factorization f = factorize(d.system);
  const int big_k = d.k, big_m = d.m;
  if (big_m == 1 || big_k == 1) {
    const auto cc = class_components(d.system, f, big_m == 1 ? d.anchor_class + 1 : d.anchor_class);
    return {cc.paths[0], cc.paths[1]};
  }
  const int s = s_walk(d.system, f, d.anchor_class, Sign::kPlus);
  const Int lo = std::max(s, 1), hi = std::min(s + big_k, big_m) - 1;
  // M is odd, so the chosen offset is coprime to M.
  const int l = static_cast<int>(window_pow2(lo, hi, big_m)) - s;

  // Drop layers below l; layer l becomes the inner path folded at slot 0.
  const LayeredDrawing h = layered_drawing(big_k - l, big_m, 0, d.outer_fold);
  const Factorization fh = factorize(h.system);
  const auto cc = class_components(h.system, fh, h.anchor_class + 1);
  if (cc.K != 1) internal("contracted member has more than two class paths");
  const auto hslots = slot_table(h);

  // Slot of layer 0 at which a class edge of the contracted member lands.
  std::vector<int> lands(h.system.edge_count(), -1);
  for (int p = 0; p < h.slots(); ++p) lands[h.down_next_edge(1, p)] = h.wrap(p + 1);

  auto fibre = [&](int x) {
    std::vector<int> out;
    for (int j = l; j >= 0; --j) out.push_back(d.vertex(j, x));
    if (d.wrap(x) != d.wrap(-x)) {
      for (int j = 1; j <= l; ++j) out.push_back(d.vertex(j, -x));
    }
    return out;
  };

  auto expand = [&](int which) {
    const auto& vs = cc.paths[which];
    const auto& es = cc.path_edges[which];
    std::vector<int> out;
    for (size_t t = 0; t < vs.size(); ++t) {
      const Slot sl = hslots[vs[t]];
      if (sl.layer != 0) {
        out.push_back(d.vertex(sl.layer + l, sl.p));
        continue;
      }
      if (l == 0) {
        out.push_back(d.vertex(0, sl.p));
        continue;
      }
      const int x_in = t > 0 ? lands[es[t - 1]] : -1;
      const int x_out = t < es.size() ? lands[es[t]] : -1;
      if (x_in >= 0 && x_out >= 0 && d.wrap(x_out) != d.wrap(-x_in)) {
        internal("class path does not cross a folded vertex");
      }
      if (x_in >= 0) {
        const auto fb = fibre(x_in);
        out.insert(out.end(), fb.begin(), fb.end());
      } else {
        auto fb = fibre(x_out);
        out.insert(out.end(), fb.rbegin(), fb.rend());
      }
    }
    return out;
  };
  return {expand(0), expand(1)};
}

}  // namespace detail

namespace {

// A drawing for class q of R with a vertex map into R.
std::pair<LayeredDrawing, std::vector<int>> drawing_for(const LayeredDrawing& d,
                                                        const IndexVector& iv, bool anchor) {
  if (anchor && d.inner_fold == 0) {
    std::vector<int> id(d.system.vertex_count());
    std::iota(id.begin(), id.end(), 0);
    return {d, id};
  }
  LayeredDrawing dq = build(iv);
  const auto iso = op_isomorphism(dq.system, d.system);
  if (!iso) internal("no drawing of " + iv.str() + " matches the input map");
  std::vector<int> vm(dq.system.vertex_count());
  for (int v = 0; v < dq.system.vertex_count(); ++v) {
    vm[v] = d.system.origin((*iso)[dq.system.rotation(v)[0]]);
  }
  return {std::move(dq), vm};
}

std::vector<int> mapped(const std::vector<int>& vs, const std::vector<int>& vm) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (int v : vs) out.push_back(vm[v]);
  return out;
}

}  // namespace

std::pair<CaterpillarCertificate, CaterpillarCertificate> partition_even_caterpillars(
    const LayeredDrawing& d) {
  const int n = d.system.vertex_count();
  if (n % 4 != 2) throw Error(ErrorKind::kPrecondition, "order ≢ 2 (mod 4)");
  const Factorization f = factorize(d.system);
  for (int dq = 0; dq < 3; ++dq) {
    const ClassLabel q = d.anchor_class + dq;
    const IndexVector iv = index_vector(d.system, f, q);
    if (iv.k % 2 != 0) continue;
    const auto [dr, vm] = drawing_for(d, iv, dq == 0);
    const auto [t, s] = detail::even_caterpillar_sets(dr);
    return {even_caterpillar_certificate(d.system, mapped(t, vm)),
            even_caterpillar_certificate(d.system, mapped(s, vm))};
  }
  internal("order is 2 (mod 4) but no class has an even number of layers");
}

std::pair<PathCertificate, PathCertificate> partition_induced_paths(const LayeredDrawing& d,
                                                                    ClassLabel q) {
  const Factorization f = factorize(d.system);
  const IndexVector iv = index_vector(d.system, f, q);
  if (iv.m % 2 == 0 || 3 * iv.k < iv.m) {
    throw Error(ErrorKind::kPrecondition,
                "induced paths need M odd and 3K ≥ M, class has " + iv.str());
  }
  const auto [dr, vm] = drawing_for(d, iv, q == d.anchor_class);
  const auto [a, b] = detail::induced_path_sequences(dr);
  return {PathCertificate{mapped(a, vm)}, PathCertificate{mapped(b, vm)}};
}

nlohmann::json to_json(const CaterpillarCertificate& c) {
  return {{"kind", "caterpillar"},
          {"vertices", c.vertices},
          {"spine", c.spine},
          {"legs", c.legs}};
}

nlohmann::json to_json(const PathCertificate& c) {
  return {{"kind", "path"},
          {"vertices", c.vertices},
          {"spine", c.vertices},
          {"legs", nlohmann::json::array()}};
}

}  // namespace hexorb
