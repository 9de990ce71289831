#include "hexorb/indexcalc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hexorb {
namespace {

Int mod(Int a, Int m) {
  const Int r = a % m;
  return r < 0 ? r + m : r;
}

// x with a*x + b*y = gcd(a, b).
Int ext_gcd(Int a, Int b, Int& x, Int& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  Int x1 = 0, y1 = 0;
  const Int g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

std::string IndexVector::str() const {
  std::ostringstream os;
  os << '(' << k << ',' << m << ',' << s << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IndexVector& iv) { return os << iv.str(); }

void require_valid(const IndexVector& iv) {
  if (iv.k < 1) throw Error(ErrorKind::kBadInput, "k must be ≥ 1");
  if (iv.m < 1) throw Error(ErrorKind::kBadInput, "m must be ≥ 1");
  if (iv.s < 0 || iv.s >= iv.m) throw Error(ErrorKind::kBadInput, "s must satisfy 0 ≤ s < m");
}

Int gcd0(Int s, Int m) { return std::gcd(s, m); }

Int s_minus_of(const IndexVector& iv) {
  require_valid(iv);
  const Int r = mod(iv.s + iv.k, iv.m);
  return r == 0 ? iv.m : r;
}

FareyPair farey_pair(Int s, Int m) {
  if (m < 1 || s < 0 || s >= m) {
    throw Error(ErrorKind::kBadInput, "farey_pair needs 0 ≤ s < m");
  }
  const Int d = gcd0(s, m);
  const Int mr = m / d;
  const Int sr = s / d;
  Int b = 1;
  if (mr > 1) {
    // b * sr ≡ -1 (mod mr)
    Int x = 0, y = 0;
    ext_gcd(sr, mr, x, y);
    b = mod(-x, mr);
    if (b == 0) b = mr;
  }
  const Int a = (d + b * s) / m;
  return {a, b};
}

BilliardSequence billiard(Int s, Int m) {
  if (m < 1 || s <= 0 || s >= m) {
    throw Error(ErrorKind::kBadInput, "billiard needs 0 < s < m");
  }
  BilliardSequence seq;
  seq.s = s;
  seq.m = m;
  const Int n = m / gcd0(s, m);
  seq.g.reserve(static_cast<size_t>(n));
  Int g = 0;
  for (Int j = 1; j <= n; ++j) {
    seq.g.push_back(g);
    g = (j % 2 == 1) ? mod(2 * s - g, 2 * m) : mod(-g, 2 * m);
  }
  return seq;
}

StepResult step_detail(const IndexVector& iv) {
  require_valid(iv);
  StepResult r;
  const Int k1 = gcd0(iv.s, iv.m);
  const Int m1 = iv.k * iv.m / k1;
  r.farey = farey_pair(iv.s, iv.m);
  r.s_minus_next = r.farey.b * iv.k;
  r.next = {k1, m1, mod(r.farey.b * iv.k - k1, m1)};
  return r;
}

IndexVector step(const IndexVector& iv) { return step_detail(iv).next; }

std::vector<IndexVector> Orbit::as_set() const {
  std::vector<IndexVector> v(triple.begin(), triple.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string Orbit::str() const {
  return triple[0].str() + triple[1].str() + triple[2].str();
}

Orbit orbit(const IndexVector& iv) {
  Orbit o;
  o.triple[0] = iv;
  o.triple[1] = step(iv);
  o.triple[2] = step(o.triple[1]);
  if (step(o.triple[2]) != iv) {
    throw Error(ErrorKind::kInternal, "step applied three times does not return " + iv.str());
  }
  return o;
}

OrbitClassification classify(const Orbit& o) {
  OrbitClassification c;
  const IndexVector& iv = o.triple[0];
  c.one_point = o.size() == 1;
  if (c.one_point) {
    c.n = iv.m / iv.k;
    c.x = iv.s / iv.k;
    if (iv.m % iv.k != 0 || iv.s % iv.k != 0 || (c.x * c.x + c.x + 1) % c.n != 0) {
      throw Error(ErrorKind::kInternal,
                  "one-point orbit " + iv.str() + " lacks the divisor witness");
    }
    c.double_mirror = (iv.m == iv.k && iv.s == 0) || (iv.m == 3 * iv.k && iv.s == iv.k);
  }
  for (const auto& x : o.as_set()) {
    if (x.m == 1 && x.s == 0 && x.k > 1) c.simple_graph = false;
  }
  c.mirror_orbit = orbit({iv.k, iv.m, mod(iv.m - s_minus_of(iv), iv.m)});
  return c;
}

std::vector<IndexVector> enumerate_one_point(Int max_m) {
  if (max_m < 1) throw Error(ErrorKind::kBadInput, "max_m must be ≥ 1");
  std::vector<IndexVector> out;
  for (Int n = 1; n <= max_m; ++n) {
    for (Int x = 0; x < n; ++x) {
      if ((x * x + x + 1) % n != 0) continue;
      for (Int k = 1; k * n <= max_m; ++k) out.push_back({k, k * n, k * x});
    }
  }
  std::sort(out.begin(), out.end(), [](const IndexVector& a, const IndexVector& b) {
    return std::tie(a.m, a.k, a.s) < std::tie(b.m, b.k, b.s);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (const auto& iv : out) {
    if (step(iv) != iv) {
      throw Error(ErrorKind::kInternal, iv.str() + " passes the divisor test but is not fixed");
    }
  }
  return out;
}

// -- graph walks ---------------------------------------------------------------

int PathWalk::position(int v) const {
  const auto it = std::find(vertices.begin(), vertices.end(), v);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

namespace {

[[noreturn]] void structural(const std::string& what) {
  throw Error(ErrorKind::kStructural, what);
}

// The darts of class q leaving v.
std::vector<Dart> class_darts(const RotationSystem& r, const Factorization& f, int v,
                              ClassLabel q) {
  std::vector<Dart> out;
  for (Dart d : r.rotation(v)) {
    if (f[RotationSystem::edge_of(d)] == q) out.push_back(d);
  }
  return out;
}

// Continues a class walk through v after arriving along `in`.
std::optional<Dart> continue_walk(const RotationSystem& r, const Factorization& f, Dart in,
                                  ClassLabel q) {
  const int v = r.target(in);
  const auto ds = class_darts(r, f, v, q);
  if (ds.size() == 1) return std::nullopt;
  if (ds.size() != 2) structural("vertex without a proper class neighbourhood");
  const Dart back = RotationSystem::twin(in);
  return ds[0] == back ? ds[1] : ds[0];
}

Dart unique_class_dart(const RotationSystem& r, const Factorization& f, int v, ClassLabel q) {
  if (r.degree(v) != 3) structural("walk anchor " + std::to_string(v) + " is not of degree 3");
  const auto ds = class_darts(r, f, v, q);
  if (ds.size() != 1) structural("degree-3 vertex without a unique class edge");
  return ds[0];
}

}  // namespace

PathWalk walk_path(const RotationSystem& r, const Factorization& f, int anchor, ClassLabel q) {
  PathWalk w;
  w.anchor = anchor;
  w.q = q;
  w.vertices.push_back(anchor);
  Dart d = unique_class_dart(r, f, anchor, q);
  for (;;) {
    w.edges.push_back(RotationSystem::edge_of(d));
    w.vertices.push_back(r.target(d));
    if (static_cast<int>(w.edges.size()) > r.edge_count()) structural("class path does not end");
    const auto nxt = continue_walk(r, f, d, q);
    if (!nxt) break;
    d = *nxt;
  }
  if (r.degree(w.vertices.back()) != 3) structural("class path ends at a degree-6 vertex");
  return w;
}

bool is_left_branch(const RotationSystem& r, const PathWalk& w, Dart d) {
  const int v = r.origin(d);
  const int j = w.position(v);
  if (j < 0) structural("dart does not leave the walk");
  const int big_m = w.length();
  if (j < big_m && r.next_ccw(r.dart_from(w.edges[j], v)) == d) return true;
  if (j > 0 && r.next_ccw(d) == r.dart_from(w.edges[j - 1], v)) return true;
  return false;
}

int branch_index(const RotationSystem& r, const PathWalk& w, Dart d) {
  const int v = r.origin(d);
  const int j = w.position(v);
  if (j < 0) throw Error(ErrorKind::kBadInput, "edge is not adjacent to the walk");
  const int e = RotationSystem::edge_of(d);
  if (std::find(w.edges.begin(), w.edges.end(), e) != w.edges.end()) {
    throw Error(ErrorKind::kBadInput, "edge lies on the walk");
  }
  return is_left_branch(r, w, d) ? j : 2 * w.length() - j;
}

int branch_index_of_edge(const RotationSystem& r, const PathWalk& w, int e) {
  const auto [u, v] = r.edge(e);
  const bool on_u = w.position(u) >= 0, on_v = w.position(v) >= 0;
  if (on_u == on_v) {
    throw Error(ErrorKind::kBadInput,
                on_u ? "edge has both ends on the walk" : "edge is not adjacent to the walk");
  }
  return branch_index(r, w, on_u ? 2 * e : 2 * e + 1);
}

int s_walk(const RotationSystem& r, const Factorization& f, ClassLabel q, Sign sign, int a,
           int c) {
  const PathWalk pa = walk_path(r, f, a, q);
  if (pa.position(c) >= 0) structural("A and C lie on the same class path");
  const ClassLabel other = sign == Sign::kPlus ? q + 1 : q - 1;
  Dart d = unique_class_dart(r, f, c, other);
  for (;;) {
    const int v = r.target(d);
    if (pa.position(v) >= 0) {
      const Dart branch = RotationSystem::twin(d);
      const int idx = branch_index(r, pa, branch);
      return is_left_branch(r, pa, branch) ? idx : idx - pa.length();
    }
    const auto nxt = continue_walk(r, f, d, other);
    if (!nxt) structural("walk from C never meets the path through A");
    d = *nxt;
  }
}

int s_walk(const RotationSystem& r, const Factorization& f, ClassLabel q, Sign sign) {
  const auto cc = class_components(r, f, q);
  return s_walk(r, f, q, sign, cc.paths[0].front(), cc.paths[1].front());
}

IndexVector index_vector(const RotationSystem& r, const Factorization& f, ClassLabel q) {
  const auto cc = class_components(r, f, q);
  const int s = s_walk(r, f, q, Sign::kPlus, cc.paths[0].front(), cc.paths[1].front());
  return {cc.K, cc.M, s};
}

std::vector<int> consecutive_branch_indices(const RotationSystem& r, const Factorization& f,
                                            ClassLabel q, int a) {
  const PathWalk pa = walk_path(r, f, a, q);
  const PathWalk pb = walk_path(r, f, a, q + 1);
  std::vector<int> out;
  for (size_t j = 0; j < pb.edges.size(); ++j) {
    const int from = pb.vertices[j], to = pb.vertices[j + 1];
    const int e = pb.edges[j];
    if (pa.position(from) >= 0) {
      out.push_back(branch_index(r, pa, r.dart_from(e, from)));
    } else if (pa.position(to) >= 0) {
      out.push_back(branch_index(r, pa, r.dart_from(e, to)));
    }
  }
  return out;
}

}  // namespace hexorb
