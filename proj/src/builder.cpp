#include "hexorb/builder.hpp"

#include <algorithm>
#include <array>

namespace hexorb {

LayeredDrawing layered_drawing(int k, int m, int inner_fold, int outer_fold) {
  if (k < 1 || m < 1) throw Error(ErrorKind::kBadInput, "layered drawing needs k ≥ 1 and m ≥ 1");
  LayeredDrawing D;
  D.k = k;
  D.m = m;
  const int slots = 2 * m;
  D.inner_fold = ((inner_fold % slots) + slots) % slots;
  D.outer_fold = ((outer_fold % slots) + slots) % slots;
  D.gluing_offset = D.outer_fold;

  auto wrap = [slots](int p) { return ((p % slots) + slots) % slots; };
  auto is_path = [k](int layer) { return layer == 0 || layer == k; };
  auto fold_of = [&](int layer) { return layer == 0 ? D.inner_fold : D.outer_fold; };

  // Vertices.
  std::vector<int> base(k + 1);
  int n = 0;
  for (int i = 0; i <= k; ++i) {
    base[i] = n;
    const int size = is_path(i) ? m + 1 : slots;
    D.layers.emplace_back();
    for (int t = 0; t < size; ++t) D.layers.back().push_back(n + t);
    n += size;
  }
  D.vertex_layer.resize(n);
  for (int i = 0; i <= k; ++i) {
    for (int v : D.layers[i]) D.vertex_layer[v] = i;
  }
  D.slot_.assign(k + 1, std::vector<int>(slots));
  for (int i = 0; i <= k; ++i) {
    for (int p = 0; p < slots; ++p) {
      if (is_path(i)) {
        const int j = wrap(p - fold_of(i));
        D.slot_[i][p] = base[i] + std::min(j, slots - j);
      } else {
        D.slot_[i][p] = base[i] + p;
      }
    }
  }

  // Edges: inner path first so edge 0 is a layer edge.
  std::vector<EdgeEnds> edges;
  D.layer_dart_.assign(k + 1, std::vector<Dart>(slots));
  auto add_layer_edges = [&](int i) {
    if (is_path(i)) {
      const int first = static_cast<int>(edges.size());
      for (int t = 0; t < m; ++t) edges.push_back({base[i] + t, base[i] + t + 1});
      for (int p = 0; p < slots; ++p) {
        const int j = wrap(p - fold_of(i));
        D.layer_dart_[i][p] = j < m ? 2 * (first + j) : 2 * (first + slots - 1 - j) + 1;
      }
    } else {
      for (int p = 0; p < slots; ++p) {
        D.layer_dart_[i][p] = 2 * static_cast<int>(edges.size());
        edges.push_back({base[i] + p, base[i] + wrap(p + 1)});
      }
    }
  };
  for (int i = 0; i <= k; ++i) add_layer_edges(i);
  D.down_.assign(k + 1, std::vector<int>(slots, -1));
  D.down_next_.assign(k + 1, std::vector<int>(slots, -1));
  for (int i = 1; i <= k; ++i) {
    for (int p = 0; p < slots; ++p) {
      D.down_[i][p] = static_cast<int>(edges.size());
      edges.push_back({D.slot_[i][p], D.slot_[i - 1][p]});
      D.down_next_[i][p] = static_cast<int>(edges.size());
      edges.push_back({D.slot_[i][p], D.slot_[i - 1][wrap(p + 1)]});
    }
  }

  // Triangles of each annulus, then next_ccw(twin(d_i)) = d_{i+1}.
  const int darts = 2 * static_cast<int>(edges.size());
  std::vector<Dart> next(darts, -1);
  auto face = [&](std::array<Dart, 3> f) {
    for (int t = 0; t < 3; ++t) {
      Dart& slot = next[RotationSystem::twin(f[t])];
      if (slot != -1) throw Error(ErrorKind::kInternal, "dart used by two triangles");
      slot = f[(t + 1) % 3];
    }
  };
  for (int i = 1; i <= k; ++i) {
    for (int p = 0; p < slots; ++p) {
      const int dn = D.down_[i][p], dnn = D.down_next_[i][p];
      face({D.layer_dart_[i - 1][p], 2 * dnn + 1, 2 * dn});
      face({2 * dnn, 2 * D.down_[i][wrap(p + 1)] + 1,
            RotationSystem::twin(D.layer_dart_[i][p])});
    }
  }

  std::vector<std::vector<Dart>> rotation(n);
  std::vector<char> done(darts, 0);
  auto origin = [&](Dart d) {
    const auto& e = edges[d >> 1];
    return (d & 1) ? e.v : e.u;
  };
  for (Dart d = 0; d < darts; ++d) {
    if (next[d] == -1) throw Error(ErrorKind::kInternal, "dart outside every triangle");
  }
  for (Dart d = 0; d < darts; ++d) {
    const int v = origin(d);
    if (!rotation[v].empty()) continue;
    Dart x = d;
    do {
      rotation[v].push_back(x);
      done[x] = 1;
      x = next[x];
    } while (x != d);
  }
  for (Dart d = 0; d < darts; ++d) {
    if (!done[d]) throw Error(ErrorKind::kInternal, "vertex neighbourhood is not a disc");
  }
  D.system = RotationSystem::FromDartRotation(n, std::move(edges), rotation);
  D.anchor_dart = 0;
  D.anchor_class = ClassLabel(0);
  D.index = {k, m, -1};
  return D;
}

LayeredDrawing build(const IndexVector& iv) {
  require_valid(iv);
  const int k = static_cast<int>(iv.k), m = static_cast<int>(iv.m);
  std::vector<LayeredDrawing> matches;
  for (int fold = 0; fold < 2 * m; ++fold) {
    LayeredDrawing D = layered_drawing(k, m, 0, fold);
    if (!validate(D.system).in_P) continue;
    try {
      const Factorization f = factorize(D.system);
      const int s = s_walk(D.system, f, D.anchor_class, Sign::kPlus);
      if (s != iv.s) continue;
      D.index = iv;
      matches.push_back(std::move(D));
    } catch (const Error&) {
      continue;
    }
  }
  if (matches.empty()) {
    throw Error(ErrorKind::kInternal, "no outer-path offset realizes " + iv.str());
  }
  for (size_t i = 1; i < matches.size(); ++i) {
    if (!op_equivalent(matches[0].system, matches[i].system)) {
      throw Error(ErrorKind::kInternal,
                  "two offsets measure the same index-vector but give different maps");
    }
  }
  return std::move(matches.front());
}

}  // namespace hexorb
