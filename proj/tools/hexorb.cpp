// hexorb: build, measure and partition members of the (3,6)-family.
//
// Exit codes: 0 ok, 1 I/O, 2 bad input, 3 unmet precondition, 4 failed
// cross-check.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hexorb/builder.hpp"
#include "hexorb/indexcalc.hpp"
#include "hexorb/planemap.hpp"
#include "hexorb/spanning.hpp"
#include "hexorb/trifactor.hpp"

using namespace hexorb;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kIo = 1, kBad = 2, kPre = 3, kCheck = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw IoError("cannot open " + out_path + " for writing");
  f << text;
  if (!f) throw IoError("write to " + out_path + " failed");
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

IndexVector index_from(const std::vector<long long>& v) {
  if (v.size() != 3) throw Error(ErrorKind::kBadInput, "expected three integers k m s");
  IndexVector iv{v[0], v[1], v[2]};
  require_valid(iv);
  return iv;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string triple_str(const Orbit& o) {
  return o.triple[0].str() + " " + o.triple[1].str() + " " + o.triple[2].str();
}

json iv_json(const IndexVector& iv) { return {iv.k, iv.m, iv.s}; }

int bond_limit() {
  if (const char* env = std::getenv("HEXORB_BOND_LIMIT")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::kBadInput, "HEXORB_BOND_LIMIT must be an integer");
    }
  }
  return kDefaultBondLimit;
}

// A graph given either as an index-vector or as a JSON document.
struct Input {
  RotationSystem system;
  std::vector<std::vector<int>> layers;
  std::optional<LayeredDrawing> drawing;  // set when built from (k,m,s)
};

Input load_input(const std::vector<std::string>& args) {
  Input in;
  if (args.size() == 3) {
    std::vector<long long> v;
    for (const auto& a : args) {
      try {
        size_t used = 0;
        v.push_back(std::stoll(a, &used));
        if (used != a.size()) throw std::invalid_argument(a);
      } catch (const std::exception&) {
        throw Error(ErrorKind::kBadInput, "not an integer: " + a);
      }
    }
    in.drawing = build(index_from(v));
    in.system = in.drawing->system;
    in.layers = in.drawing->layers;
    return in;
  }
  if (args.size() != 1) throw Error(ErrorKind::kBadInput, "expected k m s or a graph file");
  GraphDocument doc = parse_document(slurp(args[0]));
  in.system = std::move(doc.system);
  in.layers = std::move(doc.layers);
  return in;
}

// A layered drawing of the input, a vertex map from the drawing into it, and
// the shift taking the drawing's class labels to the input's.
struct Matched {
  LayeredDrawing d;
  std::vector<int> vm;
  int class_shift = 0;
};

Matched drawing_of(const Input& in) {
  std::vector<int> vm(in.system.vertex_count());
  std::iota(vm.begin(), vm.end(), 0);
  if (in.drawing) return {*in.drawing, vm, 0};
  if (!validate(in.system).in_P) {
    throw Error(ErrorKind::kPrecondition, "graph is not a member of the (3,6)-family");
  }
  const Factorization f = factorize(in.system);
  LayeredDrawing d = build(index_vector(in.system, f, ClassLabel(0)));
  const auto iso = op_isomorphism(d.system, in.system);
  if (!iso) throw CheckFailure("rebuilt drawing is not op-equivalent to the input");
  for (int v = 0; v < d.system.vertex_count(); ++v) {
    vm[v] = in.system.origin((*iso)[d.system.rotation(v)[0]]);
  }
  const ClassLabel here = factorize(d.system)[0];
  const ClassLabel there = f[RotationSystem::edge_of((*iso)[0])];
  const int shift = (there.value() - here.value() + 3) % 3;
  return {std::move(d), vm, shift};
}

std::vector<int> remap(const std::vector<int>& vs, const std::vector<int>& vm) {
  std::vector<int> out;
  for (int v : vs) out.push_back(vm[v]);
  return out;
}

std::string list_str(const std::vector<int>& vs) {
  std::string s = "[";
  for (size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "]";
}

std::string census_str(const DegreeCensus& c) {
  std::string s;
  for (const auto& [deg, n] : c.counts) {
    if (!s.empty()) s += ' ';
    s += "deg" + std::to_string(deg) + "=" + std::to_string(n);
  }
  return s;
}

// -- verbs -------------------------------------------------------------------

int cmd_build(const std::vector<long long>& kms, const std::string& out, const std::string& fmt) {
  const ExportFormat format = parse_export_format(fmt);
  const LayeredDrawing d = build(index_from(kms));
  const Factorization f = factorize(d.system);
  emit(out, export_graph(d.system, f.class_of, d.layers, format));
  return kOk;
}

int cmd_orbit(const std::vector<long long>& kms, bool as_json) {
  const IndexVector iv = index_from(kms);
  const Orbit o = orbit(iv);
  const OrbitClassification c = classify(o);
  if (as_json) {
    json j = {{"orbit", json::array()},
              {"size", o.size()},
              {"one_point", c.one_point},
              {"double_mirror", c.double_mirror},
              {"simple", c.simple_graph},
              {"mirror_orbit", json::array()},
              {"order", 2 * iv.k * iv.m + 2}};
    for (const auto& x : o.triple) j["orbit"].push_back(iv_json(x));
    for (const auto& x : c.mirror_orbit.triple) j["mirror_orbit"].push_back(iv_json(x));
    if (c.one_point) j["witness"] = {{"n", c.n}, {"x", c.x}};
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << triple_str(o) << " size=" << o.size();
  if (c.one_point) {
    std::cout << " one_point=(n=" << c.n << ",x=" << c.x << ")"
              << " double_mirror=" << yes_no(c.double_mirror);
  }
  std::cout << " simple=" << yes_no(c.simple_graph) << "\n";
  std::cout << "mirror " << triple_str(c.mirror_orbit) << "\n";
  return kOk;
}

int cmd_census(long long max_km, const std::string& out, bool check_graphs) {
  if (max_km < 1) throw Error(ErrorKind::kBadInput, "--max-km must be ≥ 1");
  std::ostringstream csv;
  csv << "k,m,s,orbit,orbit_size,one_point,double_mirror,simple,order\n";
  std::map<int, long> by_size;
  long mismatches = 0;
  for (Int k = 1; k <= max_km; ++k) {
    for (Int m = 1; k * m <= max_km; ++m) {
      for (Int s = 0; s < m; ++s) {
        const IndexVector iv{k, m, s};
        const Orbit o = orbit(iv);
        const OrbitClassification c = classify(o);
        ++by_size[o.size()];
        csv << k << ',' << m << ',' << s << ",\"" << triple_str(o) << "\"," << o.size() << ','
            << (c.one_point ? 1 : 0) << ',' << (c.double_mirror ? 1 : 0) << ','
            << (c.simple_graph ? 1 : 0) << ',' << 2 * k * m + 2 << '\n';
        if (check_graphs) {
          const LayeredDrawing d = build(iv);
          const Factorization f = factorize(d.system);
          for (int q = 0; q < 3; ++q) {
            if (index_vector(d.system, f, ClassLabel(q)) != o.triple[q]) {
              ++mismatches;
              std::cerr << "collision: built " << iv.str() << " measures a different orbit\n";
              break;
            }
          }
        }
      }
    }
  }
  emit(out, csv.str());
  for (const auto& [size, n] : by_size) {
    std::cerr << "orbits of size " << size << ": " << n << " index-vectors\n";
  }
  if (check_graphs) std::cerr << "graph cross-check mismatches: " << mismatches << "\n";
  return mismatches == 0 ? kOk : kCheck;
}

int cmd_partition(const std::vector<std::string>& args, const std::string& kind, int q_opt,
                  bool as_json) {
  const Input in = load_input(args);
  json report = json::object();

  if (kind == "bonds") {
    long count = 0;
    json bonds = json::array();
    enumerate_hamilton_bonds(
        in.system,
        [&](const Bipartition& p) {
          const EndTreeCensus c = end_tree_census(in.system, p);
          ++count;
          if (as_json) {
            bonds.push_back({{"side_a", p.side_a},
                             {"side_b", p.side_b},
                             {"census_a", c.a.counts},
                             {"census_b", c.b.counts}});
          } else {
            std::cout << "bond " << count << ": A=" << list_str(p.side_a)
                      << " B=" << list_str(p.side_b) << " | A: " << census_str(c.a)
                      << " | B: " << census_str(c.b) << "\n";
          }
          return true;
        },
        bond_limit());
    if (as_json) {
      std::cout << json{{"bonds", bonds}, {"count", count}}.dump() << "\n";
    } else {
      std::cout << count << " Hamilton bonds\n";
    }
    return kOk;
  }

  if (in.system.vertex_count() % 4 != 2 && kind == "caterpillar") {
    throw Error(ErrorKind::kPrecondition, "order ≢ 2 (mod 4)");
  }
  const auto [d, vm, class_shift] = drawing_of(in);

  if (kind == "caterpillar") {
    auto [a, b] = partition_even_caterpillars(d);
    json certs = json::array();
    for (auto* c : {&a, &b}) {
      c->vertices = remap(c->vertices, vm);
      c->spine = remap(c->spine, vm);
      for (auto& leg : c->legs) leg = remap(leg, vm);
      std::sort(c->vertices.begin(), c->vertices.end());
      const Verdict v = verify_certificate(in.system, *c);
      if (!v) throw CheckFailure("caterpillar certificate rejected: " + v.reason);
      const TwoColoring tc = equitable_two_coloring(in.system, c->vertices);
      if (as_json) {
        json j = to_json(*c);
        j["coloring"] = {tc.larger, tc.smaller};
        j["equitable"] = tc.equitable;
        certs.push_back(j);
      } else {
        std::cout << "caterpillar order=" << c->vertices.size() << " spine=" << list_str(c->spine)
                  << " leg_order=" << c->leg_order << " legs=" << c->legs.size()
                  << " coloring=" << tc.larger << "/" << tc.smaller
                  << " equitable=" << yes_no(tc.equitable) << " verified=yes\n";
        std::cout << "  vertices=" << list_str(c->vertices) << "\n";
      }
    }
    if (as_json) std::cout << json{{"certificates", certs}}.dump() << "\n";
    return kOk;
  }

  if (kind == "paths") {
    const Factorization f = factorize(d.system);
    int chosen = -1;
    for (int q = 0; q < 3; ++q) {
      if (q_opt >= 0 && (q + class_shift) % 3 != q_opt) continue;
      const IndexVector iv = index_vector(d.system, f, ClassLabel(q));
      if (iv.m % 2 == 1 && 3 * iv.k >= iv.m) {
        chosen = q;
        break;
      }
    }
    if (chosen < 0) {
      if (q_opt >= 0) {
        throw Error(ErrorKind::kPrecondition, "class " + std::to_string(q_opt) +
                                                  " does not have M odd and 3K ≥ M");
      }
      throw Error(ErrorKind::kPrecondition, "no class has M odd and 3K ≥ M");
    }
    auto [a, b] = partition_induced_paths(d, ClassLabel(chosen));
    json certs = json::array();
    for (auto* c : {&a, &b}) {
      c->vertices = remap(c->vertices, vm);
      const Verdict v = verify_certificate(in.system, *c);
      if (!v) throw CheckFailure("path certificate rejected: " + v.reason);
      if (as_json) {
        certs.push_back(to_json(*c));
      } else {
        std::cout << "path order=" << c->vertices.size() << " vertices=" << list_str(c->vertices)
                  << " verified=yes\n";
      }
    }
    if (as_json) std::cout << json{{"class", (chosen + class_shift) % 3}, {"certificates", certs}}.dump() << "\n";
    return kOk;
  }
  throw Error(ErrorKind::kBadInput, "unknown --kind " + kind);
}

int cmd_verify(const std::string& path, bool as_json) {
  const GraphDocument doc = parse_document(slurp(path));
  const RotationSystem& r = doc.system;
  const ValidationReport rep = validate(r);
  json j = {{"vertices", rep.vertices},
            {"edges", rep.edges},
            {"faces", rep.faces},
            {"connected", rep.connected},
            {"two_connected", rep.two_connected},
            {"triangulation", rep.all_faces_triangles},
            {"simple", rep.simple},
            {"in_P", rep.in_P},
            {"in_H", rep.in_H}};
  if (!as_json) {
    std::cout << "V=" << rep.vertices << " E=" << rep.edges << " F=" << rep.faces
              << " two_connected=" << yes_no(rep.two_connected)
              << " triangulation=" << yes_no(rep.all_faces_triangles)
              << " simple=" << yes_no(rep.simple) << "\n";
    std::cout << "in_P=" << (rep.in_P ? "true" : "false")
              << " in_H=" << (rep.in_H ? "true" : "false") << "\n";
  }
  if (!rep.in_P) {
    if (as_json) std::cout << j.dump() << "\n";
    return kOk;
  }
  const Factorization f = factorize(r);
  std::array<IndexVector, 3> measured;
  bool agree = true;
  for (int q = 0; q < 3; ++q) measured[q] = index_vector(r, f, ClassLabel(q));
  for (int q = 0; q < 3; ++q) {
    const IndexVector& iv = measured[q];
    agree &= step(iv) == measured[(q + 1) % 3];
    const int sm = s_walk(r, f, ClassLabel(q), Sign::kMinus);
    const int sp = s_walk(r, f, ClassLabel(q), Sign::kPlus);
    agree &= ((sm - sp - iv.k) % iv.m + iv.m) % iv.m == 0;
  }
  const Orbit o{measured};
  if (as_json) {
    j["orbit"] = json::array();
    for (const auto& x : measured) j["orbit"].push_back(iv_json(x));
    j["arithmetic_matches_walk"] = agree;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "in_P, orbit " << o.str() << ", arithmetic=walk " << (agree ? "✓" : "✗") << "\n";
  }
  return agree ? kOk : kCheck;
}

int cmd_export(const std::string& path, const std::string& out, const std::string& fmt) {
  const ExportFormat format = parse_export_format(fmt);
  const GraphDocument doc = parse_document(slurp(path));
  std::vector<int> classes;
  if (validate(doc.system).in_P) classes = factorize(doc.system).class_of;
  emit(out, export_graph(doc.system, classes, doc.layers, format));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build, measure and partition plane triangulations with degrees 3 and 6"};
  app.require_subcommand(1);

  std::vector<long long> kms;
  std::vector<std::string> inputs;
  std::string out, fmt = "json", kind = "caterpillar", path;
  long long max_km = 30;
  int q_opt = -1;
  bool as_json = false, check_graphs = false;

  auto* b = app.add_subcommand("build", "Build the drawing of an index-vector");
  b->add_option("kms", kms, "k m s")->expected(3)->required();
  b->add_option("-o,--out", out, "Output file (stdout when omitted)");
  b->add_option("-f,--format", fmt, "json, dot or svg");

  auto* o = app.add_subcommand("orbit", "Print the orbit of an index-vector and its class");
  o->add_option("kms", kms, "k m s")->expected(3)->required();
  o->add_flag("--json", as_json, "Machine-readable output");

  auto* c = app.add_subcommand("census", "CSV of every index-vector with k*m up to a bound");
  c->add_option("--max-km", max_km, "Largest k*m");
  c->add_option("-o,--out", out, "Output file (stdout when omitted)");
  c->add_flag("--graphs", check_graphs, "Also build every graph and compare measured orbits");

  auto* p = app.add_subcommand("partition", "Spanning partitions or Hamilton bonds");
  p->add_option("input", inputs, "k m s, or a JSON graph file")->required()->expected(1, 3);
  p->add_option("--kind", kind, "caterpillar, paths or bonds");
  p->add_option("--class", q_opt, "Class used for paths (default: first admissible)")
      ->check(CLI::Range(0, 2));
  p->add_flag("--json", as_json, "Machine-readable output");

  auto* v = app.add_subcommand("verify", "Validate a graph file and cross-check its orbit");
  v->add_option("file", path, "JSON graph")->required();
  v->add_flag("--json", as_json, "Machine-readable output");

  auto* e = app.add_subcommand("export", "Convert a JSON graph to json, dot or svg");
  e->add_option("file", path, "JSON graph")->required();
  e->add_option("-o,--out", out, "Output file (stdout when omitted)");
  e->add_option("-f,--format", fmt, "json, dot or svg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kOk : kBad;
  }

  try {
    if (*b) return cmd_build(kms, out, fmt);
    if (*o) return cmd_orbit(kms, as_json);
    if (*c) return cmd_census(max_km, out, check_graphs);
    if (*p) return cmd_partition(inputs, kind, q_opt, as_json);
    if (*v) return cmd_verify(path, as_json);
    if (*e) return cmd_export(path, out, fmt);
  } catch (const IoError& err) {
    std::cerr << "hexorb: " << err.what() << "\n";
    return kIo;
  } catch (const CheckFailure& err) {
    std::cerr << "hexorb: " << err.what() << "\n";
    return kCheck;
  } catch (const Error& err) {
    std::cerr << "hexorb: " << err.what() << "\n";
    switch (err.kind()) {
      case ErrorKind::kBadInput:
        return kBad;
      case ErrorKind::kPrecondition:
        return kPre;
      default:
        return kCheck;
    }
  }
  return kOk;
}
