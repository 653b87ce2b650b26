#include "ibncut/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ibncut {

Json to_json(const Int& v) { return v.get_str(); }

Json to_json(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Json to_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v.e) a.push_back(to_json(x));
  return a;
}

Json to_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v.e) a.push_back(to_json(x));
  return a;
}

Json to_json(const IntMat& m) {
  Json rows = Json::array();
  for (const auto& r : m.rows) rows.push_back(to_json(r));
  return Json{{"rows", rows}};
}

Json to_json(const Configuration& c) {
  Json vecs = Json::array();
  for (const auto& v : c.vectors) vecs.push_back(to_json(v));
  return Json{{"dim", c.dim}, {"vectors", vecs}};
}

Json to_json(const InequalitySystem& s) {
  Json rows = Json::array();
  for (const auto& r : s.a.rows) rows.push_back(to_json(r));
  return Json{{"A", rows}, {"b", to_json(s.b)}};
}

Json to_json(const VRepresentation& v) {
  Json verts = Json::array();
  for (const auto& x : v.vertices) verts.push_back(to_json(x));
  Json rays = Json::array();
  for (const auto& r : v.rays) rays.push_back(to_json(r));
  return Json{{"vertices", verts}, {"rays", rays}, {"box_limited", v.box_limited}};
}

Json to_json(const HilbertBasisResult& h) {
  Json elems = Json::array();
  for (const auto& e : h.elements) elems.push_back(to_json(e));
  Json wits = Json::array();
  for (const auto& w : h.witnesses) {
    Json basis = Json::array();
    for (const auto& r : w.basis_rows.rows) basis.push_back(to_json(r));
    wits.push_back(Json{{"element", to_json(w.element)},
                        {"basis_rows", basis},
                        {"lambda", to_json(w.lambda)}});
  }
  return Json{{"elements", elems}, {"witnesses", wits}};
}

Json to_json(const RoundWitness& w) {
  Json basis = Json::array();
  for (const auto& r : w.basis.rows) basis.push_back(to_json(r));
  return Json{{"element", to_json(w.element)},
              {"basis_rows", basis},
              {"lambda", to_json(w.lambda)},
              {"round", w.round}};
}

Json to_json(const RoundLog& l) {
  Json rounds = Json::array();
  for (const auto& r : l.rounds) {
    Json added = Json::array();
    for (const auto& v : r.added) added.push_back(to_json(v));
    Json wits = Json::array();
    for (const auto& w : r.witnesses) wits.push_back(to_json(w));
    rounds.push_back(Json{{"round", r.round},
                          {"added", added},
                          {"witnesses", wits},
                          {"subsets_examined", r.subsets_examined},
                          {"bases_examined", r.bases_examined},
                          {"hilbert_cones", r.hilbert_cones},
                          {"truncated", r.truncated}});
  }
  return Json{{"initial", to_json(l.initial)},
              {"final", to_json(l.final_config())},
              {"rounds", rounds},
              {"rounds_completed", l.rounds_completed},
              {"fixpoint_reached", l.fixpoint_reached},
              {"fixpoint_round", l.fixpoint_round},
              {"complete", l.complete},
              {"warnings", l.warnings}};
}

Json to_json(const TightenResult& t) {
  return Json{{"beta", to_json(t.beta)},
              {"is_tight", t.is_tight},
              {"box_limited", t.box_limited}};
}

Json to_json(const ClosureReport& r) {
  Json dropped = Json::array();
  for (const auto& d : r.dropped_normals) dropped.push_back(to_json(d));
  Json j{{"k", r.k},
         {"system", to_json(r.system)},
         {"dropped_normals", dropped},
         {"box_limited", r.box_limited}};
  if (r.hull_equal) j["hull_equal"] = *r.hull_equal;
  return j;
}

Json to_json(const ScrResult& r) {
  Json per_k = Json::array();
  for (const auto& rep : r.per_k) per_k.push_back(to_json(rep));
  Json j{{"max_k", r.max_k},
         {"per_k", per_k},
         {"tight_rhs", to_json(r.tight_rhs)},
         {"input_tight", r.input_tight},
         {"hull", to_json(r.hull)},
         {"ibn", to_json(r.log)},
         {"complete", r.complete},
         {"warnings", r.warnings}};
  if (r.scr) {
    j["scr"] = *r.scr;
  } else {
    j["scr"] = "EXCEEDED";
  }
  return j;
}

Json to_json(const Decision& d) {
  Json j{{"verdict", d.verdict},
         {"complete", d.complete},
         {"bases_checked", d.bases_checked},
         {"note", d.note}};
  if (!d.verdict && d.violating_basis.nrows() > 0) {
    Json basis = Json::array();
    for (const auto& r : d.violating_basis.rows) basis.push_back(to_json(r));
    j["violating_basis"] = basis;
  }
  if (d.bad_determinant) j["determinant"] = to_json(*d.bad_determinant);
  if (d.missing_element) j["missing_element"] = to_json(*d.missing_element);
  if (d.witness_system) j["witness_system"] = to_json(*d.witness_system);
  if (d.fractional_vertex) j["fractional_vertex"] = to_json(*d.fractional_vertex);
  if (d.tightness_points) {
    Json pts = Json::array();
    for (const auto& p : *d.tightness_points) pts.push_back(to_json(p));
    j["tightness_points"] = pts;
  }
  return j;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges) edges.push_back(Json::array({u, v}));
  return Json{{"n", g.n}, {"edges", edges}};
}

Json to_json(const FacetCertificate& c) {
  Json basis = Json::array();
  for (const auto& r : c.basis.rows) basis.push_back(to_json(r));
  Json rows = Json::array();
  for (const auto& r : c.rows) {
    const char* kind = "generic";
    switch (r.kind) {
      case FacetCertificate::RowKind::edge: kind = "edge"; break;
      case FacetCertificate::RowKind::odd_circuit: kind = "odd_circuit"; break;
      case FacetCertificate::RowKind::neg_unit: kind = "neg_unit"; break;
      case FacetCertificate::RowKind::generic: kind = "generic"; break;
    }
    Json rj{{"kind", kind}};
    if (!r.circuit.empty()) rj["circuit"] = r.circuit;
    rows.push_back(rj);
  }
  Json j{{"name", c.name},
         {"version", c.version},
         {"normal", to_json(c.normal)},
         {"basis", basis},
         {"lambda", to_json(c.lambda)},
         {"round_claimed", c.round_claimed},
         {"rows", rows}};
  if (c.rhs) j["rhs"] = to_json(*c.rhs);
  if (c.coordinate_permutation) j["coordinate_permutation"] = *c.coordinate_permutation;
  if (c.original_normal) j["original_normal"] = to_json(*c.original_normal);
  return j;
}

Json to_json(const VerifyResult& r) {
  Json j{{"ok", r.ok}};
  if (!r.ok) j["failed_check"] = r.failed_check;
  return j;
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::parse_error, "bad integer literal: " + j.dump());
    }
  }
  throw Error(ErrorCode::parse_error, "expected integer, got " + j.dump());
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    try {
      auto slash = s.find('/');
      if (slash == std::string::npos) return Rat(Int(s));
      Rat r(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::parse_error, "bad rational literal: " + s);
    }
  }
  throw Error(ErrorCode::parse_error, "expected rational, got " + j.dump());
}

IntVec intvec_from_json(const Json& j) {
  const Json& arr = j.is_object() && j.contains("vec") ? j.at("vec") : j;
  if (!arr.is_array()) throw Error(ErrorCode::parse_error, "expected vector array");
  IntVec v(static_cast<int>(arr.size()));
  for (size_t i = 0; i < arr.size(); ++i) v[static_cast<int>(i)] = int_from_json(arr[i]);
  return v;
}

IntMat intmat_from_json(const Json& j) {
  const Json& arr = j.is_object() && j.contains("rows") ? j.at("rows") : j;
  if (!arr.is_array() || arr.empty())
    throw Error(ErrorCode::parse_error, "expected nonempty row array");
  std::vector<IntVec> rows;
  for (const auto& r : arr) rows.push_back(intvec_from_json(r));
  IntMat m(std::move(rows));
  for (const auto& r : m.rows) {
    if (r.dim() != m.ncols)
      throw Error(ErrorCode::parse_error, "ragged matrix rows");
  }
  return m;
}

Configuration config_from_json(const Json& j) {
  const Json& arr = j.is_object() && j.contains("vectors") ? j.at("vectors") : j;
  if (!arr.is_array() || arr.empty())
    throw Error(ErrorCode::parse_error, "expected configuration vectors");
  std::vector<IntVec> vecs;
  for (const auto& v : arr) vecs.push_back(intvec_from_json(v));
  return Configuration::make(std::move(vecs));
}

InequalitySystem system_from_json(const Json& j, std::vector<std::string>* warnings) {
  if (!j.is_object() || !j.contains("A") || !j.contains("b"))
    throw Error(ErrorCode::parse_error, "system needs fields A and b");
  IntMat a = intmat_from_json(j.at("A"));
  IntVec b = intvec_from_json(j.at("b"));
  return InequalitySystem::make(std::move(a), std::move(b), warnings);
}

LatticeBox box_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lower") || !j.contains("upper"))
    throw Error(ErrorCode::parse_error, "box needs fields lower and upper");
  return LatticeBox::make(intvec_from_json(j.at("lower")),
                          intvec_from_json(j.at("upper")));
}

FacetCertificate certificate_from_json(const Json& j) {
  FacetCertificate c;
  c.name = j.value("name", "");
  c.version = j.value("version", "");
  c.normal = intvec_from_json(j.at("normal"));
  c.basis = intmat_from_json(j.at("basis"));
  const Json& lam = j.at("lambda");
  c.lambda = RatVec(static_cast<int>(lam.size()));
  for (size_t i = 0; i < lam.size(); ++i) c.lambda[static_cast<int>(i)] = rat_from_json(lam[i]);
  c.round_claimed = j.value("round_claimed", 0);
  if (j.contains("rhs")) c.rhs = int_from_json(j.at("rhs"));
  if (j.contains("rows")) {
    for (const auto& rj : j.at("rows")) {
      FacetCertificate::RowInfo info;
      std::string kind = rj.value("kind", "generic");
      if (kind == "edge") info.kind = FacetCertificate::RowKind::edge;
      else if (kind == "odd_circuit") info.kind = FacetCertificate::RowKind::odd_circuit;
      else if (kind == "neg_unit") info.kind = FacetCertificate::RowKind::neg_unit;
      else info.kind = FacetCertificate::RowKind::generic;
      if (rj.contains("circuit")) info.circuit = rj.at("circuit").get<std::vector<int>>();
      c.rows.push_back(std::move(info));
    }
  }
  if (j.contains("coordinate_permutation"))
    c.coordinate_permutation = j.at("coordinate_permutation").get<std::vector<int>>();
  if (j.contains("original_normal"))
    c.original_normal = intvec_from_json(j.at("original_normal"));
  return c;
}

std::string fnv1a_hex(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json make_report(const std::string& command, const std::string& input_bytes,
                 Json payload, bool stable_output, double seconds) {
  Json j{{"tool", "ibncut"},
         {"version", kVersion},
         {"command", command},
         {"input_sha", fnv1a_hex(input_bytes)},
         {"result", std::move(payload)}};
  if (!stable_output) j["seconds"] = seconds;
  return j;
}

void atomic_write(const std::string& path, const std::string& data) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::bad_input, "cannot open " + tmp);
    out << data;
    if (!out) throw Error(ErrorCode::bad_input, "short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error(ErrorCode::bad_input, "cannot rename into " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::bad_input, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ibncut
