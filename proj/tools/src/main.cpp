// ibncut: exact iterated basis normalization, small Chvatal closures and
// rank, supernormality deciders, and the stable-set pipeline.
#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "ibncut/closure.hpp"
#include "ibncut/fixtures.hpp"
#include "ibncut/io.hpp"
#include "ibncut/parallel.hpp"
#include "ibncut/repro.hpp"
#include "ibncut/supernormal.hpp"

namespace {

using namespace ibncut;

struct GlobalOpts {
  int threads = 0;
  bool stable_output = false;
  std::string format = "json";
  std::string out_path;
  std::string data_dir;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return read_file(path);
}

// reports written earlier in a pipeline carry an envelope; unwrap it
Json parse_payload(const std::string& text) {
  Json j = Json::parse(text);
  if (j.is_object() && j.contains("result") && j.value("tool", "") == "ibncut")
    return j.at("result");
  return j;
}

class Emitter {
 public:
  Emitter(const GlobalOpts& g, std::string command, std::string input_bytes)
      : g_(g), command_(std::move(command)), input_(std::move(input_bytes)),
        start_(std::chrono::steady_clock::now()) {}

  void emit(Json payload, const std::string& text_summary) {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::string body;
    if (g_.format == "text") {
      body = text_summary;
      if (!body.empty() && body.back() != '\n') body += '\n';
    } else {
      Json rep = make_report(command_, input_, std::move(payload), g_.stable_output, secs);
      body = rep.dump(2) + "\n";
    }
    if (g_.out_path.empty()) {
      std::cout << body;
    } else {
      atomic_write(g_.out_path, body);
    }
  }

 private:
  const GlobalOpts& g_;
  std::string command_;
  std::string input_;
  std::chrono::steady_clock::time_point start_;
};

std::optional<LatticeBox> make_box(int dim, long radius, const std::string& box_file) {
  if (!box_file.empty()) return box_from_json(Json::parse(read_file(box_file)));
  if (radius > 0) return LatticeBox::cube(dim, radius);
  return std::nullopt;
}

GraphFormat graph_format(const std::string& name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "dimacs") return GraphFormat::dimacs;
  throw Error(ErrorCode::bad_input, "unknown graph format: " + name);
}

std::string decision_text(const std::string& what, const Decision& d) {
  std::ostringstream os;
  os << what << ": " << (d.verdict ? "yes" : "no");
  if (!d.complete) os << " (incomplete: cap hit)";
  if (!d.note.empty()) os << "\n" << d.note;
  if (d.bad_determinant) os << "\nviolating determinant: " << d.bad_determinant->get_str();
  return os.str();
}

int run_cli(int argc, char** argv) {
  GlobalOpts g;
  CLI::App app{"exact IBN rounds, small Chvatal closures, and stable-set certificates"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.add_option("--threads", g.threads, "worker thread count (default: all cores)");
  app.add_flag("--stable-output", g.stable_output, "omit timings for byte-identical reports");
  app.add_option("--format", g.format, "output format: json|text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", g.out_path, "write the report to this path (atomic)");
  app.add_option("--data-dir", g.data_dir, "fixture data directory");

  // hilbert
  std::string h_input;
  bool h_ppd = false;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "minimal Hilbert basis of a cone");
  hilbert_cmd->add_option("--input", h_input, "configuration JSON (- for stdin)");
  hilbert_cmd->add_flag("--parallelepiped", h_ppd, "emit the parallelepiped points instead");

  // ibn run
  auto* ibn_cmd = app.add_subcommand("ibn", "iterated basis normalization");
  std::string i_input;
  int i_max_rounds = 10;
  unsigned long long i_cap = 1000000ull;
  auto* ibn_run_cmd = ibn_cmd->add_subcommand("run", "run IBN rounds to a fixpoint");
  ibn_run_cmd->add_option("--input", i_input, "configuration JSON (- for stdin)");
  ibn_run_cmd->add_option("--max-rounds", i_max_rounds, "round cap")->check(CLI::PositiveNumber);
  ibn_run_cmd->add_option("--cap", i_cap, "basis subsets examined per round");

  // scr
  std::string s_system;
  int s_max_k = 10;
  unsigned long long s_cap = 1000000ull;
  long s_box_radius = 0;
  std::string s_box_file;
  auto* scr_cmd = app.add_subcommand("scr", "small Chvatal rank of a system");
  scr_cmd->add_option("--system", s_system, "inequality system JSON (- for stdin)");
  scr_cmd->add_option("--max-k", s_max_k, "closure rounds to try")->check(CLI::PositiveNumber);
  scr_cmd->add_option("--cap", s_cap, "basis subsets examined per round");
  scr_cmd->add_option("--box", s_box_radius, "lattice box radius for unbounded systems");
  scr_cmd->add_option("--box-file", s_box_file, "lattice box JSON {lower, upper}");

  // closure small|chvatal
  auto* closure_cmd = app.add_subcommand("closure", "closure operators");
  std::string c_system;
  int c_k = 1;
  unsigned long long c_cap = 1000000ull;
  long c_box_radius = 0;
  std::string c_box_file;
  auto* closure_small = closure_cmd->add_subcommand("small", "k-th small Chvatal closure");
  closure_small->add_option("--system", c_system, "inequality system JSON");
  closure_small->add_option("--k", c_k, "round index")->check(CLI::NonNegativeNumber);
  closure_small->add_option("--cap", c_cap, "basis subsets examined per round");
  closure_small->add_option("--box", c_box_radius, "lattice box radius");
  closure_small->add_option("--box-file", c_box_file, "lattice box JSON");
  auto* closure_chv = closure_cmd->add_subcommand("chvatal", "first Chvatal closure");
  closure_chv->add_option("--system", c_system, "inequality system JSON");

  // check unimodular|supernormal|scr-zero
  auto* check_cmd = app.add_subcommand("check", "configuration deciders");
  std::string k_input;
  unsigned long long k_cap = 1000000ull;
  auto* check_uni = check_cmd->add_subcommand("unimodular", "every basis has determinant +-1");
  auto* check_sup = check_cmd->add_subcommand("supernormal", "A equals its first IBN round");
  auto* check_zero = check_cmd->add_subcommand("scr-zero", "SCR of the configuration is zero");
  for (auto* sub : {check_uni, check_sup, check_zero}) {
    sub->add_option("--input", k_input, "configuration JSON (- for stdin)");
    sub->add_option("--cap", k_cap, "basis subsets examined");
  }

  // gen odd-circuit|lowerbound
  auto* gen_cmd = app.add_subcommand("gen", "generate the paper's matrix families");
  int g_k = 1;
  int g_j = 2;
  auto* gen_odd = gen_cmd->add_subcommand("odd-circuit", "odd circuit incidence rows");
  gen_odd->add_option("--k", g_k, "half-length: 2k+1 vertices")->check(CLI::PositiveNumber);
  auto* gen_low = gen_cmd->add_subcommand("lowerbound", "rows (1,0,0),(0,1,0),(1,j,2j-1)");
  gen_low->add_option("--j", g_j, "family parameter, j >= 2");

  // stabset frac|round1|scr|certify
  auto* stab_cmd = app.add_subcommand("stabset", "stable set polytope pipeline");
  std::string t_graph, t_gformat = "edgelist", t_fixture, t_cert;
  int t_max_k = 3;
  unsigned long long t_cap = 5000000ull;
  auto* stab_frac = stab_cmd->add_subcommand("frac", "FRAC(G) inequality system");
  auto* stab_round1 = stab_cmd->add_subcommand("round1", "IBN round one vs the odd-circuit oracle");
  auto* stab_scr = stab_cmd->add_subcommand("scr", "SCR of the FRAC(G) system");
  for (auto* sub : {stab_frac, stab_round1, stab_scr}) {
    sub->add_option("--graph", t_graph, "graph file path")->required();
    sub->add_option("--graph-format", t_gformat, "edgelist|dimacs");
  }
  stab_round1->add_option("--cap", t_cap, "basis subsets examined");
  stab_scr->add_option("--max-k", t_max_k, "closure rounds to try");
  auto* stab_cert = stab_cmd->add_subcommand("certify", "verify a facet certificate");
  stab_cert->add_option("--fixture", t_fixture, "giles-trotter|fish-in-net|ziegler7");
  stab_cert->add_option("--cert", t_cert, "certificate JSON path");

  // repro
  auto* repro_cmd = app.add_subcommand("repro", "reproduce the worked examples");
  std::string r_suite = "all";
  int r_j = 0;
  std::uint64_t r_seed = repro::kDefaultSeed;
  std::uint64_t r_budget = 0;
  bool r_provenance = false;
  repro_cmd->add_option("suite", r_suite,
                        "odd-circuit|lowerbound|round1|k5|clawfree|fish|giles-trotter|"
                        "nonterm|n2|triangle|ziegler|properties|all");
  repro_cmd->add_option("--j", r_j, "restrict lowerbound to one j");
  repro_cmd->add_option("--seed", r_seed, "seed for randomized suites");
  repro_cmd->add_option("--budget", r_budget, "basis budget for the ziegler provenance search");
  repro_cmd->add_flag("--provenance", r_provenance, "run the ziegler provenance search");

  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (auto* sc : a->get_subcommands([](CLI::App*) { return true; })) {
      sc->fallthrough();
      enable_fallthrough(sc);
    }
  };
  enable_fallthrough(&app);

  CLI11_PARSE(app, argc, argv);

  if (g.threads > 0) set_thread_count(g.threads);
  if (!g.data_dir.empty()) setenv("IBNCUT_DATA_DIR", g.data_dir.c_str(), 1);

  if (hilbert_cmd->parsed()) {
    std::string in = read_input(h_input);
    Emitter em(g, "hilbert", in);
    Configuration cfg = config_from_json(parse_payload(in));
    if (h_ppd) {
      auto pts = parallelepiped_points(SimplicialCone::make(IntMat(cfg.vectors)));
      Json arr = Json::array();
      for (const auto& p : pts) arr.push_back(to_json(p));
      em.emit(Json{{"points", arr}}, std::to_string(pts.size()) + " parallelepiped points");
      return 0;
    }
    HilbertBasisResult hb =
        cfg.size() == cfg.dim
            ? minimal_hilbert_basis_simplicial(SimplicialCone::make(IntMat(cfg.vectors)))
            : minimal_hilbert_basis_pointed(cfg.vectors);
    em.emit(to_json(hb), std::to_string(hb.elements.size()) + " Hilbert basis elements");
    return 0;
  }

  if (ibn_run_cmd->parsed()) {
    std::string in = read_input(i_input);
    Emitter em(g, "ibn run", in);
    Configuration cfg = config_from_json(parse_payload(in));
    IbnCaps caps;
    caps.max_rounds = i_max_rounds;
    caps.basis_cap = i_cap;
    RoundLog log = ibn_run(cfg, caps);
    std::ostringstream text;
    text << "rounds: " << log.rounds_completed
         << (log.fixpoint_reached ? " (fixpoint at round " + std::to_string(log.fixpoint_round) + ")"
                                  : " (no fixpoint)")
         << ", final size " << log.final_config().size();
    em.emit(to_json(log), text.str());
    return 0;
  }

  if (scr_cmd->parsed()) {
    std::string in = read_input(s_system);
    Emitter em(g, "scr", in);
    std::vector<std::string> warnings;
    InequalitySystem s = system_from_json(parse_payload(in), &warnings);
    ScrCaps caps;
    caps.max_k = s_max_k;
    caps.basis_cap = s_cap;
    caps.box = make_box(s.dim(), s_box_radius, s_box_file);
    ScrResult res = scr_of_system(s, caps);
    std::ostringstream text;
    if (res.scr) text << "scr = " << *res.scr;
    else text << "scr exceeded max_k = " << res.max_k;
    em.emit(to_json(res), text.str());
    return res.scr ? 0 : 1;
  }

  if (closure_small->parsed() || closure_chv->parsed()) {
    std::string in = read_input(c_system);
    std::vector<std::string> warnings;
    InequalitySystem s = system_from_json(parse_payload(in), &warnings);
    if (closure_small->parsed()) {
      Emitter em(g, "closure small", in);
      IbnCaps icaps;
      icaps.max_rounds = std::max(c_k, 1);
      icaps.basis_cap = c_cap;
      RoundLog log = ibn_run(Configuration::make(s.a.rows), icaps);
      ClosureReport rep = small_closure(s, c_k, log, make_box(s.dim(), c_box_radius, c_box_file));
      em.emit(to_json(rep), "closure with " + std::to_string(rep.system.nrows()) + " rows");
    } else {
      Emitter em(g, "closure chvatal", in);
      InequalitySystem q1 = chvatal_first_closure(s);
      em.emit(to_json(q1), "first Chvatal closure with " + std::to_string(q1.nrows()) + " rows");
    }
    return 0;
  }

  if (check_uni->parsed() || check_sup->parsed() || check_zero->parsed()) {
    std::string in = read_input(k_input);
    Json payload = parse_payload(in);
    std::vector<IntVec> raw;
    const Json& arr = payload.is_object() && payload.contains("vectors")
                          ? payload.at("vectors") : payload;
    for (const auto& vj : arr) raw.push_back(intvec_from_json(vj));
    Decision d;
    std::string what;
    if (check_uni->parsed()) {
      what = "unimodular";
      d = is_unimodular(raw, k_cap);
    } else if (check_sup->parsed()) {
      what = "supernormal";
      d = is_supernormal(raw, k_cap);
    } else {
      what = "scr-zero";
      d = scr_zero_decision(raw, k_cap);
    }
    Emitter em(g, "check " + what, in);
    em.emit(to_json(d), decision_text(what, d));
    return d.verdict ? 0 : 1;
  }

  if (gen_odd->parsed() || gen_low->parsed()) {
    Configuration cfg = gen_odd->parsed() ? odd_circuit_incidence(g_k) : lowerbound_family(g_j);
    // bare configuration JSON so the output pipes straight into `ibn run`
    std::string body = to_json(cfg).dump(2) + "\n";
    if (g.out_path.empty()) std::cout << body;
    else atomic_write(g.out_path, body);
    return 0;
  }

  if (stab_frac->parsed() || stab_round1->parsed() || stab_scr->parsed()) {
    std::string in = read_file(t_graph);
    Graph graph = parse_graph(in, graph_format(t_gformat));
    if (stab_frac->parsed()) {
      Emitter em(g, "stabset frac", in);
      StableSetSystem s = frac_system(graph);
      em.emit(Json{{"graph", to_json(graph)}, {"system", to_json(s.system)}},
              "FRAC(G) with " + std::to_string(s.system.nrows()) + " rows");
      return 0;
    }
    if (stab_round1->parsed()) {
      Emitter em(g, "stabset round1", in);
      Configuration cfg = stable_config(graph);
      RoundInfo info;
      Configuration next = ibn_round(cfg, t_cap, &info);
      Configuration predicted = predicted_round1(graph);
      bool match = !info.truncated && next == predicted;
      Json addv = Json::array();
      for (const auto& v : info.added) addv.push_back(to_json(v));
      em.emit(Json{{"added", addv},
                   {"bases_examined", info.bases_examined},
                   {"truncated", info.truncated},
                   {"oracle_match", match}},
              std::string("round one ") + (match ? "matches" : "DIFFERS from") +
                  " the odd-circuit oracle: " + std::to_string(info.added.size()) +
                  " new vectors");
      return match ? 0 : 1;
    }
    Emitter em(g, "stabset scr", in);
    ScrCaps caps;
    caps.max_k = t_max_k;
    caps.basis_cap = t_cap;
    ScrResult res = scr_of_system(frac_system(graph).system, caps);
    std::ostringstream text;
    if (res.scr) text << "scr = " << *res.scr;
    else text << "scr exceeded max_k = " << res.max_k;
    em.emit(to_json(res), text.str());
    return res.scr ? 0 : 1;
  }

  if (stab_cert->parsed()) {
    FacetCertificate cert;
    std::string in;
    if (!t_cert.empty()) {
      in = read_file(t_cert);
      cert = certificate_from_json(Json::parse(in));
    } else if (!t_fixture.empty()) {
      cert = load_fixture(t_fixture, g.data_dir);
      in = t_fixture;
    } else {
      throw Error(ErrorCode::bad_input, "certify needs --fixture or --cert");
    }
    Emitter em(g, "stabset certify", in);
    VerifyResult vr = verify_certificate(cert);
    em.emit(Json{{"certificate", to_json(cert)}, {"verify", to_json(vr)}},
            cert.name + ": " + (vr.ok ? "verified" : "FAILED at " + vr.failed_check));
    return vr.ok ? 0 : 1;
  }

  if (repro_cmd->parsed()) {
    std::vector<repro::CriterionResult> results;
    auto run_one = [&](const std::string& name) {
      if (name == "odd-circuit") results.push_back(repro::odd_circuit_family());
      else if (name == "lowerbound") results.push_back(repro::lowerbound_suite(r_j));
      else if (name == "round1") results.push_back(repro::round1_oracle(r_seed));
      else if (name == "k5") results.push_back(repro::k5_example());
      else if (name == "clawfree") results.push_back(repro::clawfree_certificates());
      else if (name == "fish") results.push_back(repro::clawfree_certificates(true, false));
      else if (name == "giles-trotter") results.push_back(repro::clawfree_certificates(false, true));
      else if (name == "nonterm") results.push_back(repro::nontermination());
      else if (name == "n2") results.push_back(repro::n2_termination(r_seed));
      else if (name == "triangle") results.push_back(repro::triangle_family());
      else if (name == "ziegler")
        results.push_back(repro::ziegler7(
            r_provenance ? (r_budget ? r_budget : 1000000ull) : r_budget, r_seed));
      else if (name == "properties") results.push_back(repro::property_suites(r_seed));
      else throw Error(ErrorCode::unknown_suite, "unknown suite: " + name);
    };
    if (r_suite == "all") {
      for (const char* n : {"odd-circuit", "lowerbound", "round1", "k5", "clawfree",
                            "nonterm", "n2", "triangle", "ziegler", "properties"})
        run_one(n);
    } else {
      run_one(r_suite);
    }
    bool all_pass = true;
    Json arr = Json::array();
    std::ostringstream text;
    for (const auto& r : results) {
      all_pass = all_pass && r.pass;
      text << r.summary() << "\n";
      for (const auto& d : r.details) {
        if (!r.pass || d.rfind("info: ", 0) == 0) text << "  " << d << "\n";
      }
      Json jr{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"details", r.details}};
      if (!g.stable_output) jr["seconds"] = r.seconds;
      arr.push_back(jr);
    }
    // per-suite lines always go to stderr so --out files stay machine-readable
    std::cerr << text.str();
    Emitter em(g, "repro " + r_suite, r_suite);
    em.emit(Json{{"suites", arr}, {"all_pass", all_pass}}, text.str());
    return all_pass ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const ibncut::Error& e) {
    std::cerr << "error [" << ibncut::error_name(e.code()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error [PARSE_ERROR]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
