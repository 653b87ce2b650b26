#include "ibncut/ibn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "ibncut/parallel.hpp"

namespace ibncut {

Configuration Configuration::make(std::vector<IntVec> vs,
                                  std::vector<std::string>* warnings) {
  Configuration cfg;
  if (vs.empty()) throw Error(ErrorCode::bad_input, "empty configuration");
  cfg.dim = vs.front().dim();
  if (cfg.dim < 1) throw Error(ErrorCode::bad_input, "dimension must be >= 1");
  for (auto& v : vs) {
    if (v.dim() != cfg.dim)
      throw Error(ErrorCode::bad_input, "mixed dimensions in configuration");
    auto pp = primitive_part(v);
    if (pp.g == 0)
      throw Error(ErrorCode::bad_input, "zero vector in configuration");
    if (pp.g != 1) {
      if (warnings) warnings->push_back("normalized non-primitive vector");
      v = pp.w;
    }
  }
  std::sort(vs.begin(), vs.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  cfg.vectors = std::move(vs);
  return cfg;
}

bool Configuration::contains(const IntVec& v) const {
  return std::binary_search(vectors.begin(), vectors.end(), v,
                            [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
}

namespace {

constexpr unsigned long long kCountSat = std::numeric_limits<unsigned long long>::max() / 2;

unsigned long long sat_choose(int m, int k) {
  if (k < 0 || k > m) return 0;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) {
    unsigned __int128 t = static_cast<unsigned __int128>(r) * static_cast<unsigned long long>(m - k + i);
    t /= static_cast<unsigned long long>(i);
    if (t > kCountSat) return kCountSat;
    r = static_cast<unsigned long long>(t);
  }
  return r;
}

// int64 rows with a Hadamard bound make the per-subset determinant cheap
struct FastRows {
  bool usable = false;
  std::vector<std::vector<long long>> rows;
  std::vector<double> log2norm2;  // per row, log2 of squared euclidean norm
};

FastRows build_fast_rows(const Configuration& cfg) {
  FastRows f;
  f.rows.resize(cfg.vectors.size());
  f.log2norm2.resize(cfg.vectors.size());
  for (size_t i = 0; i < cfg.vectors.size(); ++i) {
    const IntVec& v = cfg.vectors[i];
    double norm2 = 0;
    f.rows[i].resize(static_cast<size_t>(v.dim()));
    for (int j = 0; j < v.dim(); ++j) {
      auto x = to_ll(v[j]);
      if (!x) return f;  // usable stays false
      f.rows[i][static_cast<size_t>(j)] = *x;
      norm2 += static_cast<double>(*x) * static_cast<double>(*x);
    }
    f.log2norm2[i] = norm2 > 0 ? std::log2(norm2) : 0.0;
  }
  f.usable = true;
  return f;
}

// Bareiss determinant on preselected rows; nullopt when the Hadamard bound
// does not keep intermediates inside __int128 safety.
std::optional<long long> det_fast(const FastRows& f, const std::vector<int>& idx) {
  int n = static_cast<int>(idx.size());
  if (n > 32) return std::nullopt;
  double bound = 0;
  for (int i : idx) bound += 0.5 * f.log2norm2[static_cast<size_t>(i)];
  if (bound > 61.0) return std::nullopt;
  using I128 = __int128;
  I128 w[32][32];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      w[i][j] = f.rows[static_cast<size_t>(idx[static_cast<size_t>(i)])][static_cast<size_t>(j)];
  I128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (w[i][k] != 0) { piv = i; break; }
    if (piv < 0) return 0LL;
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(w[piv][j], w[k][j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        w[i][j] = (w[k][k] * w[i][j] - w[i][k] * w[k][j]) / prev;
      w[i][k] = 0;
    }
    prev = w[k][k];
  }
  I128 d = sign > 0 ? w[n - 1][n - 1] : -w[n - 1][n - 1];
  return static_cast<long long>(d);
}

std::string basis_key(const Configuration& cfg, const std::vector<std::string>& vkeys,
                      const std::vector<int>& idx) {
  std::string k;
  for (int i : idx) {
    k += vkeys[static_cast<size_t>(i)];
    k += '|';
  }
  return k;
}

struct RoundScratch {
  std::vector<std::pair<IntVec, RoundWitness>> found;  // in lex basis order
  unsigned long long subsets = 0;
  unsigned long long bases = 0;
  unsigned long long cones = 0;
};

}  // namespace

BasisEnumStats enumerate_bases(const Configuration& cfg, unsigned long long cap,
                               const std::function<void(const std::vector<int>&)>& visit) {
  int m = cfg.size(), n = cfg.dim;
  BasisEnumStats stats;
  if (m < n) return stats;
  std::vector<int> idx(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
  for (;;) {
    if (stats.subsets_examined >= cap) {
      stats.truncated = true;
      return stats;
    }
    ++stats.subsets_examined;
    IntMat sub(n, n);
    for (int i = 0; i < n; ++i) sub[i] = cfg.vectors[static_cast<size_t>(idx[static_cast<size_t>(i)])];
    if (determinant(sub) != 0) {
      ++stats.bases_found;
      visit(idx);
    }
    int pos = n - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - n + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < n; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return stats;
}

namespace {

// Shared Hilbert-basis memo: basis cones recur between rounds unchanged.
class HilbertMemo {
 public:
  std::shared_ptr<const HilbertBasisResult> get_or_compute(const std::string& key,
                                                           const IntMat& basis) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    auto res = std::make_shared<HilbertBasisResult>(
        minimal_hilbert_basis_simplicial(SimplicialCone{basis}));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = map_.emplace(key, res);
    return it->second;
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::string, std::shared_ptr<const HilbertBasisResult>> map_;
};

Configuration run_round(const Configuration& cfg, unsigned long long basis_cap,
                        RoundInfo* info, HilbertMemo* memo, int round_no) {
  int m = cfg.size(), n = cfg.dim;
  RoundInfo local;
  local.round = round_no;
  if (m < n) throw Error(ErrorCode::not_full_rank, "fewer vectors than dimension");

  // stripes by first subset index; lex order = stripe order
  std::vector<unsigned long long> stripe_size(static_cast<size_t>(m - n + 1));
  for (int i = 0; i <= m - n; ++i)
    stripe_size[static_cast<size_t>(i)] = sat_choose(m - 1 - i, n - 1);
  // cap -> per-stripe budget of examined subsets (exact lex prefix)
  std::vector<unsigned long long> budget(stripe_size.size(), 0);
  unsigned long long remaining = basis_cap;
  bool truncated = false;
  for (size_t i = 0; i < stripe_size.size(); ++i) {
    budget[i] = std::min(stripe_size[i], remaining);
    remaining -= budget[i];
    if (budget[i] < stripe_size[i]) truncated = true;
  }

  FastRows fast = build_fast_rows(cfg);
  std::vector<std::string> vkeys(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::string k;
    for (const Int& x : cfg.vectors[static_cast<size_t>(i)].e) {
      k += x.get_str();
      k += ',';
    }
    vkeys[static_cast<size_t>(i)] = std::move(k);
  }

  std::vector<RoundScratch> scratch(stripe_size.size());
  HilbertMemo local_memo;
  HilbertMemo* hm = memo ? memo : &local_memo;

  parallel_stripes(static_cast<int>(stripe_size.size()), [&](int stripe) {
    RoundScratch& sc = scratch[static_cast<size_t>(stripe)];
    unsigned long long quota = budget[static_cast<size_t>(stripe)];
    if (quota == 0) return;
    std::vector<int> idx(static_cast<size_t>(n));
    idx[0] = stripe;
    for (int i = 1; i < n; ++i) idx[static_cast<size_t>(i)] = stripe + i;

    auto process = [&](const std::vector<int>& ix) {
      long long dll = 0;
      bool have_ll = false;
      if (fast.usable) {
        if (auto d = det_fast(fast, ix)) {
          dll = *d;
          have_ll = true;
        }
      }
      Int det_big;
      if (!have_ll) {
        IntMat sub(n, n);
        for (int i = 0; i < n; ++i) sub[i] = cfg.vectors[static_cast<size_t>(ix[static_cast<size_t>(i)])];
        det_big = determinant(sub);
        if (det_big == 0) return;
        ++sc.bases;
        if (abs(det_big) == 1) return;
      } else {
        if (dll == 0) return;
        ++sc.bases;
        if (dll == 1 || dll == -1) return;
      }
      ++sc.cones;
      IntMat sub(n, n);
      for (int i = 0; i < n; ++i) sub[i] = cfg.vectors[static_cast<size_t>(ix[static_cast<size_t>(i)])];
      auto hb = hm->get_or_compute(basis_key(cfg, vkeys, ix), sub);
      for (size_t e = 0; e < hb->elements.size(); ++e) {
        if (cfg.contains(hb->elements[e])) continue;
        RoundWitness w;
        w.element = hb->elements[e];
        w.basis = hb->witnesses[e].basis_rows;
        w.lambda = hb->witnesses[e].lambda;
        w.round = round_no;
        sc.found.emplace_back(hb->elements[e], std::move(w));
      }
    };

    // iterate subsets with fixed first index, lex order, bounded by quota
    for (;;) {
      if (sc.subsets >= quota) return;
      ++sc.subsets;
      process(idx);
      int pos = n - 1;
      while (pos >= 1 && idx[static_cast<size_t>(pos)] == m - n + pos) --pos;
      if (pos < 1) break;
      ++idx[static_cast<size_t>(pos)];
      for (int j = pos + 1; j < n; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  });

  // deterministic merge in stripe (= lex) order, first witness wins
  std::map<IntVec, RoundWitness, bool (*)(const IntVec&, const IntVec&)> fresh(lex_less);
  for (auto& sc : scratch) {
    local.subsets_examined += sc.subsets;
    local.bases_examined += sc.bases;
    local.hilbert_cones += sc.cones;
    for (auto& [v, w] : sc.found) {
      fresh.emplace(v, std::move(w));
    }
  }
  local.truncated = truncated;

  std::vector<IntVec> merged = cfg.vectors;
  for (auto& [v, w] : fresh) {
    local.added.push_back(v);
    local.witnesses.push_back(std::move(w));
    merged.push_back(v);
  }
  std::sort(merged.begin(), merged.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });

  if (info) *info = std::move(local);
  Configuration next;
  next.dim = cfg.dim;
  next.vectors = std::move(merged);
  return next;
}

}  // namespace

Configuration ibn_round(const Configuration& cfg, unsigned long long basis_cap,
                        RoundInfo* info) {
  return run_round(cfg, basis_cap, info, nullptr, 1);
}

RoundLog ibn_run(const Configuration& cfg, const IbnCaps& caps) {
  RoundLog log;
  log.initial = cfg;
  if (rank(IntMat(cfg.vectors)) < cfg.dim)
    throw Error(ErrorCode::not_full_rank, "configuration must have rank n");
  log.configs.push_back(cfg);

  HilbertMemo memo;
  for (int k = 1; k <= caps.max_rounds; ++k) {
    RoundInfo info;
    Configuration next = run_round(log.configs.back(), caps.basis_cap, &info, &memo, k);
    bool same = (next == log.configs.back());
    log.rounds.push_back(info);
    log.configs.push_back(std::move(next));
    log.rounds_completed = k;
    if (info.truncated) {
      log.complete = false;
      log.warnings.push_back("basis cap exceeded in round " + std::to_string(k) +
                             "; partial result");
      break;
    }
    if (same) {
      log.fixpoint_reached = true;
      log.fixpoint_round = k - 1;
      break;
    }
  }
  if (!log.fixpoint_reached && log.complete &&
      log.rounds_completed == caps.max_rounds) {
    log.warnings.push_back("max rounds reached without fixpoint");
  }
  return log;
}

std::optional<RoundWitness> witness_for(const RoundLog& log, const IntVec& v) {
  if (log.initial.contains(v)) {
    RoundWitness w;
    w.element = v;
    w.basis = IntMat({v});
    w.lambda = RatVec(1);
    w.lambda[0] = 1;
    w.round = 0;
    return w;
  }
  for (const auto& r : log.rounds) {
    for (size_t i = 0; i < r.added.size(); ++i) {
      if (r.added[i] == v) return r.witnesses[i];
    }
  }
  return std::nullopt;
}

}  // namespace ibncut
