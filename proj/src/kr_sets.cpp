#include "admperm/kr_sets.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <thread>

#include "admperm/io.hpp"

namespace admperm {

namespace {

// Hull membership without certificate bookkeeping; the enumeration
// precomputation calls this on the order of a million times.
bool hull_member(const RootDatum& d, QVec v, const QVec& mu) {
  for (;;) {
    int found = 0;
    for (int i = 1; i <= d.rank; ++i)
      if (qvec_dot(d.simple_root(i), v) < Rat(0)) {
        found = i;
        break;
      }
    if (!found) break;
    v = qvec_sub(v, qvec_scaled(d.simple_coroot(found),
                                qvec_dot(d.simple_root(found), v)));
  }
  auto coeffs = d.coroot_solver().solve(qvec_sub(mu, v));
  if (!coeffs) throw std::invalid_argument("hull test outside mu + span of coroots");
  for (const Rat& c : *coeffs)
    if (c < Rat(0)) return false;
  return true;
}

SubwordTrace greedy_trace(const RootDatum& d, const WeylElt& u, const WeylElt& w) {
  SubwordTrace t;
  t.word_of_z1 = reduced_word(d, w);
  int npos = d.num_positive();
  WeylElt vinv = weyl_inverse(u);
  for (int i : t.word_of_z1) {
    bool apply = vinv.perm[d.base[i - 1]] >= npos;
    t.applied.push_back(apply);
    if (apply) vinv = weyl_mul(vinv, weyl_generator(d, i));
  }
  t.residue_word = reduced_word(d, weyl_inverse(vinv));
  return t;
}

void require_integral(const Coweight& mu, const char* who) {
  if (!mu.integral)
    throw std::invalid_argument(std::string(who) + ": mu is not in X_*");
}

std::string describe_mu(const RootDatum& d, const QVec& mu) {
  for (int i = 0; i < d.rank; ++i)
    if (mu == d.fundamental_coweights[i]) return "rho" + std::to_string(i + 1);
  if (qvec_is_zero(mu)) return "0";
  std::string s;
  for (const Rat& x : mu) {
    if (!s.empty()) s += ",";
    s += x.str();
  }
  return s;
}

}  // namespace

PermResult is_permissible(const RootDatum& datum, const Coweight& mu,
                          const ExtAffElt& x) {
  require_integral(mu, "is_permissible");
  PermResult res;
  // Condition (i): x(0) - mu lies in the coroot lattice.
  QVec x0 = aff_act(datum, x, QVec(datum.dim));
  auto coords = datum.coroot_solver().solve_integral(qvec_sub(x0, mu.vec));
  if (!coords) {
    res.failing_vertex = 0;
    res.failure = "x(0) - mu is not in the coroot lattice";
    return res;
  }
  // Condition (ii) against the dominant representative of mu (the orbit,
  // hence the hull, only depends on it).
  QVec mu_dom = dominant_representative(datum, mu.vec).dominant;
  PermCertificate cert;
  cert.translation_coords = *coords;
  std::vector<QVec> verts = alcove_vertices(datum);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    QVec disp = qvec_sub(aff_act(datum, x, verts[i]), verts[i]);
    auto h = in_hull(datum, disp, mu_dom);
    if (!h) {
      res.failing_vertex = static_cast<int>(i + 1);
      res.failure = "x(a_i) - a_i leaves the weight polytope at vertex " +
                    std::to_string(i + 1);
      return res;
    }
    cert.vertices.push_back(VertexMembership{disp, *h});
  }
  res.permissible = true;
  res.certificate = std::move(cert);
  return res;
}

HeLamPair helam_pair(const RootDatum& datum, const Coweight& mu, const ExtAffElt& x) {
  require_integral(mu, "helam_pair");
  std::vector<QVec> orb = orbit(datum, mu.vec);
  bool in_orbit = false;
  for (const QVec& p : orb)
    if (p == x.lambda) {
      in_orbit = true;
      break;
    }
  if (!in_orbit)
    throw std::invalid_argument("helam_pair: x is not in W t_mu W");

  WeylElt u = orbit_witness(datum, mu.vec, x.lambda);
  std::vector<int> I = stabilizer_simple_indices(datum, mu.vec);
  HeLamPair pair;
  pair.z1 = min_coset_rep(datum, weyl_mul(weyl_inverse(x.w), u), I, CosetSide::kLeft);
  pair.z2 = weyl_mul(x.w, pair.z1);

  // Postcondition of the bijection: z2 t_mu z1^{-1} reproduces x.
  ExtAffElt rebuilt = aff_mul(
      datum,
      aff_mul(datum, aff_from_finite(datum, pair.z2), aff_translation(datum, mu.vec)),
      aff_from_finite(datum, weyl_inverse(pair.z1)));
  if (rebuilt != x)
    throw std::logic_error("helam_pair: canonical pair does not rebuild x");

  pair.trace = greedy_trace(datum, pair.z2, pair.z1);
  pair.admissible = pair.trace.residue_word.empty();
  return pair;
}

bool is_admissible_helam(const RootDatum& datum, const Coweight& mu,
                         const ExtAffElt& x) {
  return helam_pair(datum, mu, x).admissible;
}

bool is_admissible_direct(const RootDatum& datum, const Coweight& mu,
                          const ExtAffElt& x) {
  require_integral(mu, "is_admissible_direct");
  for (const QVec& lambda : orbit(datum, mu.vec))
    if (aff_bruhat_le(datum, x, aff_translation(datum, lambda))) return true;
  return false;
}

bool haines_necessary(const RootDatum& datum, const Coweight& mu, const ExtAffElt& x) {
  require_integral(mu, "haines_necessary");
  QVec x0 = aff_act(datum, x, QVec(datum.dim));
  return aff_bruhat_le(datum, x, aff_translation(datum, x0));
}

// ---------------------------------------------------------------------------
// Enumeration

struct KrEnumerator::Impl {
  const RootDatum& datum;
  Coweight mu;
  EnumOptions opt;
  bool mu_zero = false;
  int mu_vertex = -1;  // 0-based index with a_{mu_vertex+1} == mu

  std::optional<GroupIndex> idx;
  std::vector<QVec> orbit_pts;
  std::map<QVec, int> orbit_lookup;
  std::vector<int> I_mu;
  std::vector<std::uint32_t> min_reps;

  struct VertexData {
    QVec a;
    std::vector<QVec> pts;
    std::vector<std::vector<uint16_t>> move;  // [generator][point]
    std::vector<uint16_t> T;                  // group id -> orbit point of a
    std::vector<std::vector<uint8_t>> mask;   // [lambda index][point]
  };
  std::vector<VertexData> vertices;
  bool perm_built = false;

  Impl(const RootDatum& d, const Coweight& m, const EnumOptions& o)
      : datum(d), mu(m), opt(o) {
    require_integral(mu, "enumerate");
    if (!is_dominant(datum, mu.vec))
      throw std::invalid_argument("enumerate: mu must be dominant");
    if (!is_minuscule(datum, mu))
      throw std::invalid_argument("enumerate: mu must be minuscule");
    if (opt.workers < 1) throw std::invalid_argument("enumerate: workers < 1");
    mu_zero = qvec_is_zero(mu.vec);
    if (!mu_zero) {
      // A nonzero dominant minuscule coweight is a fundamental coweight
      // with mark 1.
      for (int i = 0; i < datum.rank; ++i)
        if (mu.vec == datum.fundamental_coweights[i]) mu_vertex = i;
      if (mu_vertex < 0 || datum.marks[mu_vertex] != 1)
        throw std::invalid_argument("enumerate: unexpected minuscule coweight");
    }

    if (!opt.cache_dir.empty()) {
      auto cached = load_group_index_cache(opt.cache_dir, datum, true);
      if (cached) idx.emplace(std::move(*cached));
    }
    if (!idx) {
      idx.emplace(GroupIndex::build(datum, true, opt.budget_bytes));
      if (!opt.cache_dir.empty()) save_group_index_cache(opt.cache_dir, datum, *idx);
    }

    if (!mu_zero) {
      orbit_pts = orbit(datum, mu.vec);
      for (std::size_t k = 0; k < orbit_pts.size(); ++k)
        orbit_lookup.emplace(orbit_pts[k], static_cast<int>(k));
      I_mu = stabilizer_simple_indices(datum, mu.vec);
      for (std::uint32_t id = 0; id < idx->size(); ++id) {
        bool minimal = true;
        for (int i : I_mu)
          if (idx->length(idx->right_mul(id, i)) < idx->length(id)) {
            minimal = false;
            break;
          }
        if (minimal) min_reps.push_back(id);
      }
      if (min_reps.size() != orbit_pts.size())
        throw std::logic_error("|W^I| does not match the orbit size");
    }
  }

  void progress(const std::string& line) {
    if (opt.progress) opt.progress(line);
  }

  void build_perm_structures() {
    if (perm_built || mu_zero) return;
    std::vector<QVec> alcove = alcove_vertices(datum);
    vertices.resize(datum.rank);
    for (int vi = 0; vi < datum.rank; ++vi) {
      VertexData& vd = vertices[vi];
      vd.a = alcove[vi];
      vd.pts = orbit(datum, vd.a);
      std::map<QVec, int> lookup;
      for (std::size_t k = 0; k < vd.pts.size(); ++k) lookup.emplace(vd.pts[k], k);
      vd.move.assign(datum.rank, std::vector<uint16_t>(vd.pts.size()));
      for (int g = 1; g <= datum.rank; ++g)
        for (std::size_t k = 0; k < vd.pts.size(); ++k) {
          QVec img = qvec_sub(vd.pts[k],
                              qvec_scaled(datum.simple_coroot(g),
                                          qvec_dot(datum.simple_root(g), vd.pts[k])));
          vd.move[g - 1][k] = static_cast<uint16_t>(lookup.at(img));
        }
      // T by dynamic programming over BFS order: w = s_j * parent.
      vd.T.resize(idx->size());
      vd.T[0] = 0;
      for (std::uint32_t id = 1; id < idx->size(); ++id) {
        for (int j = 1; j <= datum.rank; ++j) {
          std::uint32_t down = idx->left_mul(j, id);
          if (idx->length(down) < idx->length(id)) {
            vd.T[id] = vd.move[j - 1][vd.T[down]];
            break;
          }
        }
      }
      // Membership of p + (lambda - a) in the weight polytope, per lambda.
      vd.mask.assign(orbit_pts.size(), std::vector<uint8_t>(vd.pts.size()));
      for (std::size_t li = 0; li < orbit_pts.size(); ++li) {
        QVec shift = qvec_sub(orbit_pts[li], vd.a);
        for (std::size_t k = 0; k < vd.pts.size(); ++k)
          vd.mask[li][k] =
              hull_member(datum, qvec_add(vd.pts[k], shift), mu.vec) ? 1 : 0;
      }
      progress("perm precompute: vertex " + std::to_string(vi + 1) + "/" +
               std::to_string(datum.rank) + " orbit " + std::to_string(vd.pts.size()));
    }
    perm_built = true;
  }

  bool perm_member(int lambda_idx, std::uint32_t wid) const {
    for (const VertexData& vd : vertices)
      if (!vd.mask[lambda_idx][vd.T[wid]]) return false;
    return true;
  }

  EnumReport base_report(const char* kind) const {
    EnumReport r;
    r.type_label = datum.type_label;
    r.mu_desc = describe_mu(datum, mu.vec);
    r.kind = kind;
    r.workers = opt.workers;
    return r;
  }

  EnumReport degenerate_report(const char* kind) const {
    EnumReport r = base_report(kind);
    r.cardinality = 1;  // both sets reduce to the identity when mu = 0
    if (opt.collect_elements || !opt.list_path.empty()) r.elements.push_back({0, 0});
    return r;
  }

  void maybe_write_list(EnumReport& r, const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open element stream: " + path);
    for (const auto& [li, wid] : r.elements)
      out << element_stream_line(datum, orbit_pts.empty() ? QVec(datum.dim)
                                                          : orbit_pts[li],
                                 idx->reduced_word(wid))
          << "\n";
    r.stream_location = path;
  }

  // Counts (and optionally collects) { z2 <= z1 } for every z1 in W^I.
  // subset_check, when nonnull, streams every admissible element through the
  // permissibility masks and collects violations.
  EnumReport run_adm(bool* subset_ok) {
    auto t0 = std::chrono::steady_clock::now();
    EnumReport r = base_report("adm");
    if (mu_zero) return degenerate_report("adm");

    bool keep_elements = opt.collect_elements || !opt.list_path.empty();
    bool collecting = keep_elements || subset_ok;
    std::map<std::string, unsigned long long> interval_cache;
    if (!opt.cache_dir.empty())
      interval_cache = load_interval_cache(opt.cache_dir, datum.type_label);

    std::size_t n_reps = min_reps.size();
    std::vector<unsigned long long> counts(n_reps, 0);
    std::vector<std::vector<std::pair<int, std::uint32_t>>> collected(
        keep_elements ? n_reps : 0);
    std::vector<uint8_t> subset_bad(n_reps, 0);
    std::vector<std::string> cache_keys(n_reps);

    const std::uint32_t n = idx->size();
    const auto* mu_T = subset_ok ? vertices[mu_vertex].T.data() : nullptr;
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};

    auto worker = [&]() {
      for (;;) {
        std::size_t k = next.fetch_add(1);
        if (k >= n_reps) return;
        std::uint32_t z1 = min_reps[k];
        std::vector<int> word = idx->reduced_word(z1);
        std::string key;
        for (int i : word) key += std::to_string(i) + ".";
        cache_keys[k] = key;

        auto hit = interval_cache.find(key);
        if (hit != interval_cache.end() && !collecting) {
          counts[k] = hit->second;
        } else {
          std::vector<int> z1inv_word = idx->reduced_word(idx->inverse(z1));
          unsigned long long c = 0;
          for (std::uint32_t u = 0; u < n; ++u) {
            std::uint32_t v = u;
            for (int i : word) {
              std::uint32_t sv = idx->left_mul(i, v);
              if (idx->length(sv) < idx->length(v)) v = sv;
            }
            if (v != 0) continue;
            ++c;
            if (!collecting) continue;
            // x = z2 t_mu z1^{-1} = t_{z2(mu)} (z2 z1^{-1}) with z2 = u.
            std::uint32_t wid = u;
            for (int i : z1inv_word) wid = idx->right_mul(wid, i);
            int li;
            if (mu_T) {
              li = mu_T[u];
            } else {
              QVec lam = act(datum, idx->element(datum, u), mu.vec);
              li = orbit_lookup.at(lam);
            }
            if (subset_ok && !perm_member(li, wid)) subset_bad[k] = 1;
            if (keep_elements) collected[k].push_back({li, wid});
          }
          counts[k] = c;
        }
        std::size_t d = done.fetch_add(1) + 1;
        progress("adm: interval " + std::to_string(d) + "/" +
                 std::to_string(n_reps) + " done");
      }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < opt.workers; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    unsigned long long total = 0;
    for (std::size_t k = 0; k < n_reps; ++k) {
      total += counts[k];
      interval_cache[cache_keys[k]] = counts[k];
    }
    r.cardinality = total;
    if (!opt.cache_dir.empty())
      save_interval_cache(opt.cache_dir, datum.type_label, interval_cache);

    if (subset_ok) {
      *subset_ok = true;
      for (uint8_t b : subset_bad)
        if (b) *subset_ok = false;
    }
    if (keep_elements) {
      for (auto& part : collected)
        r.elements.insert(r.elements.end(), part.begin(), part.end());
      std::sort(r.elements.begin(), r.elements.end());
      if (std::adjacent_find(r.elements.begin(), r.elements.end()) !=
          r.elements.end())
        throw std::logic_error("admissible elements are not pairwise distinct");
    }
    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }

  EnumReport run_perm() {
    auto t0 = std::chrono::steady_clock::now();
    EnumReport r = base_report("perm");
    if (mu_zero) return degenerate_report("perm");
    build_perm_structures();

    bool collecting = opt.collect_elements || !opt.list_path.empty();
    std::size_t n_lambda = orbit_pts.size();
    std::vector<unsigned long long> counts(n_lambda, 0);
    std::vector<std::vector<std::pair<int, std::uint32_t>>> collected(
        collecting ? n_lambda : 0);
    const std::uint32_t n = idx->size();
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
      for (;;) {
        std::size_t li = next.fetch_add(1);
        if (li >= n_lambda) return;
        unsigned long long c = 0;
        for (std::uint32_t id = 0; id < n; ++id) {
          if (!perm_member(static_cast<int>(li), id)) continue;
          ++c;
          if (collecting) collected[li].push_back({static_cast<int>(li), id});
        }
        counts[li] = c;
        progress("perm: translation " + std::to_string(li + 1) + "/" +
                 std::to_string(n_lambda) + " done");
      }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < opt.workers; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (unsigned long long c : counts) r.cardinality += c;
    if (collecting) {
      for (auto& part : collected)
        r.elements.insert(r.elements.end(), part.begin(), part.end());
      std::sort(r.elements.begin(), r.elements.end());
    }
    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
};

KrEnumerator::KrEnumerator(const RootDatum& datum, const Coweight& mu,
                           const EnumOptions& options)
    : impl_(std::make_unique<Impl>(datum, mu, options)) {}

KrEnumerator::~KrEnumerator() = default;

const GroupIndex& KrEnumerator::index() const { return *impl_->idx; }

EnumReport KrEnumerator::enumerate_adm() {
  EnumReport r = impl_->run_adm(nullptr);
  impl_->maybe_write_list(r, impl_->opt.list_path);
  return r;
}

EnumReport KrEnumerator::enumerate_perm() {
  EnumReport r = impl_->run_perm();
  impl_->maybe_write_list(r, impl_->opt.list_path);
  return r;
}

BothReport KrEnumerator::enumerate_both() {
  BothReport b;
  b.perm = impl_->run_perm();
  if (!impl_->opt.list_path.empty())
    impl_->maybe_write_list(b.perm, impl_->opt.list_path + ".perm");
  if (impl_->mu_zero) {
    b.adm = impl_->degenerate_report("adm");
    b.subset_ok = true;
    b.difference = 0;
    return b;
  }
  bool subset_ok = false;
  impl_->build_perm_structures();
  b.adm = impl_->run_adm(&subset_ok);
  if (!impl_->opt.list_path.empty())
    impl_->maybe_write_list(b.adm, impl_->opt.list_path + ".adm");
  b.subset_ok = subset_ok;
  b.difference = b.perm.cardinality - b.adm.cardinality;
  return b;
}

EnumReport enumerate_adm(const RootDatum& datum, const Coweight& mu,
                         const EnumOptions& options) {
  return KrEnumerator(datum, mu, options).enumerate_adm();
}

EnumReport enumerate_perm(const RootDatum& datum, const Coweight& mu,
                          const EnumOptions& options) {
  return KrEnumerator(datum, mu, options).enumerate_perm();
}

// ---------------------------------------------------------------------------
// Counterexample verification

namespace {

QVec qv(std::initializer_list<const char*> entries) {
  QVec v;
  for (const char* e : entries) v.push_back(Rat::parse(e));
  return v;
}

struct CaseData {
  std::string label;
  int mu_index;  // fundamental coweight index (1-based)
  std::vector<int> w1_word;
  std::vector<int> w2_word;
  std::size_t orbit_size;
  QVec orbit_reference_point;
  std::vector<std::vector<int>> matrix4;  // 4 * matrix of w2 w1^{-1}
  std::vector<QVec> vertex_displacements;
};

CaseData case_data(CounterexampleCase c) {
  if (c == CounterexampleCase::kE6) {
    CaseData d;
    d.label = "E6";
    d.mu_index = 1;
    d.w1_word = {2, 4, 5, 6, 3, 4, 5, 2, 4, 3, 1};
    d.w2_word = {4, 5, 6, 2, 4, 5};
    d.orbit_size = 27;
    d.orbit_reference_point =
        qv({"-1/2", "-1/2", "-1/2", "-1/2", "-1/2", "-1/6", "-1/6", "1/6"});
    d.matrix4 = {{-1, 3, -1, -1, -1, 1, 1, -1}, {-3, 1, 1, 1, 1, -1, -1, 1},
                 {1, 1, 1, 1, -3, -1, -1, 1},   {1, 1, 1, -3, 1, -1, -1, 1},
                 {1, 1, -3, 1, 1, -1, -1, 1},   {1, 1, 1, 1, 1, 3, -1, 1},
                 {1, 1, 1, 1, 1, -1, 3, 1},     {-1, -1, -1, -1, -1, 1, 1, 3}};
    d.vertex_displacements = {
        qv({"-1/2", "1/2", "1/2", "1/2", "1/2", "-1/6", "-1/6", "1/6"}),
        qv({"-1/2", "0", "0", "0", "0", "-1/6", "-1/6", "1/6"}),
        qv({"0", "1/2", "0", "0", "0", "-1/6", "-1/6", "1/6"}),
        qv({"-1/2", "1/2", "-1/6", "-1/6", "-1/6", "-1/6", "-1/6", "1/6"}),
        qv({"-1/2", "1/2", "0", "-1/2", "0", "-1/6", "-1/6", "1/6"}),
        qv({"-1/2", "1/2", "-1/2", "1/2", "-1/2", "-1/6", "-1/6", "1/6"}),
        qv({"0", "0", "0", "0", "0", "-2/3", "-2/3", "2/3"})};
    return d;
  }
  CaseData d;
  d.label = "E7";
  d.mu_index = 7;
  d.w1_word = {2, 4, 5, 3, 4, 1, 3, 2, 4, 5, 6, 7};
  d.w2_word = {4, 3, 2, 4, 1, 3};
  d.orbit_size = 56;
  d.orbit_reference_point =
      qv({"-1/2", "1/2", "-1/2", "1/2", "1/2", "1/2", "0", "0"});
  d.matrix4 = {{-1, 1, -1, 3, 1, 1, 1, -1},   {1, -1, -3, 1, -1, -1, -1, 1},
               {3, 1, -1, -1, 1, 1, 1, -1},   {1, -1, 1, 1, 3, -1, -1, 1},
               {1, -1, 1, 1, -1, 3, -1, 1},   {-1, -3, -1, -1, 1, 1, 1, -1},
               {1, -1, 1, 1, -1, -1, 3, 1},   {-1, 1, -1, -1, 1, 1, 1, 3}};
  d.vertex_displacements = {
      qv({"-1/4", "1/4", "-1/4", "1/4", "1/4", "3/4", "-1/4", "1/4"}),
      qv({"-1/4", "-1/4", "-1/4", "1/4", "1/4", "1/4", "-1/4", "1/4"}),
      qv({"1/6", "-1/6", "-1/2", "1/6", "1/6", "1/2", "-1/3", "1/3"}),
      qv({"0", "0", "-1/2", "1/4", "1/4", "1/2", "-1/4", "1/4"}),
      qv({"1/6", "1/6", "-1/6", "1/6", "1/6", "1/2", "-1/3", "1/3"}),
      qv({"0", "0", "0", "1/2", "0", "1/2", "-1/2", "1/2"}),
      qv({"0", "0", "0", "0", "1", "0", "-1/2", "1/2"}),
      qv({"0", "0", "0", "0", "0", "1", "-1/2", "1/2"})};
  return d;
}

}  // namespace

CounterexampleReport verify_counterexample(CounterexampleCase c,
                                           const std::vector<int>* override_w2_word) {
  CaseData data = case_data(c);
  CounterexampleReport report;
  report.case_label = data.label;
  report.datum = std::make_shared<RootDatum>(build_root_datum(data.label));
  const RootDatum& d = *report.datum;

  report.mu = make_coweight(d, d.fundamental_coweights[data.mu_index - 1]);
  const QVec& mu = report.mu.vec;
  WeylElt w1 = from_word(d, data.w1_word);
  std::vector<int> w2_word = override_w2_word ? *override_w2_word : data.w2_word;
  WeylElt w2 = from_word(d, w2_word);
  report.x = aff_mul(
      d, aff_mul(d, aff_from_finite(d, w2), aff_translation(d, mu)),
      aff_from_finite(d, weyl_inverse(w1)));

  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    report.checks.push_back(SubCheck{name, pass, detail});
  };

  add("mu integral dominant minuscule",
      report.mu.integral && is_dominant(d, mu) && is_minuscule(d, report.mu),
      "mu = " + describe_mu(d, mu));

  std::vector<QVec> orb = orbit(d, mu);
  add("orbit size", orb.size() == data.orbit_size,
      "got " + std::to_string(orb.size()) + ", reference " +
          std::to_string(data.orbit_size));
  bool ref_in_orbit = false;
  for (const QVec& p : orb)
    if (p == data.orbit_reference_point) ref_in_orbit = true;
  add("orbit contains reference point", ref_in_orbit, "");

  add("w1 word reduced",
      length(d, w1) == static_cast<int>(data.w1_word.size()),
      "length " + std::to_string(length(d, w1)));

  WeylElt w2w1inv = weyl_mul(w2, weyl_inverse(w1));
  add("x equals t_mu w2 w1^{-1}",
      report.x == ExtAffElt{mu, w2w1inv} || act(d, w2, mu) != mu,
      act(d, w2, mu) == mu ? "w2 fixes mu" : "w2 moves mu (override)");

  QMatrix m = matrix_of(d, w2w1inv);
  QMatrix ref(d.dim, QVec(d.dim));
  for (int r = 0; r < d.dim; ++r)
    for (int cq = 0; cq < d.dim; ++cq)
      ref[r][cq] = Rat(data.matrix4[r][cq], 4);
  add("matrix of w2 w1^{-1}", m == ref, "8x8 comparison, exact");

  std::vector<QVec> verts = alcove_vertices(d);
  bool verts_ok = verts.size() == data.vertex_displacements.size();
  std::string vdetail;
  for (std::size_t i = 0; verts_ok && i < verts.size(); ++i) {
    QVec disp = qvec_sub(aff_act(d, report.x, verts[i]), verts[i]);
    if (disp != data.vertex_displacements[i]) {
      verts_ok = false;
      vdetail = "mismatch at vertex " + std::to_string(i + 1);
    }
  }
  add("vertex displacements match reference", verts_ok, vdetail);

  report.perm = is_permissible(d, report.mu, report.x);
  add("x is mu-permissible", report.perm.permissible, report.perm.failure);

  std::vector<int> I = stabilizer_simple_indices(d, mu);
  add("w1 minimal in w1 W_I(mu)",
      min_coset_rep(d, w1, I, CosetSide::kLeft) == w1, "");

  bool w2_le_w1 = bruhat_le(d, w2, w1);
  add("w2 <= w1 is false", !w2_le_w1, "");
  add("inverse comparison agrees",
      bruhat_le(d, weyl_inverse(w2), weyl_inverse(w1)) == w2_le_w1, "");

  report.pair = helam_pair(d, report.mu, report.x);
  add("canonical pair is (w1, w2)",
      report.pair.z1 == w1 && report.pair.z2 == w2, "");
  add("x not admissible (He-Lam)", !report.pair.admissible, "");
  add("x not admissible (direct search)",
      !is_admissible_direct(d, report.mu, report.x), "");

  report.haines = haines_necessary(d, report.mu, report.x);
  add("x <= t_{x(0)} is false (Haines)", !report.haines, "");

  report.all_pass = true;
  for (const SubCheck& sc : report.checks)
    if (!sc.pass) report.all_pass = false;
  return report;
}

}  // namespace admperm
