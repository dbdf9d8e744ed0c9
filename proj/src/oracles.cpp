#include "admperm/oracles.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace admperm {

namespace {

// All reflections, one per positive root.
std::vector<WeylElt> reflections(const RootDatum& d) {
  std::vector<WeylElt> out;
  for (int r = 0; r < d.num_positive(); ++r) {
    WeylElt t;
    t.perm.resize(d.num_roots());
    for (int s = 0; s < d.num_roots(); ++s) {
      QVec img = qvec_sub(d.roots[s],
                          qvec_scaled(d.roots[r], qvec_dot(d.roots[s], d.coroots[r])));
      t.perm[s] = static_cast<uint16_t>(d.root_index(img));
    }
    out.push_back(t);
  }
  return out;
}

}  // namespace

BruhatOracle::BruhatOracle(const RootDatum& datum) : datum_(datum) {
  // Enumerate W by closure under the generators.
  elements_.push_back(weyl_identity(datum));
  lookup_.emplace(elements_[0].perm, 0);
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    WeylElt cur = elements_[k];
    for (int i = 1; i <= datum.rank; ++i) {
      WeylElt img = weyl_mul(cur, weyl_generator(datum, i));
      if (lookup_.emplace(img.perm, static_cast<int>(elements_.size())).second)
        elements_.push_back(img);
    }
  }
  int n = static_cast<int>(elements_.size());

  std::vector<int> len(n);
  for (int k = 0; k < n; ++k) len[k] = length(datum, elements_[k]);
  std::vector<int> order(n);
  for (int k = 0; k < n; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return len[a] < len[b]; });

  // Covers: u is covered by w iff w = u t_alpha with l(w) = l(u) + 1;
  // the Bruhat order is the transitive closure.
  std::vector<WeylElt> refl = reflections(datum);
  le_.assign(n, std::vector<bool>(n, false));
  for (int k = 0; k < n; ++k) le_[k][k] = true;
  for (int w : order) {
    if (len[w] == 0) continue;
    for (const WeylElt& t : refl) {
      WeylElt u = weyl_mul(elements_[w], t);
      if (length(datum, u) != len[w] - 1) continue;
      int ui = lookup_.at(u.perm);
      for (int v = 0; v < n; ++v)
        if (le_[v][ui]) le_[v][w] = true;
    }
  }
}

int BruhatOracle::index_of(const WeylElt& w) const {
  auto it = lookup_.find(w.perm);
  if (it == lookup_.end()) throw std::invalid_argument("element not in oracle");
  return it->second;
}

namespace {

// One-dimensional nullspace of the given rows, if it exists.
std::optional<QVec> unique_normal(std::vector<QVec> rows, int m) {
  // Row-reduce, then read the single free column.
  int rank = 0;
  std::vector<int> pivot_of_col(m, -1);
  for (int col = 0; col < m && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (!rows[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    Rat inv = Rat(1) / rows[rank][col];
    for (int c = 0; c < m; ++c) rows[rank][c] *= inv;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Rat f = rows[r][col];
      for (int c = 0; c < m; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  if (rank != m - 1) return std::nullopt;
  int free_col = -1;
  for (int c = 0; c < m; ++c)
    if (pivot_of_col[c] < 0) free_col = c;
  QVec n(m);
  n[free_col] = Rat(1);
  for (int c = 0; c < m; ++c)
    if (pivot_of_col[c] >= 0) n[c] = -rows[pivot_of_col[c]][free_col];
  // Canonical scale: first nonzero entry +1.
  for (int c = 0; c < m; ++c)
    if (!n[c].is_zero()) {
      Rat inv = Rat(1) / n[c];
      for (int k = 0; k < m; ++k) n[k] *= inv;
      break;
    }
  return n;
}

}  // namespace

HullOracle::HullOracle(const RootDatum& datum, const QVec& mu) : datum_(datum) {
  std::vector<QVec> pts;
  for (const QVec& p : orbit(datum, mu)) {
    auto coords = datum.coroot_solver().solve(p);
    if (!coords) throw std::invalid_argument("HullOracle: orbit leaves coroot span");
    pts.push_back(*coords);
  }
  int m = datum.rank;
  int npts = static_cast<int>(pts.size());

  std::set<std::pair<QVec, Rat>> seen;
  std::vector<int> comb(m);
  // Every size-m subset of orbit points; the affinely spanning ones give
  // candidate support hyperplanes.
  auto process = [&](const std::vector<int>& subset) {
    std::vector<QVec> rows;
    for (int k = 1; k < m; ++k)
      rows.push_back(qvec_sub(pts[subset[k]], pts[subset[0]]));
    auto normal = unique_normal(rows, m);
    if (!normal) return;
    Rat c = qvec_dot(*normal, pts[subset[0]]);
    bool all_ge = true, all_le = true;
    for (const QVec& p : pts) {
      Rat v = qvec_dot(*normal, p);
      if (v < c) all_ge = false;
      if (v > c) all_le = false;
    }
    if (all_ge) {
      if (seen.emplace(*normal, c).second) {
        normals_.push_back(*normal);
        offsets_.push_back(c);
      }
    } else if (all_le) {
      QVec neg = qvec_neg(*normal);
      if (seen.emplace(neg, -c).second) {
        normals_.push_back(neg);
        offsets_.push_back(-c);
      }
    }
  };
  std::vector<int> subset(m);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == m) {
      process(subset);
      return;
    }
    for (int i = start; i <= npts - (m - depth); ++i) {
      subset[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  if (normals_.empty()) throw std::logic_error("HullOracle: no supporting hyperplanes");
}

bool HullOracle::member(const QVec& v) const {
  auto coords = datum_.coroot_solver().solve(v);
  if (!coords) throw std::invalid_argument("HullOracle: point leaves coroot span");
  for (std::size_t k = 0; k < normals_.size(); ++k)
    if (qvec_dot(normals_[k], *coords) < offsets_[k]) return false;
  return true;
}

std::vector<std::pair<ExtAffElt, int>> affine_ball(const RootDatum& datum,
                                                   int max_len) {
  std::vector<ExtAffElt> gens;
  for (int i = 0; i <= datum.rank; ++i) gens.push_back(aff_generator(datum, i));

  using Key = std::pair<QVec, std::vector<uint16_t>>;
  std::map<Key, int> dist;
  std::vector<std::pair<ExtAffElt, int>> out;
  ExtAffElt e = aff_identity(datum);
  dist.emplace(Key{e.lambda, e.w.perm}, 0);
  out.push_back({e, 0});
  for (std::size_t k = 0; k < out.size(); ++k) {
    auto [cur, d] = out[k];
    if (d == max_len) continue;
    for (const ExtAffElt& g : gens) {
      ExtAffElt img = aff_mul(datum, g, cur);
      if (dist.emplace(Key{img.lambda, img.w.perm}, d + 1).second)
        out.push_back({img, d + 1});
    }
  }
  return out;
}

bool check_minuscule_coset_fact(const RootDatum& datum, const QVec& mu,
                                std::string* detail) {
  std::vector<QVec> orb = orbit(datum, mu);
  std::set<QVec> orbit_set(orb.begin(), orb.end());
  std::vector<QVec> coords;
  for (const QVec& p : orb) coords.push_back(*datum.coroot_solver().solve(p));
  QVec mu_coords = *datum.coroot_solver().solve(mu);

  // Points of the hull have coroot coordinates inside the componentwise
  // range of the orbit, so the box below covers all candidates.
  int m = datum.rank;
  std::vector<long long> lo(m), hi(m);
  for (int j = 0; j < m; ++j) {
    Rat mn = coords[0][j], mx = coords[0][j];
    for (const QVec& c : coords) {
      if (c[j] < mn) mn = c[j];
      if (mx < c[j]) mx = c[j];
    }
    lo[j] = (mn - mu_coords[j]).floor();
    hi[j] = -((mu_coords[j] - mx).floor());
  }

  std::vector<long long> k(m, 0);
  for (int j = 0; j < m; ++j) k[j] = lo[j];
  for (;;) {
    QVec lambda = mu;
    for (int j = 0; j < m; ++j)
      lambda = qvec_add(lambda, qvec_scaled(datum.simple_coroot(j + 1), Rat(k[j])));
    bool hull = in_hull(datum, lambda, mu).has_value();
    bool in_orbit = orbit_set.count(lambda) > 0;
    if (hull != in_orbit) {
      if (detail) {
        *detail = "lattice point ";
        for (const Rat& x : lambda) *detail += x.str() + " ";
        *detail += hull ? "in hull but outside orbit" : "in orbit but outside hull";
      }
      return false;
    }
    int j = 0;
    while (j < m && k[j] == hi[j]) {
      k[j] = lo[j];
      ++j;
    }
    if (j == m) break;
    ++k[j];
  }
  return true;
}

std::vector<QVec> sample_coroot_span(const RootDatum& datum, int count,
                                     std::uint64_t seed) {
  std::vector<QVec> out;
  std::uint64_t state = seed;
  auto next = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  for (int n = 0; n < count; ++n) {
    QVec v(datum.dim);
    for (int i = 1; i <= datum.rank; ++i) {
      long long num = static_cast<long long>(next() % 17) - 8;
      long long den = 1 + static_cast<long long>(next() % 3);
      v = qvec_add(v, qvec_scaled(datum.simple_coroot(i), Rat(num, den)));
    }
    out.push_back(v);
  }
  return out;
}

namespace {

struct SuiteRunner {
  std::ostream& out;
  bool ok = true;

  bool report(const std::string& line, bool pass, const std::string& why = "") {
    out << (pass ? "ok   " : "FAIL ") << line;
    if (!pass && !why.empty()) out << " -- " << why;
    out << "\n";
    if (!pass) ok = false;
    return pass;
  }
};

std::vector<std::string> types_up_to_rank(int max_rank) {
  std::vector<std::string> all = {"A1", "A2", "A3", "A4", "B3", "C2", "C3", "D4"};
  std::vector<std::string> out;
  for (const std::string& t : all)
    if (t[1] - '0' <= max_rank) out.push_back(t);
  return out;
}

std::vector<int> minuscule_indices(const RootDatum& d) {
  std::vector<int> out;
  for (int i = 0; i < d.rank; ++i)
    if (d.marks[i] == 1) out.push_back(i + 1);
  return out;
}

}  // namespace

bool run_crosscheck_suites(const CrosscheckOptions& options, std::ostream& out) {
  SuiteRunner run{out};

  // (a) greedy subword Bruhat test against the cover-closure oracle,
  // all pairs, both the permutation path and the table path.
  for (const std::string& t : {"A2", "A3", "B3", "C3"}) {
    if (t[1] - '0' > options.max_rank) continue;
    RootDatum d = build_root_datum(t);
    BruhatOracle oracle(d);
    GroupIndex idx = GroupIndex::build(d, true);
    int n = static_cast<int>(oracle.elements().size());
    bool pass = true;
    std::string why;
    for (int u = 0; u < n && pass; ++u) {
      std::uint32_t uid = idx.id_of(d, oracle.elements()[u]);
      for (int w = 0; w < n && pass; ++w) {
        bool expect = oracle.le(u, w);
        if (bruhat_le(d, oracle.elements()[u], oracle.elements()[w]) != expect ||
            idx.bruhat_le_ids(uid, idx.id_of(d, oracle.elements()[w])) != expect) {
          pass = false;
          why = "pair (" + std::to_string(u) + "," + std::to_string(w) + ")";
        }
      }
    }
    if (!run.report("(a) Bruhat greedy == cover-closure oracle [" + t + "], " +
                        std::to_string(n * n) + " pairs",
                    pass, why))
      return false;
  }

  // (b) dominance hull test against the half-space oracle on sample grids.
  for (const std::string& t : {"A2", "A3", "C2"}) {
    RootDatum d = build_root_datum(t);
    for (int fi = 1; fi <= d.rank; ++fi) {
      const QVec& mu = d.fundamental_coweights[fi - 1];
      HullOracle oracle(d, mu);
      std::vector<QVec> samples =
          sample_coroot_span(d, options.hull_samples, 0x5eed0000 + fi);
      for (const QVec& p : orbit(d, mu)) samples.push_back(p);  // boundary cases
      samples.push_back(QVec(d.dim));
      bool pass = true;
      std::string why;
      for (const QVec& v : samples) {
        if (in_hull(d, v, mu).has_value() != oracle.member(v)) {
          pass = false;
          why = "sample disagrees";
          break;
        }
      }
      if (!run.report("(b) hull dominance == facet oracle [" + t + " rho" +
                          std::to_string(fi) + "], " +
                          std::to_string(samples.size()) + " samples, " +
                          std::to_string(oracle.num_constraints()) + " facets",
                      pass, why))
        return false;
    }
  }

  // (c) He-Lam criterion against the direct Bruhat search, exhaustively on
  // W t_mu W.
  for (const std::string& t : {"A2", "A3", "C2"}) {
    RootDatum d = build_root_datum(t);
    BruhatOracle all(d);
    for (int mi : minuscule_indices(d)) {
      Coweight mu = make_coweight(d, d.fundamental_coweights[mi - 1]);
      std::vector<QVec> orb = orbit(d, mu.vec);
      bool pass = true;
      std::string why;
      long long checked = 0;
      for (const QVec& lambda : orb) {
        for (const WeylElt& w : all.elements()) {
          ExtAffElt x = aff_make(d, lambda, w);
          ++checked;
          if (is_admissible_helam(d, mu, x) != is_admissible_direct(d, mu, x)) {
            pass = false;
            why = "element disagrees";
            break;
          }
        }
        if (!pass) break;
      }
      if (!run.report("(c) He-Lam == direct search [" + t + " rho" +
                          std::to_string(mi) + "], " + std::to_string(checked) +
                          " elements",
                      pass, why))
        return false;
    }
  }

  // (d) Iwahori-Matsumoto length against affine Cayley BFS distance.
  for (const std::string& t : {"A2", "C2"}) {
    RootDatum d = build_root_datum(t);
    auto ball = affine_ball(d, options.affine_radius);
    bool pass = true;
    std::string why;
    for (const auto& [x, dist] : ball) {
      if (im_length(d, x) != dist) {
        pass = false;
        why = "distance " + std::to_string(dist) + " vs length " +
              std::to_string(im_length(d, x));
        break;
      }
    }
    if (!run.report("(d) IM length == BFS distance [affine " + t + "], " +
                        std::to_string(ball.size()) + " elements",
                    pass, why))
      return false;
  }

  // (e) the minuscule coset fact P_mu intersect (mu + Q^vee) = W mu.
  for (const std::string& t : types_up_to_rank(4)) {
    RootDatum d = build_root_datum(t);
    for (int mi : minuscule_indices(d)) {
      std::string why;
      bool pass = check_minuscule_coset_fact(d, d.fundamental_coweights[mi - 1], &why);
      if (!run.report("(e) hull lattice points == orbit [" + t + " rho" +
                          std::to_string(mi) + "]",
                      pass, why))
        return false;
    }
  }

  // (f) Adm(mu) == Perm(mu) elementwise on the classical types.
  for (const std::string& t : types_up_to_rank(4)) {
    RootDatum d = build_root_datum(t);
    for (int mi : minuscule_indices(d)) {
      Coweight mu = make_coweight(d, d.fundamental_coweights[mi - 1]);
      EnumOptions opt;
      opt.collect_elements = true;
      KrEnumerator en(d, mu, opt);
      EnumReport adm = en.enumerate_adm();
      EnumReport perm = en.enumerate_perm();
      bool pass = adm.elements == perm.elements &&
                  adm.cardinality == perm.cardinality &&
                  adm.cardinality == adm.elements.size();
      if (!run.report("(f) Adm == Perm elementwise [" + t + " rho" +
                          std::to_string(mi) + "], " +
                          std::to_string(adm.cardinality) + " elements",
                      pass, "cardinalities " + std::to_string(adm.cardinality) +
                                " vs " + std::to_string(perm.cardinality)))
        return false;
    }
  }

  return run.ok;
}

}  // namespace admperm
