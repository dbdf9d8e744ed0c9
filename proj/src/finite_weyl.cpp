#include "admperm/finite_weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace admperm {

namespace {

// Reflection on the cocharacter side: s_i(v) = v - <alpha_i, v> alpha_i^vee.
QVec reflect_cochar(const RootDatum& d, int i, const QVec& v) {
  return qvec_sub(v, qvec_scaled(d.simple_coroot(i), qvec_dot(d.simple_root(i), v)));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_key(const std::int32_t* key, int dim) {
  std::uint64_t h = 0x2545f4914f6cdd1dULL;
  for (int j = 0; j < dim; ++j) h = splitmix64(h ^ static_cast<std::uint32_t>(key[j]));
  return h;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

}  // namespace

WeylElt weyl_identity(const RootDatum& datum) {
  WeylElt w;
  w.perm.resize(datum.num_roots());
  for (int r = 0; r < datum.num_roots(); ++r) w.perm[r] = static_cast<uint16_t>(r);
  return w;
}

WeylElt weyl_generator(const RootDatum& datum, int i) {
  if (i < 1 || i > datum.rank)
    throw std::invalid_argument("simple reflection index out of range");
  WeylElt w;
  w.perm = datum.simple_perms[i - 1];
  return w;
}

WeylElt weyl_mul(const WeylElt& u, const WeylElt& w) {
  WeylElt r;
  r.perm.resize(w.perm.size());
  for (std::size_t i = 0; i < w.perm.size(); ++i) r.perm[i] = u.perm[w.perm[i]];
  return r;
}

WeylElt weyl_inverse(const WeylElt& w) {
  WeylElt r;
  r.perm.resize(w.perm.size());
  for (std::size_t i = 0; i < w.perm.size(); ++i) r.perm[w.perm[i]] = static_cast<uint16_t>(i);
  return r;
}

WeylElt from_word(const RootDatum& datum, const std::vector<int>& word) {
  WeylElt w = weyl_identity(datum);
  for (int i : word) w = weyl_mul(w, weyl_generator(datum, i));
  return w;
}

int length(const RootDatum& datum, const WeylElt& w) {
  int npos = datum.num_positive();
  int n = 0;
  for (int r = 0; r < npos; ++r)
    if (w.perm[r] >= npos) ++n;
  return n;
}

std::vector<int> reduced_word(const RootDatum& datum, const WeylElt& w) {
  // i is a left descent iff w^{-1}(alpha_i) < 0; peel the smallest one.
  std::vector<int> word;
  WeylElt winv = weyl_inverse(w);
  int npos = datum.num_positive();
  for (;;) {
    int found = 0;
    for (int i = 1; i <= datum.rank; ++i) {
      if (winv.perm[datum.base[i - 1]] >= npos) {
        found = i;
        break;
      }
    }
    if (!found) break;
    word.push_back(found);
    // w := s_found * w, so w^{-1} := w^{-1} * s_found.
    winv = weyl_mul(winv, weyl_generator(datum, found));
  }
  if (!winv.is_identity())
    throw std::logic_error("reduced_word: descent extraction did not terminate at e");
  return word;
}

QVec act(const RootDatum& datum, const WeylElt& w, const QVec& v) {
  if (static_cast<int>(v.size()) != datum.dim)
    throw std::invalid_argument("act: dimension mismatch");
  // w(v) is determined by <alpha_i, w(v)> = <w^{-1}(alpha_i), v> on the span
  // of the coroots; the orthogonal complement is fixed pointwise.
  WeylElt winv = weyl_inverse(w);
  QVec result(datum.dim);
  QVec complement = v;
  for (int i = 1; i <= datum.rank; ++i) {
    const QVec& pre = datum.roots[winv.perm[datum.base[i - 1]]];
    result = qvec_add(result, qvec_scaled(datum.fundamental_coweights[i - 1],
                                          qvec_dot(pre, v)));
    complement = qvec_sub(complement,
                          qvec_scaled(datum.fundamental_coweights[i - 1],
                                      qvec_dot(datum.simple_root(i), v)));
  }
  return qvec_add(result, complement);
}

QMatrix matrix_of(const RootDatum& datum, const WeylElt& w) {
  QMatrix m(datum.dim, QVec(datum.dim));
  for (int c = 0; c < datum.dim; ++c) {
    QVec e(datum.dim);
    e[c] = Rat(1);
    QVec img = act(datum, w, e);
    for (int r = 0; r < datum.dim; ++r) m[r][c] = img[r];
  }
  return m;
}

bool bruhat_le(const RootDatum& datum, const WeylElt& u, const WeylElt& w) {
  std::vector<int> word = reduced_word(datum, w);
  int npos = datum.num_positive();
  // Track v^{-1} only: i is a left descent of v iff v^{-1}(alpha_i) < 0,
  // and (s_i v)^{-1} = v^{-1} s_i.
  WeylElt vinv = weyl_inverse(u);
  for (int i : word) {
    if (vinv.perm[datum.base[i - 1]] >= npos)
      vinv = weyl_mul(vinv, weyl_generator(datum, i));
  }
  return vinv.is_identity();
}

WeylElt min_coset_rep(const RootDatum& datum, const WeylElt& w,
                      const std::vector<int>& I, CosetSide side) {
  for (int i : I)
    if (i < 1 || i > datum.rank)
      throw std::invalid_argument("min_coset_rep: index out of range");
  std::vector<int> sorted(I);
  std::sort(sorted.begin(), sorted.end());
  int npos = datum.num_positive();
  WeylElt cur = w;
  if (side == CosetSide::kLeft) {
    for (;;) {
      int found = 0;
      for (int i : sorted)
        if (cur.perm[datum.base[i - 1]] >= npos) {  // right descent
          found = i;
          break;
        }
      if (!found) return cur;
      cur = weyl_mul(cur, weyl_generator(datum, found));
    }
  }
  for (;;) {
    WeylElt curinv = weyl_inverse(cur);
    int found = 0;
    for (int i : sorted)
      if (curinv.perm[datum.base[i - 1]] >= npos) {  // left descent
        found = i;
        break;
      }
    if (!found) return cur;
    cur = weyl_mul(weyl_generator(datum, found), cur);
  }
}

std::vector<QVec> orbit(const RootDatum& datum, const QVec& mu) {
  std::map<QVec, int> seen;
  std::vector<QVec> points;
  seen.emplace(mu, 0);
  points.push_back(mu);
  for (std::size_t k = 0; k < points.size(); ++k) {
    QVec cur = points[k];
    for (int i = 1; i <= datum.rank; ++i) {
      QVec img = reflect_cochar(datum, i, cur);
      if (seen.emplace(img, static_cast<int>(points.size())).second)
        points.push_back(img);
    }
  }
  return points;
}

WeylElt orbit_witness(const RootDatum& datum, const QVec& mu, const QVec& lambda) {
  struct Node {
    QVec point;
    int parent;
    int gen;
  };
  std::map<QVec, int> seen;
  std::vector<Node> nodes;
  seen.emplace(mu, 0);
  nodes.push_back({mu, -1, 0});
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    QVec cur = nodes[k].point;
    for (int i = 1; i <= datum.rank; ++i) {
      QVec img = reflect_cochar(datum, i, cur);
      if (seen.emplace(img, static_cast<int>(nodes.size())).second)
        nodes.push_back({img, static_cast<int>(k), i});
    }
  }
  auto it = seen.find(lambda);
  if (it == seen.end())
    throw std::invalid_argument("orbit_witness: lambda is not in the orbit");
  // Walking up the tree reads lambda = s_{g1} s_{g2} ... s_{gk} (mu), so the
  // witness composes the generators outermost-first.
  WeylElt u = weyl_identity(datum);
  for (int idx = it->second; nodes[idx].parent >= 0; idx = nodes[idx].parent)
    u = weyl_mul(u, weyl_generator(datum, nodes[idx].gen));
  return u;
}

std::vector<int> stabilizer_simple_indices(const RootDatum& datum, const QVec& mu) {
  std::vector<int> I;
  for (int i = 1; i <= datum.rank; ++i)
    if (qvec_dot(datum.simple_root(i), mu).is_zero()) I.push_back(i);
  return I;
}

WeylElt longest_element(const RootDatum& datum, const std::vector<int>& I) {
  QVec v(datum.dim);
  for (int i : I) v = qvec_sub(v, datum.fundamental_coweights[i - 1]);
  WeylElt w = weyl_identity(datum);
  for (;;) {
    int found = 0;
    for (int i : I)
      if (qvec_dot(datum.simple_root(i), v) < Rat(0)) {
        found = i;
        break;
      }
    if (!found) return w;
    v = reflect_cochar(datum, found, v);
    w = weyl_mul(weyl_generator(datum, found), w);
  }
}

DominantRep dominant_representative(const RootDatum& datum, const QVec& v) {
  DominantRep out;
  out.dominant = v;
  out.w = weyl_identity(datum);
  for (;;) {
    int found = 0;
    for (int i = 1; i <= datum.rank; ++i)
      if (qvec_dot(datum.simple_root(i), out.dominant) < Rat(0)) {
        found = i;
        break;
      }
    if (!found) return out;
    out.dominant = reflect_cochar(datum, found, out.dominant);
    out.w = weyl_mul(weyl_generator(datum, found), out.w);
  }
}

std::optional<DominanceCertificate> in_hull(const RootDatum& datum, const QVec& v,
                                            const QVec& mu) {
  if (!is_dominant(datum, mu))
    throw std::invalid_argument("in_hull: mu must be dominant");
  DominantRep dr = dominant_representative(datum, v);
  auto coeffs = datum.coroot_solver().solve(qvec_sub(mu, dr.dominant));
  if (!coeffs)
    throw std::invalid_argument("in_hull: v outside mu + span of coroots");
  for (const Rat& c : *coeffs)
    if (c < Rat(0)) return std::nullopt;
  return DominanceCertificate{dr.dominant, dr.w, *coeffs};
}

// ---------------------------------------------------------------------------
// GroupIndex

void GroupIndex::prepare_reflection_data(const RootDatum& datum) {
  rank_ = datum.rank;
  dim_ = datum.dim;
  // Base point: scaled sum of the fundamental coweights (dominant regular).
  QVec rho(datum.dim);
  for (const QVec& f : datum.fundamental_coweights) rho = qvec_add(rho, f);
  long long scale = 1;
  for (const QVec& f : datum.fundamental_coweights)
    for (const Rat& x : f) scale = lcm_ll(scale, x.den());
  for (int i = 1; i <= datum.rank; ++i)
    for (const Rat& x : datum.simple_coroot(i)) scale = lcm_ll(scale, x.den());

  base_key_.resize(dim_);
  for (int j = 0; j < dim_; ++j) {
    Rat s = rho[j] * Rat(scale);
    if (!s.is_integer()) throw std::logic_error("base key not integral");
    base_key_[j] = static_cast<std::int32_t>(s.num());
  }

  alpha_num_.assign(rank_, std::vector<std::int64_t>(dim_));
  alpha_den_.assign(rank_, 1);
  coroot_num_.assign(rank_, std::vector<std::int64_t>(dim_));
  coroot_den_.assign(rank_, 1);
  for (int i = 0; i < rank_; ++i) {
    const QVec& a = datum.simple_root(i + 1);
    const QVec& c = datum.simple_coroot(i + 1);
    for (int j = 0; j < dim_; ++j) {
      alpha_den_[i] = lcm_ll(alpha_den_[i], a[j].den());
      coroot_den_[i] = lcm_ll(coroot_den_[i], c[j].den());
    }
    for (int j = 0; j < dim_; ++j) {
      alpha_num_[i][j] = a[j].num() * (alpha_den_[i] / a[j].den());
      coroot_num_[i][j] = c[j].num() * (coroot_den_[i] / c[j].den());
    }
  }
}

void GroupIndex::reflect_key(int i, const std::int32_t* in, std::int32_t* out) const {
  const auto& an = alpha_num_[i];
  const auto& cn = coroot_num_[i];
  std::int64_t dot = 0;
  for (int j = 0; j < dim_; ++j) dot += an[j] * in[j];
  if (dot % alpha_den_[i] != 0) throw std::logic_error("nonintegral pairing in key");
  std::int64_t c = dot / alpha_den_[i];
  for (int j = 0; j < dim_; ++j) {
    std::int64_t t = c * cn[j];
    if (t % coroot_den_[i] != 0) throw std::logic_error("nonintegral key image");
    out[j] = static_cast<std::int32_t>(in[j] - t / coroot_den_[i]);
  }
}

void GroupIndex::build_hash() {
  std::uint64_t want = size_ ? size_ : 1;
  std::uint64_t cap = 1;
  while (cap < want * 2) cap <<= 1;
  hash_mask_ = cap - 1;
  hash_.assign(cap, UINT32_MAX);
  for (std::uint32_t id = 0; id < size_; ++id) {
    std::uint64_t h = hash_key(&keys_[std::size_t(id) * dim_], dim_) & hash_mask_;
    while (hash_[h] != UINT32_MAX) h = (h + 1) & hash_mask_;
    hash_[h] = id;
  }
}

std::uint32_t GroupIndex::lookup_key(const std::int32_t* key) const {
  std::uint64_t h = hash_key(key, dim_) & hash_mask_;
  for (;;) {
    std::uint32_t id = hash_[h];
    if (id == UINT32_MAX) return UINT32_MAX;
    if (std::equal(key, key + dim_, &keys_[std::size_t(id) * dim_])) return id;
    h = (h + 1) & hash_mask_;
  }
}

GroupIndex GroupIndex::build(const RootDatum& datum, bool with_tables,
                             std::size_t budget_bytes) {
  GroupIndex g;
  g.prepare_reflection_data(datum);
  unsigned long long expected = datum.weyl_order();

  std::uint64_t hash_cap = 1;
  while (hash_cap < expected * 2) hash_cap <<= 1;
  std::size_t estimate = std::size_t(expected) * (4 * g.dim_ + 1) + hash_cap * 4;
  if (with_tables) estimate += std::size_t(expected) * (8 * g.rank_ + 4);
  if (estimate > budget_bytes)
    throw BudgetError("GroupIndex for " + datum.type_label + " needs about " +
                      std::to_string(estimate >> 20) + " MiB, budget is " +
                      std::to_string(budget_bytes >> 20) + " MiB");

  g.has_tables_ = with_tables;
  g.keys_.reserve(std::size_t(expected) * g.dim_);
  g.lengths_.reserve(expected);
  g.hash_mask_ = hash_cap - 1;
  g.hash_.assign(hash_cap, UINT32_MAX);

  auto insert_key = [&](const std::int32_t* key) -> std::pair<std::uint32_t, bool> {
    std::uint64_t h = hash_key(key, g.dim_) & g.hash_mask_;
    for (;;) {
      std::uint32_t id = g.hash_[h];
      if (id == UINT32_MAX) {
        std::uint32_t fresh = g.size_++;
        g.hash_[h] = fresh;
        g.keys_.insert(g.keys_.end(), key, key + g.dim_);
        return {fresh, true};
      }
      if (std::equal(key, key + g.dim_, &g.keys_[std::size_t(id) * g.dim_]))
        return {id, false};
      h = (h + 1) & g.hash_mask_;
    }
  };

  insert_key(g.base_key_.data());
  g.lengths_.push_back(0);
  if (with_tables) g.left_.resize(std::size_t(expected) * g.rank_);

  std::vector<std::int32_t> img(g.dim_);
  for (std::uint32_t id = 0; id < g.size_; ++id) {
    // keys_ may reallocate while iterating; copy the current key out first.
    std::vector<std::int32_t> cur(g.keys_.begin() + std::size_t(id) * g.dim_,
                                  g.keys_.begin() + std::size_t(id + 1) * g.dim_);
    for (int i = 0; i < g.rank_; ++i) {
      g.reflect_key(i, cur.data(), img.data());
      auto [other, fresh] = insert_key(img.data());
      if (fresh) {
        if (g.size_ > expected) throw std::logic_error("BFS exceeded expected order");
        g.lengths_.push_back(static_cast<std::uint8_t>(g.lengths_[id] + 1));
      }
      if (with_tables) g.left_[std::size_t(id) * g.rank_ + i] = other;
    }
  }
  if (g.size_ != expected)
    throw std::logic_error("BFS closure does not match the known group order");

  if (with_tables) {
    // Inverses: peel a reduced word off w and rebuild it in reverse.
    g.inv_.resize(g.size_);
    for (std::uint32_t id = 0; id < g.size_; ++id) {
      std::uint32_t cur = id, acc = 0;
      while (g.lengths_[cur] > 0) {
        for (int i = 0; i < g.rank_; ++i) {
          std::uint32_t down = g.left_[std::size_t(cur) * g.rank_ + i];
          if (g.lengths_[down] < g.lengths_[cur]) {
            acc = g.left_[std::size_t(acc) * g.rank_ + i];
            cur = down;
            break;
          }
        }
      }
      g.inv_[id] = acc;
    }
    g.right_.resize(std::size_t(g.size_) * g.rank_);
    for (std::uint32_t id = 0; id < g.size_; ++id)
      for (int i = 0; i < g.rank_; ++i)
        g.right_[std::size_t(id) * g.rank_ + i] =
            g.inv_[g.left_[std::size_t(g.inv_[id]) * g.rank_ + i]];
  }
  return g;
}

std::uint32_t GroupIndex::left_mul(int i, std::uint32_t id) const {
  if (has_tables_) return left_[std::size_t(id) * rank_ + (i - 1)];
  std::vector<std::int32_t> img(dim_);
  reflect_key(i - 1, &keys_[std::size_t(id) * dim_], img.data());
  std::uint32_t r = lookup_key(img.data());
  if (r == UINT32_MAX) throw std::logic_error("left_mul: image not in index");
  return r;
}

std::uint32_t GroupIndex::right_mul(std::uint32_t id, int i) const {
  if (!has_tables_)
    throw std::logic_error("right_mul requires multiplication tables");
  return right_[std::size_t(id) * rank_ + (i - 1)];
}

std::uint32_t GroupIndex::inverse(std::uint32_t id) const {
  if (!has_tables_) throw std::logic_error("inverse requires multiplication tables");
  return inv_[id];
}

std::vector<int> GroupIndex::reduced_word(std::uint32_t id) const {
  // Smallest-index left descent directly off the key: i is a descent iff
  // <alpha_i, w(base)> < 0.
  std::vector<int> word;
  std::vector<std::int32_t> cur(keys_.begin() + std::size_t(id) * dim_,
                                keys_.begin() + std::size_t(id + 1) * dim_);
  std::vector<std::int32_t> img(dim_);
  for (;;) {
    int found = -1;
    for (int i = 0; i < rank_; ++i) {
      std::int64_t dot = 0;
      for (int j = 0; j < dim_; ++j) dot += alpha_num_[i][j] * cur[j];
      if (dot < 0) {
        found = i;
        break;
      }
    }
    if (found < 0) break;
    word.push_back(found + 1);
    reflect_key(found, cur.data(), img.data());
    cur.swap(img);
  }
  return word;
}

std::uint32_t GroupIndex::id_of_word(const std::vector<int>& word) const {
  std::vector<std::int32_t> cur(base_key_);
  std::vector<std::int32_t> img(dim_);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 1 || *it > rank_)
      throw std::invalid_argument("id_of_word: index out of range");
    reflect_key(*it - 1, cur.data(), img.data());
    cur.swap(img);
  }
  std::uint32_t r = lookup_key(cur.data());
  if (r == UINT32_MAX) throw std::logic_error("id_of_word: key not found");
  return r;
}

std::uint32_t GroupIndex::id_of(const RootDatum& datum, const WeylElt& w) const {
  return id_of_word(admperm::reduced_word(datum, w));
}

WeylElt GroupIndex::element(const RootDatum& datum, std::uint32_t id) const {
  return from_word(datum, reduced_word(id));
}

bool GroupIndex::bruhat_le_word(std::uint32_t u, const std::vector<int>& word_of_w) const {
  std::uint32_t v = u;
  if (has_tables_) {
    for (int i : word_of_w) {
      std::uint32_t sv = left_[std::size_t(v) * rank_ + (i - 1)];
      if (lengths_[sv] < lengths_[v]) v = sv;
    }
  } else {
    for (int i : word_of_w) {
      std::uint32_t sv = left_mul(i, v);
      if (lengths_[sv] < lengths_[v]) v = sv;
    }
  }
  return v == 0;
}

bool GroupIndex::bruhat_le_ids(std::uint32_t u, std::uint32_t w) const {
  return bruhat_le_word(u, reduced_word(w));
}

GroupIndex GroupIndex::from_raw(const RootDatum& datum, bool with_tables,
                                std::vector<std::uint8_t> lengths,
                                std::vector<std::int32_t> keys,
                                std::vector<std::uint32_t> left,
                                std::vector<std::uint32_t> right,
                                std::vector<std::uint32_t> inv) {
  GroupIndex g;
  g.prepare_reflection_data(datum);
  g.size_ = static_cast<std::uint32_t>(lengths.size());
  g.has_tables_ = with_tables;
  g.lengths_ = std::move(lengths);
  g.keys_ = std::move(keys);
  g.left_ = std::move(left);
  g.right_ = std::move(right);
  g.inv_ = std::move(inv);
  if (g.keys_.size() != std::size_t(g.size_) * g.dim_)
    throw std::invalid_argument("GroupIndex::from_raw: key array size mismatch");
  g.build_hash();
  return g;
}

}  // namespace admperm
