#include "admperm/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "json.hpp"

namespace admperm {

namespace {

QVec make_vec(int dim, std::initializer_list<std::pair<int, Rat>> entries) {
  QVec v(dim);
  for (const auto& [idx, val] : entries) v[idx] = val;
  return v;
}

// e_i - e_{i+1} style chains and the type-specific tails.
std::vector<QVec> simple_roots_for(const std::string& label, int& dim_out) {
  const Rat h(1, 2);
  if (label[0] == 'A') {
    int n = label[1] - '0';
    dim_out = n + 1;
    std::vector<QVec> s;
    for (int i = 0; i < n; ++i)
      s.push_back(make_vec(dim_out, {{i, Rat(1)}, {i + 1, Rat(-1)}}));
    return s;
  }
  if (label == "B3") {
    dim_out = 3;
    return {make_vec(3, {{0, Rat(1)}, {1, Rat(-1)}}),
            make_vec(3, {{1, Rat(1)}, {2, Rat(-1)}}),
            make_vec(3, {{2, Rat(1)}})};
  }
  if (label == "C2" || label == "C3") {
    int n = label[1] - '0';
    dim_out = n;
    std::vector<QVec> s;
    for (int i = 0; i + 1 < n; ++i)
      s.push_back(make_vec(n, {{i, Rat(1)}, {i + 1, Rat(-1)}}));
    s.push_back(make_vec(n, {{n - 1, Rat(2)}}));
    return s;
  }
  if (label == "D4") {
    dim_out = 4;
    return {make_vec(4, {{0, Rat(1)}, {1, Rat(-1)}}),
            make_vec(4, {{1, Rat(1)}, {2, Rat(-1)}}),
            make_vec(4, {{2, Rat(1)}, {3, Rat(-1)}}),
            make_vec(4, {{2, Rat(1)}, {3, Rat(1)}})};
  }
  if (label == "E6" || label == "E7") {
    dim_out = 8;
    std::vector<QVec> s;
    QVec a1(8, -h);
    a1[0] = h;
    a1[7] = h;
    s.push_back(a1);
    s.push_back(make_vec(8, {{0, Rat(1)}, {1, Rat(1)}}));
    int chain = label == "E6" ? 4 : 5;
    for (int i = 0; i < chain; ++i)
      s.push_back(make_vec(8, {{i, Rat(-1)}, {i + 1, Rat(1)}}));
    return s;
  }
  throw std::invalid_argument("unsupported root system type: " + label);
}

// Explicit ambient root lists for E6 and E7; the delta sign patterns have
// even (E6) resp. odd (E7) weight.
std::vector<QVec> explicit_root_list(const std::string& label) {
  const Rat h(1, 2);
  std::vector<QVec> out;
  if (label == "E6") {
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1})
            out.push_back(make_vec(8, {{i, Rat(si)}, {j, Rat(sj)}}));
    for (int mask = 0; mask < 32; ++mask) {
      if (__builtin_popcount(mask) % 2 != 0) continue;
      QVec v(8);
      v[5] = -h;
      v[6] = -h;
      v[7] = h;
      for (int i = 0; i < 5; ++i) v[i] = (mask >> i) & 1 ? -h : h;
      out.push_back(v);
      out.push_back(qvec_neg(v));
    }
    return out;
  }
  if (label == "E7") {
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1})
            out.push_back(make_vec(8, {{i, Rat(si)}, {j, Rat(sj)}}));
    out.push_back(make_vec(8, {{6, Rat(1)}, {7, Rat(-1)}}));
    out.push_back(make_vec(8, {{6, Rat(-1)}, {7, Rat(1)}}));
    for (int mask = 0; mask < 64; ++mask) {
      if (__builtin_popcount(mask) % 2 != 1) continue;
      QVec v(8);
      v[6] = h;
      v[7] = -h;
      for (int i = 0; i < 6; ++i) v[i] = (mask >> i) & 1 ? -h : h;
      out.push_back(v);
      out.push_back(qvec_neg(v));
    }
    return out;
  }
  throw std::logic_error("explicit_root_list: only E6/E7");
}

QVec coroot_of(const QVec& root) {
  Rat n2 = qvec_dot(root, root);
  return qvec_scaled(root, Rat(2) / n2);
}

// Closure of the base under the simple reflections; yields all roots.
std::vector<QVec> roots_by_closure(const std::vector<QVec>& simples) {
  std::vector<QVec> cosimples;
  for (const QVec& a : simples) cosimples.push_back(coroot_of(a));
  std::map<QVec, int, bool (*)(const QVec&, const QVec&)> seen(qvec_lex_less);
  std::vector<QVec> all;
  for (const QVec& a : simples)
    if (seen.emplace(a, 1).second) all.push_back(a);
  for (std::size_t k = 0; k < all.size(); ++k) {
    QVec cur = all[k];
    for (std::size_t i = 0; i < simples.size(); ++i) {
      QVec img = qvec_sub(cur, qvec_scaled(simples[i], qvec_dot(cur, cosimples[i])));
      if (seen.emplace(img, 1).second) all.push_back(img);
    }
  }
  return all;
}

std::string normalize_label(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != '_' && c != ' ') s.push_back(static_cast<char>(std::toupper(c)));
  static const char* supported[] = {"A1", "A2", "A3", "A4", "B3",
                                    "C2", "C3", "D4", "E6", "E7"};
  for (const char* t : supported)
    if (s == t) return s;
  throw std::invalid_argument("unsupported root system type: " + raw);
}

void check_subspace_constraints(const std::string& label, const QVec& v) {
  if (label == "E6") {
    if (v[5] != v[6] || v[5] != -v[7])
      throw std::logic_error("E6 realization: constraint x6 = x7 = -x8 violated");
  } else if (label == "E7") {
    if (v[6] != -v[7])
      throw std::logic_error("E7 realization: constraint x7 = -x8 violated");
  }
}

}  // namespace

RootDatum build_root_datum(const std::string& type_label) {
  RootDatum d;
  d.type_label = normalize_label(type_label);
  std::vector<QVec> simples = simple_roots_for(d.type_label, d.dim);
  d.rank = static_cast<int>(simples.size());

  std::vector<QVec> all;
  if (d.type_label == "E6" || d.type_label == "E7") {
    all = explicit_root_list(d.type_label);
  } else {
    all = roots_by_closure(simples);
  }

  d.simple_root_solver_ = LinearSolver(simples);

  // Expand each root in the base; coefficients must be integers of uniform
  // sign. Height orders the positive roots canonically.
  struct Expanded {
    QVec root;
    long long height;
  };
  std::vector<Expanded> pos;
  for (const QVec& r : all) {
    auto coeffs = d.simple_root_solver_.solve_integral(r);
    if (!coeffs) throw std::logic_error("root outside integral span of base");
    long long h = 0;
    int sign = 0;
    for (long long c : *coeffs) {
      h += c;
      if (c > 0) sign |= 1;
      if (c < 0) sign |= 2;
    }
    if (sign == 3 || sign == 0) throw std::logic_error("mixed-sign root expansion");
    if (sign == 1) pos.push_back({r, h});
  }
  if (2 * pos.size() != all.size())
    throw std::logic_error("positive/negative root mismatch");

  std::sort(pos.begin(), pos.end(), [](const Expanded& a, const Expanded& b) {
    if (a.height != b.height) return a.height < b.height;
    return qvec_lex_less(a.root, b.root);
  });

  for (const Expanded& e : pos) d.roots.push_back(e.root);
  for (const Expanded& e : pos) d.roots.push_back(qvec_neg(e.root));
  for (const QVec& r : d.roots) {
    check_subspace_constraints(d.type_label, r);
    d.coroots.push_back(coroot_of(r));
    d.root_lookup_.emplace(r, static_cast<int>(d.root_lookup_.size()));
  }

  d.base.resize(d.rank);
  for (int i = 0; i < d.rank; ++i) d.base[i] = d.root_index(simples[i]);
  for (int i = 0; i < d.rank; ++i) d.simple_coroots_.push_back(d.coroots[d.base[i]]);
  d.coroot_solver_ = LinearSolver(d.simple_coroots_);

  // Highest root: unique positive root of maximal height.
  int npos = d.num_positive();
  d.highest_root_index = npos - 1;
  if (npos >= 2 && pos[npos - 1].height == pos[npos - 2].height)
    throw std::logic_error("highest root is not unique");
  auto mark_coeffs = d.simple_root_solver_.solve_integral(d.highest_root());
  d.marks = *mark_coeffs;

  // Fundamental coweights via the Cartan matrix: rho_j = sum_k x_k alpha_k^vee
  // with <alpha_i, rho_j> = delta_ij.
  QMatrix cartan(d.rank, QVec(d.rank));
  for (int i = 0; i < d.rank; ++i)
    for (int k = 0; k < d.rank; ++k)
      cartan[i][k] = qvec_dot(simples[i], d.simple_coroots_[k]);
  std::vector<QVec> cartan_cols(d.rank);
  for (int k = 0; k < d.rank; ++k) {
    cartan_cols[k] = QVec(d.rank);
    for (int i = 0; i < d.rank; ++i) cartan_cols[k][i] = cartan[i][k];
  }
  LinearSolver cartan_solver(cartan_cols);
  for (int j = 0; j < d.rank; ++j) {
    QVec e(d.rank);
    e[j] = Rat(1);
    QVec x = *cartan_solver.solve(e);
    QVec rho(d.dim);
    for (int k = 0; k < d.rank; ++k)
      rho = qvec_add(rho, qvec_scaled(d.simple_coroots_[k], x[k]));
    check_subspace_constraints(d.type_label, rho);
    d.fundamental_coweights.push_back(rho);
  }
  d.cochar_solver_ = LinearSolver(d.fundamental_coweights);

  // Simple reflections as root permutations, plus the negation table.
  d.negation.resize(d.roots.size());
  for (int r = 0; r < d.num_roots(); ++r)
    d.negation[r] = static_cast<uint16_t>(d.root_index(qvec_neg(d.roots[r])));
  d.simple_perms.assign(d.rank, std::vector<uint16_t>(d.roots.size()));
  for (int i = 0; i < d.rank; ++i) {
    const QVec& alpha = simples[i];
    const QVec& covec = d.simple_coroots_[i];
    for (int r = 0; r < d.num_roots(); ++r) {
      QVec img = qvec_sub(d.roots[r], qvec_scaled(alpha, qvec_dot(d.roots[r], covec)));
      d.simple_perms[i][r] = static_cast<uint16_t>(d.root_index(img));
    }
  }

  for (const auto& [root, idx] : d.root_lookup_)
    if (qvec_dot(root, d.coroots[idx]) != Rat(2))
      throw std::logic_error("<alpha, alpha^vee> != 2");

  return d;
}

int RootDatum::root_index(const QVec& r) const {
  auto it = root_lookup_.find(r);
  if (it == root_lookup_.end()) throw std::invalid_argument("not a root");
  return it->second;
}

unsigned long long RootDatum::weyl_order() const {
  if (type_label == "A1") return 2;
  if (type_label == "A2") return 6;
  if (type_label == "A3") return 24;
  if (type_label == "A4") return 120;
  if (type_label == "B3") return 48;
  if (type_label == "C2") return 8;
  if (type_label == "C3") return 48;
  if (type_label == "D4") return 192;
  if (type_label == "E6") return 51840;
  if (type_label == "E7") return 2903040;
  throw std::logic_error("unknown type");
}

Rat pairing(const RootDatum& datum, const QVec& character, const QVec& cocharacter) {
  if (static_cast<int>(character.size()) != datum.dim ||
      static_cast<int>(cocharacter.size()) != datum.dim)
    throw std::invalid_argument("pairing: dimension mismatch");
  return qvec_dot(character, cocharacter);
}

std::vector<QVec> alcove_vertices(const RootDatum& datum) {
  std::vector<QVec> v;
  for (int i = 0; i < datum.rank; ++i)
    v.push_back(qvec_scaled(datum.fundamental_coweights[i], Rat(1, datum.marks[i])));
  v.push_back(QVec(datum.dim));
  return v;
}

Coweight make_coweight(const RootDatum& datum, const QVec& v) {
  if (static_cast<int>(v.size()) != datum.dim)
    throw std::invalid_argument("coweight: dimension mismatch");
  Coweight c;
  c.vec = v;
  c.integral = datum.cochar_solver().solve_integral(v).has_value();
  return c;
}

bool is_dominant(const RootDatum& datum, const QVec& v) {
  for (int i = 1; i <= datum.rank; ++i)
    if (qvec_dot(datum.simple_root(i), v) < Rat(0)) return false;
  return true;
}

bool is_minuscule(const RootDatum& datum, const Coweight& mu) {
  if (!mu.integral)
    throw std::invalid_argument("is_minuscule: coweight not in X_*");
  for (const QVec& alpha : datum.roots) {
    Rat p = qvec_dot(alpha, mu.vec);
    if (p != Rat(-1) && p != Rat(0) && p != Rat(1)) return false;
  }
  return true;
}

bool in_coroot_lattice(const RootDatum& datum, const QVec& v) {
  return datum.coroot_solver().solve_integral(v).has_value();
}

std::string root_datum_to_json(const RootDatum& datum) {
  nlohmann::json j;
  j["type"] = datum.type_label;
  j["rank"] = datum.rank;
  j["dim"] = datum.dim;
  auto vec_to_json = [](const QVec& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const Rat& x : v) a.push_back(x.str());
    return a;
  };
  j["roots"] = nlohmann::json::array();
  for (const QVec& r : datum.roots) j["roots"].push_back(vec_to_json(r));
  j["coroots"] = nlohmann::json::array();
  for (const QVec& r : datum.coroots) j["coroots"].push_back(vec_to_json(r));
  j["base"] = datum.base;
  j["marks"] = datum.marks;
  j["fundamental_coweights"] = nlohmann::json::array();
  for (const QVec& r : datum.fundamental_coweights)
    j["fundamental_coweights"].push_back(vec_to_json(r));
  return j.dump(2);
}

}  // namespace admperm
