#include "admperm/affine_weyl.hpp"

#include <stdexcept>

namespace admperm {

ExtAffElt aff_make(const RootDatum& datum, const QVec& lambda, const WeylElt& w) {
  if (!make_coweight(datum, lambda).integral)
    throw std::invalid_argument("aff_make: lambda is not in X_*");
  return ExtAffElt{lambda, w};
}

ExtAffElt aff_identity(const RootDatum& datum) {
  return ExtAffElt{QVec(datum.dim), weyl_identity(datum)};
}

ExtAffElt aff_translation(const RootDatum& datum, const QVec& lambda) {
  return aff_make(datum, lambda, weyl_identity(datum));
}

ExtAffElt aff_from_finite(const RootDatum& datum, const WeylElt& w) {
  return ExtAffElt{QVec(datum.dim), w};
}

ExtAffElt aff_mul(const RootDatum& datum, const ExtAffElt& x, const ExtAffElt& y) {
  QVec moved = act(datum, x.w, y.lambda);
  return ExtAffElt{qvec_add(x.lambda, moved), weyl_mul(x.w, y.w)};
}

ExtAffElt aff_inv(const RootDatum& datum, const ExtAffElt& x) {
  WeylElt winv = weyl_inverse(x.w);
  return ExtAffElt{qvec_neg(act(datum, winv, x.lambda)), winv};
}

QVec aff_act(const RootDatum& datum, const ExtAffElt& x, const QVec& p) {
  return qvec_add(act(datum, x.w, p), x.lambda);
}

long long im_length(const RootDatum& datum, const ExtAffElt& x) {
  int npos = datum.num_positive();
  WeylElt winv = weyl_inverse(x.w);
  long long total = 0;
  for (int r = 0; r < npos; ++r) {
    Rat p = qvec_dot(datum.roots[r], x.lambda);
    if (!p.is_integer())
      throw std::invalid_argument("im_length: lambda pairs non-integrally");
    long long v = p.num();
    if (winv.perm[r] < npos) {
      total += v < 0 ? -v : v;
    } else {
      total += v > 0 ? v - 1 : 1 - v;
    }
  }
  return total;
}

OmegaClass omega_class_of_coweight(const RootDatum& datum, const QVec& lambda) {
  auto coords = datum.coroot_solver().solve(lambda);
  if (!coords)
    throw std::invalid_argument("omega_class: vector outside span of coroots");
  OmegaClass c;
  c.fracs.resize(coords->size());
  for (std::size_t i = 0; i < coords->size(); ++i) c.fracs[i] = (*coords)[i].frac();
  return c;
}

OmegaClass omega_class(const RootDatum& datum, const ExtAffElt& x) {
  return omega_class_of_coweight(datum, x.lambda);
}

OmegaClass omega_class_add(const OmegaClass& a, const OmegaClass& b) {
  OmegaClass c;
  c.fracs.resize(a.fracs.size());
  for (std::size_t i = 0; i < a.fracs.size(); ++i)
    c.fracs[i] = (a.fracs[i] + b.fracs[i]).frac();
  return c;
}

ExtAffElt omega_rep(const RootDatum& datum, const OmegaClass& c) {
  if (c.is_zero()) return aff_identity(datum);
  // Minuscule dominant coweights are the fundamental coweights at marks 1;
  // each nonzero Omega class contains exactly one of them for the types
  // supported here.
  for (int i = 1; i <= datum.rank; ++i) {
    if (datum.marks[i - 1] != 1) continue;
    const QVec& mu = datum.fundamental_coweights[i - 1];
    if (omega_class_of_coweight(datum, mu) != c) continue;
    std::vector<int> all(datum.rank);
    for (int k = 0; k < datum.rank; ++k) all[k] = k + 1;
    WeylElt w0 = longest_element(datum, all);
    WeylElt w0I = longest_element(datum, stabilizer_simple_indices(datum, mu));
    ExtAffElt omega{mu, weyl_mul(w0I, w0)};
    if (im_length(datum, omega) != 0)
      throw std::logic_error("omega_rep: constructed element has nonzero length");
    return omega;
  }
  throw std::invalid_argument("omega_rep: class has no minuscule representative");
}

ExtAffElt wa_part(const RootDatum& datum, const ExtAffElt& x) {
  ExtAffElt omega = omega_rep(datum, omega_class(datum, x));
  ExtAffElt y = aff_mul(datum, x, aff_inv(datum, omega));
  if (!omega_class(datum, y).is_zero())
    throw std::logic_error("wa_part: result is not in W_a");
  return y;
}

ExtAffElt aff_generator(const RootDatum& datum, int i) {
  if (i == 0) {
    int hi = datum.highest_root_index;
    const QVec& atilde = datum.roots[hi];
    const QVec& acov = datum.coroots[hi];
    // Reflection in the highest root, as a root permutation.
    WeylElt s;
    s.perm.resize(datum.num_roots());
    for (int r = 0; r < datum.num_roots(); ++r) {
      QVec img = qvec_sub(datum.roots[r],
                          qvec_scaled(atilde, qvec_dot(datum.roots[r], acov)));
      s.perm[r] = static_cast<uint16_t>(datum.root_index(img));
    }
    return ExtAffElt{acov, s};
  }
  return ExtAffElt{QVec(datum.dim), weyl_generator(datum, i)};
}

std::vector<int> aff_reduced_word(const RootDatum& datum, const ExtAffElt& y) {
  if (!omega_class(datum, y).is_zero())
    throw std::invalid_argument("aff_reduced_word: element is not in W_a");
  std::vector<ExtAffElt> gens;
  for (int i = 0; i <= datum.rank; ++i) gens.push_back(aff_generator(datum, i));

  std::vector<int> word;
  ExtAffElt cur = y;
  long long len = im_length(datum, cur);
  while (len > 0) {
    bool moved = false;
    for (int i = 0; i <= datum.rank; ++i) {
      ExtAffElt next = aff_mul(datum, gens[i], cur);
      long long nl = im_length(datum, next);
      if (nl < len) {
        word.push_back(i);
        cur = next;
        len = nl;
        moved = true;
        break;
      }
    }
    if (!moved)
      throw std::logic_error("aff_reduced_word: no descent found");
  }
  return word;
}

ExtAffElt aff_from_word(const RootDatum& datum, const std::vector<int>& word) {
  ExtAffElt y = aff_identity(datum);
  for (int i : word) {
    if (i < 0 || i > datum.rank)
      throw std::invalid_argument("aff_from_word: index out of range");
    y = aff_mul(datum, y, aff_generator(datum, i));
  }
  return y;
}

bool aff_bruhat_le(const RootDatum& datum, const ExtAffElt& x, const ExtAffElt& y) {
  if (omega_class(datum, x) != omega_class(datum, y)) return false;
  ExtAffElt u = wa_part(datum, x);
  ExtAffElt w = wa_part(datum, y);
  std::vector<int> word = aff_reduced_word(datum, w);

  std::vector<ExtAffElt> gens;
  for (int i = 0; i <= datum.rank; ++i) gens.push_back(aff_generator(datum, i));

  ExtAffElt v = u;
  long long lv = im_length(datum, v);
  for (int i : word) {
    ExtAffElt sv = aff_mul(datum, gens[i], v);
    long long lsv = im_length(datum, sv);
    if (lsv < lv) {
      v = sv;
      lv = lsv;
    }
  }
  return lv == 0 && v == aff_identity(datum);
}

}  // namespace admperm
