#pragma once

#include "admperm/finite_weyl.hpp"

namespace admperm {

/// Extended affine Weyl group element t_lambda * w with lambda in X_*.
struct ExtAffElt {
  QVec lambda;
  WeylElt w;

  bool operator==(const ExtAffElt& o) const {
    return lambda == o.lambda && w == o.w;
  }
  bool operator!=(const ExtAffElt& o) const { return !(*this == o); }
};

/// Throws std::invalid_argument when lambda is not in X_*.
ExtAffElt aff_make(const RootDatum& datum, const QVec& lambda, const WeylElt& w);
ExtAffElt aff_identity(const RootDatum& datum);
ExtAffElt aff_translation(const RootDatum& datum, const QVec& lambda);
ExtAffElt aff_from_finite(const RootDatum& datum, const WeylElt& w);

/// (t_lambda u)(t_nu v) = t_{lambda + u(nu)} (u v).
ExtAffElt aff_mul(const RootDatum& datum, const ExtAffElt& x, const ExtAffElt& y);
ExtAffElt aff_inv(const RootDatum& datum, const ExtAffElt& x);
/// x(p) = w(p) + lambda.
QVec aff_act(const RootDatum& datum, const ExtAffElt& x, const QVec& p);

/// Iwahori-Matsumoto length:
///   l(t_lambda w) = sum_{a>0, w^{-1}a>0} |<a,lambda>|
///                 + sum_{a>0, w^{-1}a<0} |<a,lambda> - 1|.
long long im_length(const RootDatum& datum, const ExtAffElt& x);

/// Component of x in X_* / Q(R^vee), canonically represented by the
/// fractional parts of the coroot-basis coordinates of x(0).
struct OmegaClass {
  QVec fracs;

  bool operator==(const OmegaClass& o) const { return fracs == o.fracs; }
  bool operator!=(const OmegaClass& o) const { return !(*this == o); }
  bool is_zero() const { return qvec_is_zero(fracs); }
};

OmegaClass omega_class(const RootDatum& datum, const ExtAffElt& x);
OmegaClass omega_class_of_coweight(const RootDatum& datum, const QVec& lambda);
OmegaClass omega_class_add(const OmegaClass& a, const OmegaClass& b);

/// The length-zero element of the extended group in the given class,
/// built as t_mu (w_{0,I(mu)} w_0) from the minuscule dominant coweight mu
/// of the class. The construction asserts im_length == 0.
ExtAffElt omega_rep(const RootDatum& datum, const OmegaClass& c);

/// y with x = y * omega, y in W_a, omega in Omega.
ExtAffElt wa_part(const RootDatum& datum, const ExtAffElt& x);

/// Affine simple reflection: s_0 = t_{alphatilde^vee} s_{alphatilde},
/// s_1..s_l the finite generators.
ExtAffElt aff_generator(const RootDatum& datum, int i);

/// Reduced word over {0,..,l} by greedy smallest-index left-descent
/// extraction. Requires omega_class(y) == 0.
std::vector<int> aff_reduced_word(const RootDatum& datum, const ExtAffElt& y);

ExtAffElt aff_from_word(const RootDatum& datum, const std::vector<int>& word);

/// Extended Bruhat order: classes must agree, then the W_a parts are
/// compared by the greedy subword criterion.
bool aff_bruhat_le(const RootDatum& datum, const ExtAffElt& x, const ExtAffElt& y);

}  // namespace admperm
