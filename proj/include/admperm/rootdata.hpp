#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "admperm/linalg.hpp"

namespace admperm {

/// Cocharacter vector together with the result of the X_* integrality test.
struct Coweight {
  QVec vec;
  bool integral = false;
};

/// Root datum in an explicit ambient realization (Bourbaki coordinates).
///
/// Characters live in the ambient coordinate space and pair with
/// cocharacters by the standard dot product. Roots are listed positives
/// first in a canonical order: positive roots sorted by (height, lex),
/// and roots[num_positive + k] == -roots[k]. Coroots are parallel.
///
/// The lattices of interest are Q(R^vee), spanned by the simple coroots,
/// and X_* = P(R^vee), spanned by the fundamental coweights.
class RootDatum {
 public:
  std::string type_label;  // normalized, e.g. "A2", "E6"
  int rank = 0;            // l
  int dim = 0;             // ambient dimension

  std::vector<QVec> roots;
  std::vector<QVec> coroots;
  std::vector<int> base;  // root indices of alpha_1..alpha_l
  std::vector<long long> marks;  // coefficients of the highest root
  std::vector<QVec> fundamental_coweights;  // rho_1..rho_l
  int highest_root_index = -1;

  // Simple reflections as permutations of the root list.
  std::vector<std::vector<uint16_t>> simple_perms;
  std::vector<uint16_t> negation;  // index of -root

  int num_positive() const { return static_cast<int>(roots.size()) / 2; }
  int num_roots() const { return static_cast<int>(roots.size()); }
  const QVec& simple_root(int i) const { return roots[base[i - 1]]; }
  const QVec& simple_coroot(int i) const { return coroots[base[i - 1]]; }
  const QVec& highest_root() const { return roots[highest_root_index]; }
  const QVec& highest_coroot() const { return coroots[highest_root_index]; }

  const std::vector<QVec>& coroot_lattice_basis() const { return simple_coroots_; }
  const std::vector<QVec>& cochar_lattice_basis() const { return fundamental_coweights; }

  int root_index(const QVec& r) const;

  const LinearSolver& coroot_solver() const { return coroot_solver_; }
  const LinearSolver& cochar_solver() const { return cochar_solver_; }
  const LinearSolver& simple_root_solver() const { return simple_root_solver_; }

  /// Known order of the finite Weyl group for this type.
  unsigned long long weyl_order() const;

 private:
  friend RootDatum build_root_datum(const std::string&);
  std::vector<QVec> simple_coroots_;
  LinearSolver coroot_solver_;       // columns: simple coroots
  LinearSolver cochar_solver_;       // columns: fundamental coweights
  LinearSolver simple_root_solver_;  // columns: simple roots (character side)
  std::map<QVec, int> root_lookup_;
};

/// Supported labels: A1..A4, B3, C2, C3, D4, E6, E7 (an optional underscore
/// after the letter is accepted). Throws std::invalid_argument otherwise.
RootDatum build_root_datum(const std::string& type_label);

/// Exact evaluation of <char, cochar> in the ambient realization.
Rat pairing(const RootDatum& datum, const QVec& character, const QVec& cocharacter);

/// a_1..a_l = rho_i / n_i followed by a_{l+1} = 0.
std::vector<QVec> alcove_vertices(const RootDatum& datum);

Coweight make_coweight(const RootDatum& datum, const QVec& v);

bool is_dominant(const RootDatum& datum, const QVec& v);

/// True iff <alpha, mu> lies in {-1, 0, 1} for every root alpha.
bool is_minuscule(const RootDatum& datum, const Coweight& mu);

/// True iff v is an integer combination of the simple coroots.
bool in_coroot_lattice(const RootDatum& datum, const QVec& v);

/// JSON document with roots, coroots, base indices, marks and fundamental
/// coweights, all rationals rendered as "p/q" strings.
std::string root_datum_to_json(const RootDatum& datum);

}  // namespace admperm
