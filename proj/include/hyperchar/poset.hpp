#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "hyperchar/genseries.hpp"
#include "hyperchar/structures.hpp"
#include "hyperchar/symfunc.hpp"

namespace hyperchar {

/// A finite ranked poset stored as an explicit relation matrix.  Construction
/// requires a minimum element (unique by antisymmetry).
class FinitePoset {
 public:
  FinitePoset(std::vector<int> ranks, std::vector<std::vector<bool>> leq);

  int size() const { return static_cast<int>(ranks_.size()); }
  int rank(int x) const { return ranks_[x]; }
  bool leq(int a, int b) const { return leq_[a][b]; }
  int bottom() const { return bottom_; }
  int max_rank() const;

  /// Moebius function mu(a, b); zero unless a <= b.
  Rational mobius(int a, int b) const;

  /// Number of elements of the closed interval [a, b].
  int interval_size(int a, int b) const;

  /// sum_x mu(bottom, x) t^{rank(x)}.
  TPoly mobius_rank_polynomial() const;

  /// sum_x mu(bottom, x) s^{r - rank(x)} with r = max_rank(), coefficients
  /// ascending in s; `label` is stored in the .n field of the result.
  CharPoly characteristic_polynomial(int label = 0) const;

  /// Induced subposet on the given indices, keeping the ambient ranks.
  FinitePoset restricted(const std::vector<int>& keep) const;

 private:
  std::vector<int> ranks_;
  std::vector<std::vector<bool>> leq_;
  int bottom_ = -1;
  mutable std::unordered_map<long long, Rational> mobius_cache_;
};

/// A combinatorial family on n labelled vertices with its order relation and
/// the vertex-permutation action; fixed_indices(p) lists the elements fixed
/// by p, ascending, as indices into the poset.
struct FamilyPoset {
  Family family;
  int n = 0;
  FinitePoset poset;
  std::function<std::vector<int>(const Perm&)> fixed_indices;
};

/// Builds the poset of hypertrees, pointed partitions, or rooted forests on
/// n vertices (cyclic hypertrees carry no order and are rejected).
FamilyPoset make_family_poset(Family f, int n, int max_n = 6);

CharPoly family_char_poly(Family f, int n, int max_n = 6);

/// Permutation character of the family with rank weights:
/// sum_lambda (p_lambda / z_lambda) * sum_{x fixed by sigma_lambda} t^{rank x}.
SymFunc perm_character(Family f, int n, int max_n = 5);

/// Character of the (t-graded) Whitney homology read off fixed subposets:
/// sum_lambda (p_lambda / z_lambda) * sum_{x in P^sigma} mu_{P^sigma}(0, x)
/// t^{rank_P(x)}, with ranks taken in the ambient poset.
SymFunc whitney_character(Family f, int n, int max_n = 5);

/// Checks that mapping a rooted forest to the partition of its trees, marked
/// at their roots, is a rank-preserving equivariant poset surjection and that
/// both posets share one characteristic polynomial.
struct PhiReport {
  int n = 0;
  bool monotone = false;
  bool surjective = false;
  bool rank_preserving = false;
  bool equivariant = false;
  bool char_poly_equal = false;
  bool pass() const {
    return monotone && surjective && rank_preserving && equivariant && char_poly_equal;
  }
};

PhiReport verify_phi(int n, int max_n = 5);

/// True when every interval [a, b] of the rooted-forest poset on n vertices
/// is Boolean: 2^d elements and mu(a, b) = (-1)^d for d = rank(b) - rank(a).
bool forest_intervals_boolean(int n, int max_n = 5);

}  // namespace hyperchar
