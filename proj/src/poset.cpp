#include "hyperchar/poset.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace hyperchar {

FinitePoset::FinitePoset(std::vector<int> ranks, std::vector<std::vector<bool>> leq)
    : ranks_(std::move(ranks)), leq_(std::move(leq)) {
  const int n = size();
  if (static_cast<int>(leq_.size()) != n)
    throw std::invalid_argument("FinitePoset: relation/rank size mismatch");
  for (const auto& row : leq_)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("FinitePoset: relation matrix is not square");
  for (int b = 0; b < n && bottom_ < 0; ++b) {
    bool below_all = true;
    for (int x = 0; x < n; ++x) below_all = below_all && leq_[b][x];
    if (below_all) bottom_ = b;
  }
  if (bottom_ < 0) throw std::invalid_argument("FinitePoset: no minimum element");
}

int FinitePoset::max_rank() const {
  int r = 0;
  for (int x : ranks_) r = std::max(r, x);
  return r;
}

Rational FinitePoset::mobius(int a, int b) const {
  if (!leq_[a][b]) return Rational(0);
  if (a == b) return Rational(1);
  const long long key = static_cast<long long>(a) * size() + b;
  if (auto it = mobius_cache_.find(key); it != mobius_cache_.end())
    return it->second;
  Rational m = 0;
  for (int x = 0; x < size(); ++x)
    if (x != b && leq_[a][x] && leq_[x][b]) m -= mobius(a, x);
  mobius_cache_.emplace(key, m);
  return m;
}

int FinitePoset::interval_size(int a, int b) const {
  int count = 0;
  for (int x = 0; x < size(); ++x) count += leq_[a][x] && leq_[x][b];
  return count;
}

TPoly FinitePoset::mobius_rank_polynomial() const {
  TPoly acc;
  for (int x = 0; x < size(); ++x)
    acc += TPoly::monomial(ranks_[x], mobius(bottom_, x));
  return acc;
}

CharPoly FinitePoset::characteristic_polynomial(int label) const {
  const int r = max_rank();
  CharPoly cp;
  cp.n = label;
  cp.coeffs.assign(r + 1, Rational(0));
  for (int x = 0; x < size(); ++x) cp.coeffs[r - ranks_[x]] += mobius(bottom_, x);
  return cp;
}

FinitePoset FinitePoset::restricted(const std::vector<int>& keep) const {
  const int m = static_cast<int>(keep.size());
  std::vector<int> ranks(m);
  std::vector<std::vector<bool>> rel(m, std::vector<bool>(m));
  for (int i = 0; i < m; ++i) {
    ranks[i] = ranks_[keep[i]];
    for (int j = 0; j < m; ++j) rel[i][j] = leq_[keep[i]][keep[j]];
  }
  return FinitePoset(std::move(ranks), std::move(rel));
}

namespace {

void check_family_n(const char* what, int n, int min_n, int max_n) {
  if (n < min_n)
    throw std::invalid_argument(std::string(what) + ": n must be at least " +
                                std::to_string(min_n));
  if (n > max_n)
    throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(n) +
                                " exceeds the limit " + std::to_string(max_n));
}

template <class T, class LeqFn, class RankFn, class RelabelFn>
FamilyPoset build_family_poset(Family fam, int n, std::vector<T> elems, LeqFn leq,
                               RankFn rank, RelabelFn relabel) {
  const int m = static_cast<int>(elems.size());
  std::vector<int> ranks(m);
  std::vector<std::vector<bool>> rel(m, std::vector<bool>(m));
  for (int i = 0; i < m; ++i) {
    ranks[i] = rank(elems[i]);
    for (int j = 0; j < m; ++j) rel[i][j] = leq(elems[i], elems[j]);
  }
  auto shared = std::make_shared<std::vector<T>>(std::move(elems));
  auto fixed = [shared, relabel](const Perm& p) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(shared->size()); ++i)
      if (relabel((*shared)[i], p) == (*shared)[i]) out.push_back(i);
    return out;
  };
  return FamilyPoset{fam, n, FinitePoset(std::move(ranks), std::move(rel)),
                     std::move(fixed)};
}

}  // namespace

FamilyPoset make_family_poset(Family f, int n, int max_n) {
  switch (f) {
    case Family::Hypertree:
      check_family_n("make_family_poset(hypertree)", n, 2, max_n);
      return build_family_poset(f, n, enumerate_hypertrees(n, n), hypertree_leq,
                                hypertree_rank, hypertree_relabel);
    case Family::PointedPartition:
      check_family_n("make_family_poset(pointed_partition)", n, 1, max_n);
      return build_family_poset(f, n, enumerate_pointed_partitions(n, n),
                                pointed_partition_leq, pointed_partition_rank,
                                pointed_partition_relabel);
    case Family::RootedForest:
      check_family_n("make_family_poset(forest)", n, 1, max_n);
      return build_family_poset(f, n, enumerate_rooted_forests(n, n),
                                rooted_forest_leq, rooted_forest_rank,
                                rooted_forest_relabel);
    case Family::CyclicHypertree:
      throw std::invalid_argument(
          "make_family_poset: cyclic hypertrees carry no partial order");
  }
  throw std::logic_error("make_family_poset: bad enum");
}

CharPoly family_char_poly(Family f, int n, int max_n) {
  return make_family_poset(f, n, max_n).poset.characteristic_polynomial(n);
}

namespace {

template <class T, class RankFn, class RelabelFn>
SymFunc perm_character_impl(int n, const std::vector<T>& elems, RankFn rank,
                            RelabelFn relabel) {
  SymFunc acc(n);
  for (const Partition& lam : partitions_of(n)) {
    const Perm sigma = perm_from_cycle_type(lam, n);
    TPoly fixes;
    for (const T& e : elems)
      if (relabel(e, sigma) == e) fixes += TPoly::t(rank(e));
    acc += SymFunc::term(lam, fixes * Rational(Int(1), lam.z()), n);
  }
  return acc;
}

}  // namespace

SymFunc perm_character(Family f, int n, int max_n) {
  switch (f) {
    case Family::Hypertree:
      check_family_n("perm_character(hypertree)", n, 2, max_n);
      return perm_character_impl(n, enumerate_hypertrees(n, n), hypertree_rank,
                                 hypertree_relabel);
    case Family::CyclicHypertree:
      check_family_n("perm_character(cyclic_hypertree)", n, 2, max_n);
      return perm_character_impl(n, enumerate_cyclic_hypertrees(n, n), cyclic_rank,
                                 cyclic_relabel);
    case Family::PointedPartition:
      check_family_n("perm_character(pointed_partition)", n, 1, max_n);
      return perm_character_impl(n, enumerate_pointed_partitions(n, n),
                                 pointed_partition_rank, pointed_partition_relabel);
    case Family::RootedForest:
      check_family_n("perm_character(forest)", n, 1, max_n);
      return perm_character_impl(n, enumerate_rooted_forests(n, n),
                                 rooted_forest_rank, rooted_forest_relabel);
  }
  throw std::logic_error("perm_character: bad enum");
}

SymFunc whitney_character(Family f, int n, int max_n) {
  FamilyPoset fp = make_family_poset(f, n, max_n);
  SymFunc acc(n);
  for (const Partition& lam : partitions_of(n)) {
    const Perm sigma = perm_from_cycle_type(lam, n);
    FinitePoset sub = fp.poset.restricted(fp.fixed_indices(sigma));
    acc += SymFunc::term(lam, sub.mobius_rank_polynomial() * Rational(Int(1), lam.z()),
                         n);
  }
  return acc;
}

PhiReport verify_phi(int n, int max_n) {
  check_family_n("verify_phi", n, 1, max_n);
  const std::vector<RootedForest> forests = enumerate_rooted_forests(n, n);
  const std::vector<PointedPartition> pps = enumerate_pointed_partitions(n, n);

  PhiReport rep;
  rep.n = n;
  std::vector<int> image(forests.size());
  std::vector<char> hit(pps.size(), 0);
  rep.rank_preserving = true;
  for (size_t i = 0; i < forests.size(); ++i) {
    PointedPartition pp = forest_to_pointed_partition(forests[i]);
    auto it = std::lower_bound(pps.begin(), pps.end(), pp);
    if (it == pps.end() || !(*it == pp))
      throw std::logic_error("verify_phi: image is not a pointed partition");
    image[i] = static_cast<int>(it - pps.begin());
    hit[image[i]] = 1;
    rep.rank_preserving = rep.rank_preserving &&
                          rooted_forest_rank(forests[i]) == pointed_partition_rank(pp);
  }
  rep.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c; });

  rep.monotone = true;
  for (size_t i = 0; i < forests.size() && rep.monotone; ++i)
    for (size_t j = 0; j < forests.size(); ++j)
      if (rooted_forest_leq(forests[i], forests[j]) &&
          !pointed_partition_leq(pps[image[i]], pps[image[j]])) {
        rep.monotone = false;
        break;
      }

  rep.equivariant = true;
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    for (const RootedForest& fo : forests)
      if (!(forest_to_pointed_partition(rooted_forest_relabel(fo, p)) ==
            pointed_partition_relabel(forest_to_pointed_partition(fo), p))) {
        rep.equivariant = false;
        break;
      }
  } while (rep.equivariant && std::next_permutation(p.begin(), p.end()));

  rep.char_poly_equal =
      family_char_poly(Family::RootedForest, n, max_n) ==
      family_char_poly(Family::PointedPartition, n, max_n);
  return rep;
}

bool forest_intervals_boolean(int n, int max_n) {
  check_family_n("forest_intervals_boolean", n, 1, max_n);
  FamilyPoset fp = make_family_poset(Family::RootedForest, n, max_n);
  const FinitePoset& p = fp.poset;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (!p.leq(a, b)) continue;
      const int d = p.rank(b) - p.rank(a);
      if (p.interval_size(a, b) != (1 << d)) return false;
      if (p.mobius(a, b) != Rational(d % 2 == 0 ? 1 : -1)) return false;
    }
  return true;
}

}  // namespace hyperchar
