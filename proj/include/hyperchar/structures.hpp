#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperchar/partition.hpp"
#include "hyperchar/tpoly.hpp"

namespace hyperchar {

/// Permutation of {0..n-1} stored as a vector of images.
using Perm = std::vector<int>;

/// Canonical representative of a cycle type: cycles laid out on consecutive
/// integers, largest part first ([3,2] on 5 points -> (0 1 2)(3 4)).
Perm perm_from_cycle_type(const Partition& lambda, int n);

enum class Family { Hypertree, CyclicHypertree, PointedPartition, RootedForest };

Family family_from_string(const std::string& name);
std::string family_to_string(Family f);

/// A hypertree on vertices {0..n-1}: a connected Berge-acyclic set of edges of
/// size >= 2 with sum (|e|-1) = n-1.  Edges are vertex bitmasks in canonical
/// order (min vertex, then size, then vertex-lexicographic), so the default
/// comparison is structural equality.
struct Hypertree {
  int n = 0;
  std::vector<std::uint16_t> edges;
  friend auto operator<=>(const Hypertree&, const Hypertree&) = default;
};

bool edge_less(std::uint16_t a, std::uint16_t b);
bool is_hypertree(int n, const std::vector<std::uint16_t>& edges);

std::vector<Hypertree> enumerate_hypertrees(int n, int safety_bound = 7);
/// a <= b iff every edge of b is contained in an edge of a (b refines a;
/// the single full edge is the bottom).
bool hypertree_leq(const Hypertree& a, const Hypertree& b);
int hypertree_rank(const Hypertree& t);  // edges - 1
Hypertree hypertree_relabel(const Hypertree& t, const Perm& p);

/// A hypertree plus, around every vertex, a cyclic order of its incident
/// edges.  orders[v] lists 0-based indices into base.edges, rotated so the
/// smallest incident index comes first.
struct CyclicHypertree {
  Hypertree base;
  std::vector<std::vector<int>> orders;
  friend auto operator<=>(const CyclicHypertree&, const CyclicHypertree&) = default;
};

std::vector<CyclicHypertree> enumerate_cyclic_hypertrees(int n, int safety_bound = 6);
CyclicHypertree cyclic_relabel(const CyclicHypertree& c, const Perm& p);
int cyclic_rank(const CyclicHypertree& c);
/// sum over hypertrees on n vertices of t^rank prod_v (deg(v)-1)!, i.e. the
/// rank polynomial of cyclic hypertrees without materializing them.
TPoly cyclic_rank_polynomial(int n, int safety_bound = 7);

/// A set partition of {0..n-1} with one marked element per block.  Blocks are
/// bitmasks sorted by minimum element; pointed[i] lies in blocks[i].
struct PointedPartition {
  int n = 0;
  std::vector<std::uint16_t> blocks;
  std::vector<int> pointed;
  friend auto operator<=>(const PointedPartition&, const PointedPartition&) = default;
};

std::vector<PointedPartition> enumerate_pointed_partitions(int n, int safety_bound = 8);
/// a <= b iff a refines b and every element pointed in b is pointed in a
/// (all-singletons is the bottom).
bool pointed_partition_leq(const PointedPartition& a, const PointedPartition& b);
int pointed_partition_rank(const PointedPartition& p);  // n - blocks
PointedPartition pointed_partition_relabel(const PointedPartition& pp, const Perm& p);

/// A rooted forest on {0..n-1} as a parent map; parent[v] = -1 marks a root.
struct RootedForest {
  int n = 0;
  std::vector<int> parent;
  friend auto operator<=>(const RootedForest&, const RootedForest&) = default;
};

std::vector<RootedForest> enumerate_rooted_forests(int n, int safety_bound = 7);
/// Edge-set inclusion.
bool rooted_forest_leq(const RootedForest& a, const RootedForest& b);
int rooted_forest_rank(const RootedForest& f);  // number of edges
RootedForest rooted_forest_relabel(const RootedForest& f, const Perm& p);

/// Trees become blocks, roots become the marked elements.
PointedPartition forest_to_pointed_partition(const RootedForest& f);

// One-structure-per-line text formats (vertices printed as 1-based digits):
//   hypertree          "4|12,13,14"
//   cyclic_hypertree   "4|12,13,14|1:0,1,2;2:0;3:1;4:2"
//   pointed_partition  "3|1*,2*3"        ('*' follows the marked digit)
//   forest             "3|2>1,3>1"       (child>parent, empty forest "3|")
std::string to_line(const Hypertree& t);
std::string to_line(const CyclicHypertree& c);
std::string to_line(const PointedPartition& p);
std::string to_line(const RootedForest& f);

Hypertree hypertree_from_line(const std::string& line);
CyclicHypertree cyclic_from_line(const std::string& line);
PointedPartition pointed_partition_from_line(const std::string& line);
RootedForest forest_from_line(const std::string& line);

std::vector<std::string> enumerate_lines(Family f, int n, int safety_bound);

/// Cache file: a "# family=<f> n=<n> count=<c>" header, then one line per
/// structure.  Loading validates the header, the count, and every line
/// (parse + canonical round-trip).
void write_cache(std::ostream& os, Family f, int n,
                 const std::vector<std::string>& lines);
std::vector<std::string> read_cache(std::istream& is, Family f, int n);

/// Uses <cache_dir>/<family>_<n>.txt when cache_dir is nonempty: loads it if
/// present, otherwise enumerates and writes it.
std::vector<std::string> enumerate_lines_cached(Family f, int n, int safety_bound,
                                                const std::string& cache_dir);

}  // namespace hyperchar
