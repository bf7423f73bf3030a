#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hyperchar/rational.hpp"

namespace hyperchar {

/// Integer partition stored as a weakly decreasing vector of positive parts.
/// The empty partition (of 0) is allowed.  Ordering is by weight first, then
/// lexicographic on the part vectors, giving a canonical graded term order.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int weight() const { return weight_; }   // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int mult(int k) const;  // multiplicity of the part k

  Int z() const;  // prod k^{m_k} m_k! (centralizer order)

  Partition merged(const Partition& o) const;    // multiset union
  Partition stretched(int k) const;              // every part times k
  Partition without_one_part_one() const;        // requires mult(1) >= 1

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    return a.parts_ <=> b.parts_;
  }

  std::string str() const;  // "[3,1,1]"

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of n in lexicographic order on the part vectors,
/// e.g. [1,1,1] < [2,1] < [3].
std::vector<Partition> partitions_of(int n);

}  // namespace hyperchar
