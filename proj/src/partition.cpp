#include "hyperchar/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hyperchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
  std::sort(parts_.rbegin(), parts_.rend());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::mult(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Int Partition::z() const {
  Int r = 1;
  int run = 0;
  for (size_t i = 0; i < parts_.size(); ++i) {
    ++run;
    r *= parts_[i];
    if (i + 1 == parts_.size() || parts_[i + 1] != parts_[i]) {
      r *= factorial(run);
      run = 0;
    }
  }
  return r;
}

Partition Partition::merged(const Partition& o) const {
  std::vector<int> parts = parts_;
  parts.insert(parts.end(), o.parts_.begin(), o.parts_.end());
  return Partition(std::move(parts));
}

Partition Partition::stretched(int k) const {
  if (k < 1) throw std::invalid_argument("Partition::stretched: k must be >= 1");
  std::vector<int> parts = parts_;
  for (int& p : parts) p *= k;
  return Partition(std::move(parts));
}

Partition Partition::without_one_part_one() const {
  if (parts_.empty() || parts_.back() != 1)
    throw std::logic_error("Partition::without_one_part_one: no part equal to 1");
  std::vector<int> parts(parts_.begin(), parts_.end() - 1);
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << "]";
  return os.str();
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Emit weakly decreasing part vectors; recursion order yields ascending
  // lexicographic order of the (descending-sorted) vectors.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      std::vector<int> parts = cur;
      out.emplace_back(std::move(parts));
      return;
    }
    for (int p = 1; p <= std::min(remaining, max_part); ++p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  // cur collects parts in increasing order; Partition() sorts descending.
  // Sort the list to the documented order.
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return a.parts() < b.parts();
  });
  return out;
}

}  // namespace hyperchar
