#include "hyperchar/structures.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <functional>
#include <sstream>

namespace hyperchar {

namespace {

std::vector<int> expand(std::uint16_t mask) {
  std::vector<int> v;
  for (int i = 0; i < 16; ++i)
    if (mask >> i & 1) v.push_back(i);
  return v;
}

void check_bounds(const char* what, int n, int min_n, int safety_bound) {
  if (n < min_n)
    throw std::invalid_argument(std::string(what) + ": n must be at least " +
                                std::to_string(min_n));
  if (n > safety_bound)
    throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(n) +
                                " exceeds the safety bound " +
                                std::to_string(safety_bound));
}

struct Dsu {
  std::array<std::int8_t, 16> parent;
  int components;
  explicit Dsu(int n) : components(n) {
    for (int i = 0; i < 16; ++i) parent[i] = static_cast<std::int8_t>(i);
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  // Adds a hyperedge; returns false (and leaves a partial merge) when two of
  // its vertices already sit in one component, i.e. the edge closes a cycle.
  bool add_edge(std::uint16_t mask) {
    int first = -1;
    for (int v = 0; v < 16; ++v) {
      if (!(mask >> v & 1)) continue;
      if (first < 0) {
        first = find(v);
        continue;
      }
      int r = find(v);
      if (r == first) return false;
      parent[r] = static_cast<std::int8_t>(first);
      --components;
    }
    return true;
  }
};

}  // namespace

Perm perm_from_cycle_type(const Partition& lambda, int n) {
  if (lambda.weight() != n)
    throw std::invalid_argument("perm_from_cycle_type: partition weight != n");
  Perm p(n);
  int base = 0;
  for (int part : lambda.parts()) {
    for (int i = 0; i < part; ++i) p[base + i] = base + (i + 1) % part;
    base += part;
  }
  return p;
}

Family family_from_string(const std::string& name) {
  if (name == "hypertree") return Family::Hypertree;
  if (name == "cyclic_hypertree") return Family::CyclicHypertree;
  if (name == "pointed_partition") return Family::PointedPartition;
  if (name == "forest") return Family::RootedForest;
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::string family_to_string(Family f) {
  switch (f) {
    case Family::Hypertree: return "hypertree";
    case Family::CyclicHypertree: return "cyclic_hypertree";
    case Family::PointedPartition: return "pointed_partition";
    case Family::RootedForest: return "forest";
  }
  throw std::logic_error("family_to_string: bad enum");
}

bool edge_less(std::uint16_t a, std::uint16_t b) {
  int la = std::countr_zero(a), lb = std::countr_zero(b);
  if (la != lb) return la < lb;
  int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  return expand(a) < expand(b);
}

bool is_hypertree(int n, const std::vector<std::uint16_t>& edges) {
  if (n < 1) return false;
  const std::uint16_t all = static_cast<std::uint16_t>((1u << n) - 1);
  int weight = 0;
  Dsu dsu(n);
  for (std::uint16_t e : edges) {
    if (e == 0 || (e & ~all)) return false;
    int size = std::popcount(e);
    if (size < 2) return false;
    weight += size - 1;
    if (!dsu.add_edge(e)) return false;
  }
  if (weight != n - 1) return false;
  return dsu.components == 1;
}

std::vector<Hypertree> enumerate_hypertrees(int n, int safety_bound) {
  check_bounds("enumerate_hypertrees", n, 2, safety_bound);
  std::vector<std::uint16_t> candidates;
  for (std::uint16_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) >= 2) candidates.push_back(m);
  std::sort(candidates.begin(), candidates.end(), edge_less);

  std::vector<Hypertree> out;
  std::vector<std::uint16_t> current;
  // DFS over the ordered candidate list; the union-find rejects any edge two
  // of whose vertices are already connected, so partial selections are
  // exactly the Berge-acyclic edge sets and no duplicate is ever produced.
  auto rec = [&](auto&& self, size_t start, const Dsu& dsu, int weight_left) -> void {
    if (weight_left == 0) {
      if (dsu.components == 1) out.push_back(Hypertree{n, current});
      return;
    }
    for (size_t j = start; j < candidates.size(); ++j) {
      int w = std::popcount(candidates[j]) - 1;
      if (w > weight_left) continue;
      Dsu next = dsu;
      if (!next.add_edge(candidates[j])) continue;
      current.push_back(candidates[j]);
      self(self, j + 1, next, weight_left - w);
      current.pop_back();
    }
  };
  rec(rec, 0, Dsu(n), n - 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool hypertree_leq(const Hypertree& a, const Hypertree& b) {
  if (a.n != b.n) throw std::invalid_argument("hypertree_leq: different vertex sets");
  // a <= b when b refines a: every b-edge sits inside an a-edge.  (It then
  // follows that each a-edge is the union of the b-edges it contains.)
  for (std::uint16_t eb : b.edges) {
    bool inside = false;
    for (std::uint16_t ea : a.edges)
      if ((eb & ~ea) == 0) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

int hypertree_rank(const Hypertree& t) {
  return static_cast<int>(t.edges.size()) - 1;
}

Hypertree hypertree_relabel(const Hypertree& t, const Perm& p) {
  Hypertree r;
  r.n = t.n;
  r.edges.reserve(t.edges.size());
  for (std::uint16_t e : t.edges) {
    std::uint16_t m = 0;
    for (int v : expand(e)) m = static_cast<std::uint16_t>(m | (1u << p[v]));
    r.edges.push_back(m);
  }
  std::sort(r.edges.begin(), r.edges.end(), edge_less);
  return r;
}

namespace {

std::vector<std::vector<int>> incidence_lists(const Hypertree& t) {
  std::vector<std::vector<int>> inc(t.n);
  for (size_t i = 0; i < t.edges.size(); ++i)
    for (int v : expand(t.edges[i])) inc[v].push_back(static_cast<int>(i));
  return inc;
}

std::vector<int> rotate_to_min(std::vector<int> cyc) {
  auto it = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), it, cyc.end());
  return cyc;
}

}  // namespace

std::vector<CyclicHypertree> enumerate_cyclic_hypertrees(int n, int safety_bound) {
  check_bounds("enumerate_cyclic_hypertrees", n, 2, safety_bound);
  std::vector<CyclicHypertree> out;
  for (const Hypertree& base : enumerate_hypertrees(n, safety_bound)) {
    std::vector<std::vector<int>> inc = incidence_lists(base);
    std::vector<std::vector<std::vector<int>>> choices(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> tail(inc[v].begin() + 1, inc[v].end());
      std::sort(tail.begin(), tail.end());
      do {
        std::vector<int> order{inc[v][0]};
        order.insert(order.end(), tail.begin(), tail.end());
        choices[v].push_back(std::move(order));
      } while (std::next_permutation(tail.begin(), tail.end()));
    }
    std::vector<std::vector<int>> orders(n);
    auto rec = [&](auto&& self, int v) -> void {
      if (v == n) {
        out.push_back(CyclicHypertree{base, orders});
        return;
      }
      for (const auto& o : choices[v]) {
        orders[v] = o;
        self(self, v + 1);
      }
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CyclicHypertree cyclic_relabel(const CyclicHypertree& c, const Perm& p) {
  const Hypertree& base = c.base;
  Hypertree nb = hypertree_relabel(base, p);
  // Index of each relabelled edge inside the re-sorted edge list.
  std::vector<int> edge_map(base.edges.size());
  for (size_t i = 0; i < base.edges.size(); ++i) {
    std::uint16_t m = 0;
    for (int v : expand(base.edges[i])) m = static_cast<std::uint16_t>(m | (1u << p[v]));
    edge_map[i] = static_cast<int>(
        std::find(nb.edges.begin(), nb.edges.end(), m) - nb.edges.begin());
  }
  std::vector<std::vector<int>> orders(base.n);
  for (int v = 0; v < base.n; ++v) {
    std::vector<int> o;
    o.reserve(c.orders[v].size());
    for (int i : c.orders[v]) o.push_back(edge_map[i]);
    orders[p[v]] = rotate_to_min(std::move(o));
  }
  return CyclicHypertree{std::move(nb), std::move(orders)};
}

int cyclic_rank(const CyclicHypertree& c) { return hypertree_rank(c.base); }

TPoly cyclic_rank_polynomial(int n, int safety_bound) {
  TPoly acc;
  for (const Hypertree& t : enumerate_hypertrees(n, safety_bound)) {
    Rational w = 1;
    std::vector<std::vector<int>> inc = incidence_lists(t);
    for (int v = 0; v < n; ++v)
      w *= Rational(factorial(static_cast<int>(inc[v].size()) - 1));
    acc += TPoly::monomial(hypertree_rank(t), w);
  }
  return acc;
}

std::vector<PointedPartition> enumerate_pointed_partitions(int n, int safety_bound) {
  check_bounds("enumerate_pointed_partitions", n, 1, safety_bound);
  std::vector<PointedPartition> out;
  std::vector<int> rgs(n, 0);
  auto emit = [&](int nblocks) {
    std::vector<std::uint16_t> blocks(nblocks, 0);
    for (int v = 0; v < n; ++v)
      blocks[rgs[v]] = static_cast<std::uint16_t>(blocks[rgs[v]] | (1u << v));
    // All markings, one per block.
    std::vector<std::vector<int>> members(nblocks);
    for (int b = 0; b < nblocks; ++b) members[b] = expand(blocks[b]);
    std::vector<int> pick(nblocks, 0);
    while (true) {
      PointedPartition pp;
      pp.n = n;
      pp.blocks = blocks;
      for (int b = 0; b < nblocks; ++b) pp.pointed.push_back(members[b][pick[b]]);
      out.push_back(std::move(pp));
      int b = nblocks - 1;
      while (b >= 0 && pick[b] + 1 == static_cast<int>(members[b].size())) {
        pick[b] = 0;
        --b;
      }
      if (b < 0) break;
      ++pick[b];
    }
  };
  auto rec = [&](auto&& self, int v, int used) -> void {
    if (v == n) {
      emit(used);
      return;
    }
    for (int b = 0; b <= used; ++b) {
      rgs[v] = b;
      self(self, v + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool pointed_partition_leq(const PointedPartition& a, const PointedPartition& b) {
  if (a.n != b.n)
    throw std::invalid_argument("pointed_partition_leq: different ground sets");
  // a refines b ...
  std::array<int, 16> block_of{};
  for (size_t i = 0; i < b.blocks.size(); ++i)
    for (int v : expand(b.blocks[i])) block_of[v] = static_cast<int>(i);
  for (std::uint16_t blk : a.blocks) {
    int v0 = std::countr_zero(blk);
    if ((blk & ~b.blocks[block_of[v0]]) != 0) return false;
  }
  // ... and markings of b stay marked in a.
  std::uint16_t marked_a = 0;
  for (int v : a.pointed) marked_a = static_cast<std::uint16_t>(marked_a | (1u << v));
  for (int v : b.pointed)
    if (!(marked_a >> v & 1)) return false;
  return true;
}

int pointed_partition_rank(const PointedPartition& p) {
  return p.n - static_cast<int>(p.blocks.size());
}

PointedPartition pointed_partition_relabel(const PointedPartition& pp, const Perm& p) {
  std::vector<std::pair<std::uint16_t, int>> mapped;
  for (size_t i = 0; i < pp.blocks.size(); ++i) {
    std::uint16_t m = 0;
    for (int v : expand(pp.blocks[i])) m = static_cast<std::uint16_t>(m | (1u << p[v]));
    mapped.emplace_back(m, p[pp.pointed[i]]);
  }
  std::sort(mapped.begin(), mapped.end(),
            [](const auto& x, const auto& y) {
              return std::countr_zero(x.first) < std::countr_zero(y.first);
            });
  PointedPartition r;
  r.n = pp.n;
  for (auto& [m, pt] : mapped) {
    r.blocks.push_back(m);
    r.pointed.push_back(pt);
  }
  return r;
}

std::vector<RootedForest> enumerate_rooted_forests(int n, int safety_bound) {
  check_bounds("enumerate_rooted_forests", n, 1, safety_bound);
  std::vector<RootedForest> out;
  std::vector<int> parent(n, -1);
  auto acyclic = [&]() {
    for (int v = 0; v < n; ++v) {
      int u = v, steps = 0;
      while (parent[u] != -1) {
        u = parent[u];
        if (++steps > n) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      if (acyclic()) out.push_back(RootedForest{n, parent});
      return;
    }
    for (int p = -1; p < n; ++p) {
      if (p == v) continue;
      parent[v] = p;
      self(self, v + 1);
    }
    parent[v] = -1;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool rooted_forest_leq(const RootedForest& a, const RootedForest& b) {
  if (a.n != b.n)
    throw std::invalid_argument("rooted_forest_leq: different vertex sets");
  for (int v = 0; v < a.n; ++v)
    if (a.parent[v] != -1 && a.parent[v] != b.parent[v]) return false;
  return true;
}

int rooted_forest_rank(const RootedForest& f) {
  int r = 0;
  for (int p : f.parent) r += p != -1;
  return r;
}

RootedForest rooted_forest_relabel(const RootedForest& f, const Perm& p) {
  RootedForest r;
  r.n = f.n;
  r.parent.assign(f.n, -1);
  for (int v = 0; v < f.n; ++v)
    if (f.parent[v] != -1) r.parent[p[v]] = p[f.parent[v]];
  return r;
}

PointedPartition forest_to_pointed_partition(const RootedForest& f) {
  std::vector<int> root_of(f.n);
  for (int v = 0; v < f.n; ++v) {
    int u = v;
    while (f.parent[u] != -1) u = f.parent[u];
    root_of[v] = u;
  }
  std::vector<std::pair<std::uint16_t, int>> comps;  // (mask, root) keyed by root
  for (int root = 0; root < f.n; ++root) {
    std::uint16_t m = 0;
    for (int v = 0; v < f.n; ++v)
      if (root_of[v] == root) m = static_cast<std::uint16_t>(m | (1u << v));
    if (m) comps.emplace_back(m, root);
  }
  std::sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) {
    return std::countr_zero(x.first) < std::countr_zero(y.first);
  });
  PointedPartition pp;
  pp.n = f.n;
  for (auto& [m, root] : comps) {
    pp.blocks.push_back(m);
    pp.pointed.push_back(root);
  }
  return pp;
}

// ---------------------------------------------------------------------------
// Text formats.

namespace {

char vertex_char(int v) { return static_cast<char>('1' + v); }

int vertex_from_char(char c, int n) {
  int v = c - '1';
  if (v < 0 || v >= n) throw std::invalid_argument("bad vertex digit");
  return v;
}

std::string mask_str(std::uint16_t mask) {
  std::string s;
  for (int v : expand(mask)) s += vertex_char(v);
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_n_prefix(const std::string& line, std::string& rest) {
  auto bar = line.find('|');
  if (bar == std::string::npos || bar == 0)
    throw std::invalid_argument("bad structure line: '" + line + "'");
  int n = std::stoi(line.substr(0, bar));
  if (n < 1 || n > 9)
    throw std::invalid_argument("bad vertex count in line: '" + line + "'");
  rest = line.substr(bar + 1);
  return n;
}

}  // namespace

std::string to_line(const Hypertree& t) {
  std::string s = std::to_string(t.n) + "|";
  for (size_t i = 0; i < t.edges.size(); ++i) {
    if (i) s += ",";
    s += mask_str(t.edges[i]);
  }
  return s;
}

std::string to_line(const CyclicHypertree& c) {
  std::string s = to_line(c.base) + "|";
  for (int v = 0; v < c.base.n; ++v) {
    if (v) s += ";";
    s += vertex_char(v);
    s += ":";
    for (size_t i = 0; i < c.orders[v].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c.orders[v][i]);
    }
  }
  return s;
}

std::string to_line(const PointedPartition& p) {
  std::string s = std::to_string(p.n) + "|";
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) s += ",";
    for (int v : expand(p.blocks[i])) {
      s += vertex_char(v);
      if (v == p.pointed[i]) s += "*";
    }
  }
  return s;
}

std::string to_line(const RootedForest& f) {
  std::string s = std::to_string(f.n) + "|";
  bool first = true;
  for (int v = 0; v < f.n; ++v) {
    if (f.parent[v] == -1) continue;
    if (!first) s += ",";
    first = false;
    s += vertex_char(v);
    s += ">";
    s += vertex_char(f.parent[v]);
  }
  return s;
}

Hypertree hypertree_from_line(const std::string& line) {
  std::string rest;
  int n = parse_n_prefix(line, rest);
  Hypertree t;
  t.n = n;
  for (const std::string& es : split(rest, ',')) {
    std::uint16_t m = 0;
    for (char c : es) m = static_cast<std::uint16_t>(m | (1u << vertex_from_char(c, n)));
    t.edges.push_back(m);
  }
  std::sort(t.edges.begin(), t.edges.end(), edge_less);
  // The round-trip comparison rejects lines that were not already canonical.
  if (!is_hypertree(n, t.edges) || to_line(t) != line)
    throw std::invalid_argument("bad hypertree line: '" + line + "'");
  return t;
}

CyclicHypertree cyclic_from_line(const std::string& line) {
  auto second_bar = line.find('|', line.find('|') + 1);
  if (second_bar == std::string::npos)
    throw std::invalid_argument("bad cyclic hypertree line: '" + line + "'");
  CyclicHypertree c;
  c.base = hypertree_from_line(line.substr(0, second_bar));
  c.orders.assign(c.base.n, {});
  for (const std::string& part : split(line.substr(second_bar + 1), ';')) {
    auto colon = part.find(':');
    if (colon != 1)
      throw std::invalid_argument("bad cyclic hypertree line: '" + line + "'");
    int v = vertex_from_char(part[0], c.base.n);
    for (const std::string& idx : split(part.substr(2), ','))
      c.orders[v].push_back(std::stoi(idx));
  }
  // Each list must permute the indices of the edges at its vertex; rotate it
  // to start at the smallest so the round-trip check sees canonical form.
  for (int v = 0; v < c.base.n; ++v) {
    std::vector<int> incident;
    for (size_t i = 0; i < c.base.edges.size(); ++i)
      if (c.base.edges[i] >> v & 1) incident.push_back(static_cast<int>(i));
    std::vector<int> got = c.orders[v];
    std::sort(got.begin(), got.end());
    if (got != incident)
      throw std::invalid_argument("bad cyclic hypertree line: '" + line + "'");
    auto& ord = c.orders[v];
    std::rotate(ord.begin(), std::min_element(ord.begin(), ord.end()), ord.end());
  }
  if (to_line(c) != line)
    throw std::invalid_argument("bad cyclic hypertree line: '" + line + "'");
  return c;
}

PointedPartition pointed_partition_from_line(const std::string& line) {
  std::string rest;
  int n = parse_n_prefix(line, rest);
  PointedPartition p;
  p.n = n;
  for (const std::string& bs : split(rest, ',')) {
    std::uint16_t m = 0;
    int pointed = -1, last = -1;
    for (char c : bs) {
      if (c == '*') {
        if (last < 0 || pointed >= 0)
          throw std::invalid_argument("bad pointed partition line: '" + line + "'");
        pointed = last;
        continue;
      }
      last = vertex_from_char(c, n);
      m = static_cast<std::uint16_t>(m | (1u << last));
    }
    if (pointed < 0)
      throw std::invalid_argument("bad pointed partition line: '" + line + "'");
    p.blocks.push_back(m);
    p.pointed.push_back(pointed);
  }
  int covered = 0;
  std::uint32_t seen = 0;
  for (std::uint16_t b : p.blocks) {
    if (seen & b)
      throw std::invalid_argument("bad pointed partition line: '" + line + "'");
    seen |= b;
    covered += std::popcount(b);
  }
  if (covered != n)
    throw std::invalid_argument("bad pointed partition line: '" + line + "'");
  std::vector<size_t> order(p.blocks.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return std::countr_zero(p.blocks[a]) < std::countr_zero(p.blocks[b]);
  });
  PointedPartition sorted;
  sorted.n = n;
  for (size_t i : order) {
    sorted.blocks.push_back(p.blocks[i]);
    sorted.pointed.push_back(p.pointed[i]);
  }
  // The round-trip comparison rejects lines that were not already canonical.
  if (to_line(sorted) != line)
    throw std::invalid_argument("bad pointed partition line: '" + line + "'");
  return sorted;
}

RootedForest forest_from_line(const std::string& line) {
  std::string rest;
  int n = parse_n_prefix(line, rest);
  RootedForest f;
  f.n = n;
  f.parent.assign(n, -1);
  if (!rest.empty()) {
    for (const std::string& es : split(rest, ',')) {
      if (es.size() != 3 || es[1] != '>')
        throw std::invalid_argument("bad forest line: '" + line + "'");
      f.parent[vertex_from_char(es[0], n)] = vertex_from_char(es[2], n);
    }
  }
  for (int v = 0; v < n; ++v) {  // every parent walk must reach a root
    int w = v;
    for (int steps = 0; w >= 0; ++steps) {
      if (steps > n) throw std::invalid_argument("bad forest line: '" + line + "'");
      w = f.parent[w];
    }
  }
  if (to_line(f) != line)
    throw std::invalid_argument("bad forest line: '" + line + "'");
  return f;
}

std::vector<std::string> enumerate_lines(Family f, int n, int safety_bound) {
  std::vector<std::string> lines;
  switch (f) {
    case Family::Hypertree:
      for (const auto& t : enumerate_hypertrees(n, safety_bound))
        lines.push_back(to_line(t));
      break;
    case Family::CyclicHypertree:
      for (const auto& c : enumerate_cyclic_hypertrees(n, safety_bound))
        lines.push_back(to_line(c));
      break;
    case Family::PointedPartition:
      for (const auto& p : enumerate_pointed_partitions(n, safety_bound))
        lines.push_back(to_line(p));
      break;
    case Family::RootedForest:
      for (const auto& fo : enumerate_rooted_forests(n, safety_bound))
        lines.push_back(to_line(fo));
      break;
  }
  return lines;
}

void write_cache(std::ostream& os, Family f, int n,
                 const std::vector<std::string>& lines) {
  os << "# family=" << family_to_string(f) << " n=" << n
     << " count=" << lines.size() << "\n";
  for (const std::string& l : lines) os << l << "\n";
}

std::vector<std::string> read_cache(std::istream& is, Family f, int n) {
  std::string header;
  if (!std::getline(is, header))
    throw std::invalid_argument("cache: empty file");
  std::string expected_prefix =
      "# family=" + family_to_string(f) + " n=" + std::to_string(n) + " count=";
  if (header.rfind(expected_prefix, 0) != 0)
    throw std::invalid_argument("cache: header mismatch, got '" + header + "'");
  size_t count = std::stoul(header.substr(expected_prefix.size()));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    switch (f) {
      case Family::Hypertree: hypertree_from_line(line); break;
      case Family::CyclicHypertree: cyclic_from_line(line); break;
      case Family::PointedPartition: pointed_partition_from_line(line); break;
      case Family::RootedForest: forest_from_line(line); break;
    }
    lines.push_back(line);
  }
  if (lines.size() != count)
    throw std::invalid_argument("cache: count mismatch (header says " +
                                std::to_string(count) + ", file has " +
                                std::to_string(lines.size()) + " lines)");
  return lines;
}

std::vector<std::string> enumerate_lines_cached(Family f, int n, int safety_bound,
                                                const std::string& cache_dir) {
  if (cache_dir.empty()) return enumerate_lines(f, n, safety_bound);
  std::filesystem::create_directories(cache_dir);
  std::string path =
      cache_dir + "/" + family_to_string(f) + "_" + std::to_string(n) + ".txt";
  if (std::ifstream in{path}) return read_cache(in, f, n);
  std::vector<std::string> lines = enumerate_lines(f, n, safety_bound);
  std::ofstream out(path);
  if (out) write_cache(out, f, n, lines);
  return lines;
}

}  // namespace hyperchar
