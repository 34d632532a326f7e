#ifndef SEPGRAPH_MONOID_HPP
#define SEPGRAPH_MONOID_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sepgraph/graph.hpp"
#include "sepgraph/intlin.hpp"

namespace sepgraph {

/// Multiset of monoid generators a_v, one per vertex. Zero multiplicities
/// are never stored.
struct MonoidElement {
  std::map<int, long> counts; // vertex index -> multiplicity

  void add(int v, long n) {
    if (n == 0)
      return;
    auto it = counts.find(v);
    long next = (it == counts.end() ? 0 : it->second) + n;
    if (next == 0)
      counts.erase(v);
    else
      counts[v] = next;
  }
  bool contains(const MonoidElement& o) const {
    for (const auto& [v, n] : o.counts) {
      auto it = counts.find(v);
      if (it == counts.end() || it->second < n)
        return false;
    }
    return true;
  }
  auto operator<=>(const MonoidElement&) const = default;

  std::string str(const SeparatedGraph& g) const;
};

/// a_v = sum over e in X of a_{r(e)}, one per (vertex, block) pair.
struct MonoidRelation {
  int vertex;
  int block;
  MonoidElement right; // edge-count multiset of ranges
};

std::vector<MonoidRelation> relations(const SeparatedGraph& g);

/// All elements one relation application (either direction) away from x.
std::set<MonoidElement> neighbors(const SeparatedGraph& g,
                                  const MonoidElement& x);

enum class Decision { Yes, No, Unknown };

/// Bidirectional search for a chain of at most max_steps one-step moves.
/// No is returned only when the component of x is exhausted under the bound.
Decision equal_bounded(const SeparatedGraph& g, const MonoidElement& x,
                       const MonoidElement& y, long max_steps,
                       long max_states = 10'000);

/// Universal group of M(E,C): cokernel of the same matrix as the adjacency
/// of (E,C), with the classes of the generators a_v.
AbelianGroupPresentation grothendieck_group(const SeparatedGraph& g);

/// Literal syntax: `a_v + 2 a_w` with nonnegative integer coefficients;
/// "0" denotes the identity.
MonoidElement parse_monoid_element(const std::string& text,
                                   const SeparatedGraph& g);

} // namespace sepgraph

#endif
