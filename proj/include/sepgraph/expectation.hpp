#ifndef SEPGRAPH_EXPECTATION_HPP
#define SEPGRAPH_EXPECTATION_HPP

#include "sepgraph/graph.hpp"
#include "sepgraph/leavitt.hpp"

namespace sepgraph {

/// Finitely supported function E^0 -> Q(i), an element of the vertex algebra.
struct VertexFunction {
  std::map<int, Scalar> values; // vertex index -> value, zeros absent

  void add(int v, const Scalar& c) {
    if (c.is_zero())
      return;
    auto [it, fresh] = values.emplace(v, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero())
        values.erase(it);
    }
  }
  bool is_zero() const { return values.empty(); }
  VertexFunction operator+(const VertexFunction& o) const {
    VertexFunction r = *this;
    for (const auto& [v, c] : o.values)
      r.add(v, c);
    return r;
  }
  bool operator==(const VertexFunction& o) const = default;

  AlgebraElement as_element() const {
    AlgebraElement e;
    for (const auto& [v, c] : values)
      e.add_term(Monomial::at_vertex(v), c);
    return e;
  }
  std::string str(const SeparatedGraph& g) const {
    return element_str(as_element(), g);
  }
};

/// A single-block component of an element, with its centering status.
struct BlockFactor {
  int block = -1;
  AlgebraElement element;
  bool centered = false; // Phi_X(element) == 0
};

struct ExpectationOptions {
  RewriteOptions rewrite;
  long eval_limit = 1'000'000; // recursion nodes in the freeness evaluation
};

/// Canonical expectation of a non-separated row-finite graph: linear
/// extension of Phi(gamma gamma^*) = (prod |s^-1 s(e_i)|)^-1 s(gamma),
/// zero off the diagonal, identity on vertices.
VertexFunction phi_graph(const SeparatedGraph& g, const AlgebraElement& a,
                         const ExpectationOptions& opts = {});

/// Split m (supported in the block's letters) as Phi_X(m) + centered part.
std::pair<VertexFunction, BlockFactor> center(const SeparatedGraph& g, int block,
                                              const AlgebraElement& m,
                                              const ExpectationOptions& opts = {});

/// Expectation on L(E,C) of a finitely separated graph, via the freeness
/// recursion over maximal single-block segments.
VertexFunction phi_sep(const SeparatedGraph& g, const AlgebraElement& a,
                       const ExpectationOptions& opts = {});

} // namespace sepgraph

#endif
