#ifndef SEPGRAPH_TESTUTIL_HPP
#define SEPGRAPH_TESTUTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "sepgraph/graph.hpp"
#include "sepgraph/leavitt.hpp"

namespace testutil {

using namespace sepgraph;

// Random finitely separated graph with <= max_v vertices and <= max_e edges.
// Every vertex's out-edges are partitioned into one to three blocks, or into a
// single block when trivial is set.
inline SeparatedGraph random_graph(std::mt19937& rng, bool trivial,
                                   int max_v = 5, int max_e = 8) {
  int nv = std::uniform_int_distribution<>(1, max_v)(rng);
  int ne = std::uniform_int_distribution<>(0, max_e)(rng);
  RawGraph raw;
  for (int v = 0; v < nv; ++v)
    raw.vertices.push_back("u" + std::to_string(v));
  std::vector<std::vector<std::string>> out(nv);
  for (int e = 0; e < ne; ++e) {
    int s = std::uniform_int_distribution<>(0, nv - 1)(rng);
    int r = std::uniform_int_distribution<>(0, nv - 1)(rng);
    std::string name = "e" + std::to_string(e);
    raw.edges.push_back({name, raw.vertices[s], raw.vertices[r]});
    out[s].push_back(name);
  }
  if (trivial)
    return SeparatedGraph::trivially_separate(raw);
  for (int v = 0; v < nv; ++v) {
    if (out[v].empty())
      continue;
    std::shuffle(out[v].begin(), out[v].end(), rng);
    int nblocks = std::uniform_int_distribution<>(
        1, std::min<int>(3, (int)out[v].size()))(rng);
    std::vector<RawGraph::RawBlock> blocks(nblocks);
    for (int b = 0; b < nblocks; ++b) {
      blocks[b].vertex = raw.vertices[v];
      blocks[b].name = "B" + std::to_string(b + 1);
      blocks[b].edges.push_back(out[v][b]); // one edge each, so none is empty
    }
    for (size_t i = nblocks; i < out[v].size(); ++i)
      blocks[std::uniform_int_distribution<>(0, nblocks - 1)(rng)]
          .edges.push_back(out[v][i]);
    for (auto& b : blocks)
      raw.blocks.push_back(std::move(b));
  }
  return SeparatedGraph::validate(raw);
}

inline Scalar random_scalar(std::mt19937& rng, bool gaussian = true) {
  std::uniform_int_distribution<> num(-3, 3);
  std::uniform_int_distribution<> den(1, 3);
  BigRat re(num(rng), den(rng));
  BigRat im = gaussian ? BigRat(num(rng), den(rng)) : BigRat(0);
  return Scalar(re, im);
}

// Random composable word starting anywhere, as a monomial term.
inline Monomial random_monomial(std::mt19937& rng, const SeparatedGraph& g,
                                int max_len) {
  int at = std::uniform_int_distribution<>(0, g.vertex_count() - 1)(rng);
  int len = std::uniform_int_distribution<>(0, max_len)(rng);
  std::vector<Letter> word;
  for (int i = 0; i < len; ++i) {
    std::vector<Letter> options;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).source == at)
        options.push_back(Letter{e, false});
      if (g.edge(e).range == at)
        options.push_back(Letter{e, true});
    }
    if (options.empty())
      break;
    Letter l = options[std::uniform_int_distribution<>(
        0, (int)options.size() - 1)(rng)];
    word.push_back(l);
    at = letter_range(g, l);
  }
  if (word.empty())
    return Monomial::at_vertex(at);
  return Monomial::of_word(std::move(word));
}

inline AlgebraElement random_element(std::mt19937& rng, const SeparatedGraph& g,
                                     int max_terms = 3, int max_len = 4,
                                     bool gaussian = true) {
  AlgebraElement a;
  int terms = std::uniform_int_distribution<>(1, max_terms)(rng);
  for (int t = 0; t < terms; ++t)
    a.add_term(random_monomial(rng, g, max_len), random_scalar(rng, gaussian));
  return a;
}

} // namespace testutil

#endif
