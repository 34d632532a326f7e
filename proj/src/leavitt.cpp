#include "sepgraph/leavitt.hpp"

#include <algorithm>

namespace sepgraph {

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (const auto& [m, c] : o.terms())
    r.add_term(m, -c);
  return r;
}

int letter_source(const SeparatedGraph& g, const Letter& l) {
  return l.ghost ? g.edge(l.edge).range : g.edge(l.edge).source;
}

int letter_range(const SeparatedGraph& g, const Letter& l) {
  return l.ghost ? g.edge(l.edge).source : g.edge(l.edge).range;
}

int pivot_edge(const SeparatedGraph& g, int block) {
  const Block& blk = g.block(block);
  int best = blk.edges.front();
  for (int e : blk.edges)
    if (g.edge(e).name > g.edge(best).name)
      best = e;
  return best;
}

namespace {

void check_symbols(const AlgebraElement& a, const SeparatedGraph& g) {
  for (const auto& [m, c] : a.terms()) {
    if (m.is_vertex()) {
      if (m.vertex < 0 || m.vertex >= g.vertex_count())
        throw Error(ErrorKind::UnknownSymbol, "vertex index out of range");
    } else {
      for (const Letter& l : m.word)
        if (l.edge < 0 || l.edge >= g.edge_count())
          throw Error(ErrorKind::UnknownSymbol, "edge index out of range");
    }
  }
}

bool composable(const std::vector<Letter>& w, const SeparatedGraph& g) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (letter_range(g, w[i]) != letter_source(g, w[i + 1]))
      return false;
  return true;
}

// Redex kinds in a composable word:
//  GhostReal: e^ f with e,f in the same block (reduces by SCK1 to delta r(e))
//  PivotPair: p p^ with p the pivot of its block (expands by SCK2)
enum class RedexKind { None, GhostReal, PivotPair };

RedexKind redex_at(const std::vector<Letter>& w, size_t i,
                   const SeparatedGraph& g) {
  const Letter& a = w[i];
  const Letter& b = w[i + 1];
  if (a.ghost && !b.ghost) {
    if (g.block_of_edge(a.edge) == g.block_of_edge(b.edge))
      return RedexKind::GhostReal;
    return RedexKind::None;
  }
  if (!a.ghost && b.ghost && a.edge == b.edge &&
      a.edge == pivot_edge(g, g.block_of_edge(a.edge)))
    return RedexKind::PivotPair;
  return RedexKind::None;
}

struct Pending {
  std::vector<Letter> word;
  Scalar coeff;
  int anchor; // vertex the word collapses to if all letters cancel
};

// Reduce one composable word to its normal form as a linear combination.
AlgebraElement reduce_word(std::vector<Letter> start, Scalar coeff, int anchor,
                           const SeparatedGraph& g, const RewriteOptions& opts) {
  AlgebraElement out;
  std::vector<Pending> stack;
  stack.push_back({std::move(start), std::move(coeff), anchor});
  long steps = 0;

  while (!stack.empty()) {
    Pending p = std::move(stack.back());
    stack.pop_back();

    if (p.word.empty()) {
      out.add_term(Monomial::at_vertex(p.anchor), p.coeff);
      continue;
    }

    // locate a redex per strategy
    size_t pos = 0;
    RedexKind kind = RedexKind::None;
    if (opts.strategy == Strategy::LeftmostInnermost) {
      for (size_t i = 0; i + 1 < p.word.size(); ++i)
        if ((kind = redex_at(p.word, i, g)) != RedexKind::None) {
          pos = i;
          break;
        }
    } else {
      for (size_t i = p.word.size() - 1; i-- > 0;)
        if ((kind = redex_at(p.word, i, g)) != RedexKind::None) {
          pos = i;
          break;
        }
    }

    if (kind == RedexKind::None) {
      out.add_term(Monomial::of_word(std::move(p.word)), p.coeff);
      continue;
    }

    if (++steps > opts.step_limit)
      throw Error(ErrorKind::StepLimitExceeded,
                  "rewriting exceeded " + std::to_string(opts.step_limit) +
                      " rule applications");

    if (kind == RedexKind::GhostReal) {
      const Letter a = p.word[pos];
      const Letter b = p.word[pos + 1];
      if (a.edge != b.edge)
        continue; // distinct edges in one block: the word is zero
      std::vector<Letter> w = std::move(p.word);
      w.erase(w.begin() + pos, w.begin() + pos + 2);
      int next_anchor = w.empty() ? g.edge(a.edge).range : p.anchor;
      stack.push_back({std::move(w), std::move(p.coeff), next_anchor});
    } else {
      // p p^ -> v - sum over non-pivot e in the block of e e^
      int piv = p.word[pos].edge;
      int blockIdx = g.block_of_edge(piv);
      const Block& blk = g.block(blockIdx);
      std::vector<Letter> removed = p.word;
      removed.erase(removed.begin() + pos, removed.begin() + pos + 2);
      int next_anchor = removed.empty() ? g.edge(piv).source : p.anchor;
      stack.push_back({std::move(removed), p.coeff, next_anchor});
      for (int e : blk.edges) {
        if (e == piv)
          continue;
        std::vector<Letter> w = p.word;
        w[pos] = Letter{e, false};
        w[pos + 1] = Letter{e, true};
        stack.push_back({std::move(w), -p.coeff, p.anchor});
      }
    }
  }
  return out;
}

} // namespace

AlgebraElement normal_form(const AlgebraElement& a, const SeparatedGraph& g,
                           const RewriteOptions& opts) {
  check_symbols(a, g);
  AlgebraElement out;
  for (const auto& [m, c] : a.terms()) {
    if (m.is_vertex()) {
      out.add_term(m, c);
      continue;
    }
    if (!composable(m.word, g))
      continue;
    out = out + reduce_word(m.word, c, -1, g, opts);
  }
  return out;
}

namespace {

// Concatenation in the path algebra; empty optional encodes zero.
bool monomial_mul(const Monomial& a, const Monomial& b, const SeparatedGraph& g,
                  Monomial& out) {
  if (a.is_vertex() && b.is_vertex()) {
    if (a.vertex != b.vertex)
      return false;
    out = a;
    return true;
  }
  if (a.is_vertex()) {
    if (letter_source(g, b.word.front()) != a.vertex)
      return false;
    out = b;
    return true;
  }
  if (b.is_vertex()) {
    if (letter_range(g, a.word.back()) != b.vertex)
      return false;
    out = a;
    return true;
  }
  if (letter_range(g, a.word.back()) != letter_source(g, b.word.front()))
    return false;
  std::vector<Letter> w = a.word;
  w.insert(w.end(), b.word.begin(), b.word.end());
  out = Monomial::of_word(std::move(w));
  return true;
}

} // namespace

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b,
                        const SeparatedGraph& g, const RewriteOptions& opts) {
  check_symbols(a, g);
  check_symbols(b, g);
  AlgebraElement out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial prod;
      if (!monomial_mul(ma, mb, g, prod))
        continue;
      Scalar c = ca * cb;
      if (prod.is_vertex())
        out.add_term(prod, c);
      else
        out = out + reduce_word(prod.word, c, -1, g, opts);
    }
  return out;
}

AlgebraElement involution(const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [m, c] : a.terms()) {
    if (m.is_vertex()) {
      out.add_term(m, c.conj());
      continue;
    }
    std::vector<Letter> w(m.word.rbegin(), m.word.rend());
    for (Letter& l : w)
      l.ghost = !l.ghost;
    out.add_term(Monomial::of_word(std::move(w)), c.conj());
  }
  return out;
}

AlgebraElement scale(const Scalar& c, const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [m, x] : a.terms())
    out.add_term(m, c * x);
  return out;
}

std::string monomial_str(const Monomial& m, const SeparatedGraph& g) {
  if (m.is_vertex())
    return g.vertex_name(m.vertex);
  std::string s;
  for (const Letter& l : m.word) {
    if (!s.empty())
      s += " ";
    s += g.edge(l.edge).name;
    if (l.ghost)
      s += "^";
  }
  return s;
}

std::string element_str(const AlgebraElement& a, const SeparatedGraph& g) {
  if (a.is_zero())
    return "0";
  std::string s;
  for (const auto& [m, c] : a.terms()) {
    bool minus = c == -Scalar::one();
    std::string coeff;
    if (minus)
      coeff = s.empty() ? "-" : "";
    else if (c != Scalar::one())
      coeff = "(" + c.str() + ") ";
    if (!s.empty())
      s += minus ? " - " : " + ";
    s += coeff + monomial_str(m, g);
  }
  return s;
}

} // namespace sepgraph
