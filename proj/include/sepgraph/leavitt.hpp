#ifndef SEPGRAPH_LEAVITT_HPP
#define SEPGRAPH_LEAVITT_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "sepgraph/graph.hpp"
#include "sepgraph/scalar.hpp"

namespace sepgraph {

/// A generator letter: an edge e or its adjoint e^. The adjoint composes in
/// the reversed direction (source r(e), range s(e)).
struct Letter {
  int edge = -1;
  bool ghost = false;
  auto operator<=>(const Letter&) const = default;
};

/// A vertex (length-0 path) or a nonempty composable word of letters.
struct Monomial {
  int vertex = -1;            // anchor when word is empty
  std::vector<Letter> word;

  bool is_vertex() const { return word.empty(); }

  static Monomial at_vertex(int v) { return Monomial{v, {}}; }
  static Monomial of_word(std::vector<Letter> w) { return Monomial{-1, std::move(w)}; }

  // vertices first (by index), then words by length, then lexicographically
  std::strong_ordering operator<=>(const Monomial& o) const {
    if (is_vertex() != o.is_vertex())
      return is_vertex() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (is_vertex())
      return vertex <=> o.vertex;
    if (word.size() != o.word.size())
      return word.size() <=> o.word.size();
    return word <=> o.word;
  }
  bool operator==(const Monomial& o) const { return (*this <=> o) == 0; }
};

/// Finite formal sum of monomials with Gaussian-rational coefficients.
/// Zero coefficients are never stored.
class AlgebraElement {
public:
  AlgebraElement() = default;

  static AlgebraElement zero() { return {}; }
  static AlgebraElement vertex(int v) {
    AlgebraElement a;
    a.terms_[Monomial::at_vertex(v)] = Scalar::one();
    return a;
  }
  static AlgebraElement word(std::vector<Letter> w) {
    AlgebraElement a;
    a.terms_[Monomial::of_word(std::move(w))] = Scalar::one();
    return a;
  }
  static AlgebraElement term(Monomial m, Scalar c) {
    AlgebraElement a;
    if (!c.is_zero())
      a.terms_[std::move(m)] = std::move(c);
    return a;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero())
      return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  AlgebraElement operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (const auto& [m, c] : o.terms_)
      r.add_term(m, c);
    return r;
  }
  AlgebraElement operator-(const AlgebraElement& o) const;
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

private:
  std::map<Monomial, Scalar> terms_;
};

enum class Strategy { LeftmostInnermost, RightmostOutermost };

struct RewriteOptions {
  Strategy strategy = Strategy::LeftmostInnermost;
  long step_limit = 1'000'000; // rule applications per monomial
};

int letter_source(const SeparatedGraph& g, const Letter& l);
int letter_range(const SeparatedGraph& g, const Letter& l);

/// Distinguished SCK2 pivot: lexicographically last edge name in the block.
int pivot_edge(const SeparatedGraph& g, int block);

/// Rewrite to the canonical normal form under (V), (E), (SCK1) and pivot
/// expansion of (SCK2). Non-composable words normalize to zero.
AlgebraElement normal_form(const AlgebraElement& a, const SeparatedGraph& g,
                           const RewriteOptions& opts = {});

/// Product in L(E,C), fully reduced.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b,
                        const SeparatedGraph& g,
                        const RewriteOptions& opts = {});

/// Conjugate-linear anti-automorphism: coefficients conjugated, words
/// reversed with e <-> e^.
AlgebraElement involution(const AlgebraElement& a);

AlgebraElement scale(const Scalar& c, const AlgebraElement& a);

/// Expression grammar: identifiers are vertex/edge names, postfix ^ is the
/// adjoint of a generator, juxtaposition is product, + and - are sum and
/// difference, scalars are p/q and i, parentheses group.
AlgebraElement parse_expr(const std::string& text, const SeparatedGraph& g,
                          const RewriteOptions& opts = {});

std::string monomial_str(const Monomial& m, const SeparatedGraph& g);
std::string element_str(const AlgebraElement& a, const SeparatedGraph& g);

} // namespace sepgraph

#endif
