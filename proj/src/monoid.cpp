#include "sepgraph/monoid.hpp"

#include <cctype>
#include <deque>

namespace sepgraph {

std::string MonoidElement::str(const SeparatedGraph& g) const {
  if (counts.empty())
    return "0";
  std::string s;
  for (const auto& [v, n] : counts) {
    if (!s.empty())
      s += " + ";
    if (n != 1)
      s += std::to_string(n) + " ";
    s += "a_" + g.vertex_name(v);
  }
  return s;
}

std::vector<MonoidRelation> relations(const SeparatedGraph& g) {
  std::vector<MonoidRelation> rels;
  for (int b = 0; b < g.block_count(); ++b) {
    const Block& blk = g.block(b);
    MonoidRelation rel{blk.vertex, b, {}};
    for (int e : blk.edges)
      rel.right.add(g.edge(e).range, 1);
    rels.push_back(std::move(rel));
  }
  return rels;
}

std::set<MonoidElement> neighbors(const SeparatedGraph& g,
                                  const MonoidElement& x) {
  std::set<MonoidElement> out;
  for (const MonoidRelation& rel : relations(g)) {
    MonoidElement left;
    left.add(rel.vertex, 1);
    if (x.contains(left)) {
      MonoidElement y = x;
      y.add(rel.vertex, -1);
      for (const auto& [v, n] : rel.right.counts)
        y.add(v, n);
      out.insert(std::move(y));
    }
    if (x.contains(rel.right)) {
      MonoidElement y = x;
      for (const auto& [v, n] : rel.right.counts)
        y.add(v, -n);
      y.add(rel.vertex, 1);
      out.insert(std::move(y));
    }
  }
  return out;
}

Decision equal_bounded(const SeparatedGraph& g, const MonoidElement& x,
                       const MonoidElement& y, long max_steps,
                       long max_states) {
  if (x == y)
    return Decision::Yes;

  std::map<MonoidElement, long> seen_x{{x, 0}}, seen_y{{y, 0}};
  std::deque<MonoidElement> front_x{x}, front_y{y};
  long dx = 0, dy = 0;
  bool capped = false;

  auto expand = [&](std::deque<MonoidElement>& front,
                    std::map<MonoidElement, long>& seen,
                    const std::map<MonoidElement, long>& other, long depth,
                    bool& met) {
    std::deque<MonoidElement> next;
    for (const MonoidElement& s : front)
      for (const MonoidElement& n : neighbors(g, s)) {
        if (seen.count(n))
          continue;
        if ((long)(seen_x.size() + seen_y.size()) >= max_states) {
          capped = true;
          return next;
        }
        seen.emplace(n, depth);
        if (other.count(n))
          met = true;
        next.push_back(n);
      }
    return next;
  };

  while (dx + dy < max_steps) {
    if (front_x.empty() || front_y.empty())
      return Decision::No; // one component fully explored, no meeting point
    bool met = false;
    if (front_x.size() <= front_y.size()) {
      front_x = expand(front_x, seen_x, seen_y, ++dx, met);
    } else {
      front_y = expand(front_y, seen_y, seen_x, ++dy, met);
    }
    if (met)
      return Decision::Yes;
    if (capped)
      return Decision::Unknown;
  }
  if (front_x.empty() || front_y.empty())
    return Decision::No;
  return Decision::Unknown;
}

AbelianGroupPresentation grothendieck_group(const SeparatedGraph& g) {
  // relation matrix built from the monoid presentation itself
  auto rels = relations(g);
  IntMatrix m(g.vertex_count(), (int)rels.size());
  for (size_t j = 0; j < rels.size(); ++j) {
    m.at(rels[j].vertex, (int)j) += 1;
    for (const auto& [v, n] : rels[j].right.counts)
      m.at(v, (int)j) -= n;
  }
  std::vector<std::string> labels;
  for (int v = 0; v < g.vertex_count(); ++v)
    labels.push_back("a_" + g.vertex_name(v));
  return cokernel(m, labels);
}

MonoidElement parse_monoid_element(const std::string& text,
                                   const SeparatedGraph& g) {
  MonoidElement out;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace((unsigned char)text[pos]))
      ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '0') {
    ++pos;
    skip_ws();
    if (pos == text.size())
      return out;
    throw Error(ErrorKind::SyntaxError, "unexpected input after '0'");
  }
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) {
      if (first)
        return out; // empty literal is the identity
      throw Error(ErrorKind::SyntaxError, "expected term after '+'");
    }
    long coeff = 1;
    if (std::isdigit((unsigned char)text[pos])) {
      size_t start = pos;
      while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
        ++pos;
      coeff = std::stol(text.substr(start, pos - start));
      skip_ws();
    }
    if (text.compare(pos, 2, "a_") != 0)
      throw Error(ErrorKind::SyntaxError,
                  "expected generator 'a_<vertex>' at column " +
                      std::to_string(pos + 1));
    pos += 2;
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
      ++pos;
    std::string name = text.substr(start, pos - start);
    out.add(g.vertex_index(name), coeff);
    first = false;
    skip_ws();
    if (pos == text.size())
      return out;
    if (text[pos] != '+')
      throw Error(ErrorKind::SyntaxError,
                  "expected '+' at column " + std::to_string(pos + 1));
    ++pos;
  }
}

} // namespace sepgraph
