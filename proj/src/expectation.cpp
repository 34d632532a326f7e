#include "sepgraph/expectation.hpp"

namespace sepgraph {

namespace {

// Shape gamma nu^* of a normal-form word: real letters then ghost letters.
// Returns false if some ghost precedes a real.
bool split_paths(const std::vector<Letter>& w, std::vector<int>& gamma,
                 std::vector<int>& nu) {
  size_t i = 0;
  gamma.clear();
  nu.clear();
  while (i < w.size() && !w[i].ghost)
    gamma.push_back(w[i++].edge);
  std::vector<int> ghost;
  while (i < w.size() && w[i].ghost)
    ghost.push_back(w[i++].edge);
  if (i != w.size())
    return false;
  nu.assign(ghost.rbegin(), ghost.rend()); // nu in path order
  return true;
}

} // namespace

VertexFunction phi_graph(const SeparatedGraph& g, const AlgebraElement& a,
                         const ExpectationOptions& opts) {
  if (!g.is_trivially_separated())
    throw Error(ErrorKind::NotTriviallySeparated,
                "some vertex has more than one block");
  AlgebraElement nf = normal_form(a, g, opts.rewrite);
  VertexFunction out;
  for (const auto& [m, c] : nf.terms()) {
    if (m.is_vertex()) {
      out.add(m.vertex, c);
      continue;
    }
    std::vector<int> gamma, nu;
    if (!split_paths(m.word, gamma, nu))
      throw Error(ErrorKind::InvalidParameters,
                  "normal-form monomial is not of the form gamma nu^*");
    if (gamma != nu)
      continue;
    BigRat weight(1);
    for (int e : gamma)
      weight /= (long)g.out_edges(g.edge(e).source).size();
    out.add(g.edge(gamma.front()).source, c * Scalar(weight));
  }
  return out;
}

namespace {

// Phi_X on an element supported on words in the block's letters (plus A0).
// In E_X every edge has source at the block's vertex, so n_lambda = |X|^|gamma|.
VertexFunction phi_block(const SeparatedGraph& g, int block,
                         const AlgebraElement& a) {
  const Block& blk = g.block(block);
  VertexFunction out;
  for (const auto& [m, c] : a.terms()) {
    if (m.is_vertex()) {
      out.add(m.vertex, c);
      continue;
    }
    for (const Letter& l : m.word)
      if (g.block_of_edge(l.edge) != block)
        throw Error(ErrorKind::BlockMismatch,
                    "edge '" + g.edge(l.edge).name + "' is not in block '" +
                        blk.name + "'");
    std::vector<int> gamma, nu;
    if (!split_paths(m.word, gamma, nu))
      throw Error(ErrorKind::InvalidParameters,
                  "block segment is not of the form gamma nu^*");
    if (gamma != nu)
      continue;
    BigRat weight(1);
    for (size_t i = 0; i < gamma.size(); ++i)
      weight /= (long)blk.edges.size();
    out.add(blk.vertex, c * Scalar(weight));
  }
  return out;
}

bool a0_valued(const AlgebraElement& a) {
  for (const auto& [m, c] : a.terms())
    if (!m.is_vertex())
      return false;
  return true;
}

VertexFunction as_vertex_function(const AlgebraElement& a) {
  VertexFunction f;
  for (const auto& [m, c] : a.terms())
    f.add(m.vertex, c);
  return f;
}

struct Factor {
  int block;
  AlgebraElement elem;
};

class Evaluator {
public:
  Evaluator(const SeparatedGraph& g, const ExpectationOptions& opts)
      : g_(g), opts_(opts) {}

  VertexFunction eval(std::vector<Factor> fs) {
    if (++nodes_ > opts_.eval_limit)
      throw Error(ErrorKind::StepLimitExceeded,
                  "expectation evaluation exceeded " +
                      std::to_string(opts_.eval_limit) + " nodes");

    // absorb A0-valued factors and re-fuse equal-block neighbors
    for (bool changed = true; changed;) {
      changed = false;
      for (const Factor& f : fs)
        if (f.elem.is_zero())
          return {};
      for (size_t i = 0; i + 1 < fs.size(); ++i)
        if (fs[i].block == fs[i + 1].block) {
          fs[i].elem = multiply(fs[i].elem, fs[i + 1].elem, g_, opts_.rewrite);
          fs.erase(fs.begin() + i + 1);
          changed = true;
          break;
        }
      if (changed)
        continue;
      for (size_t i = 0; i < fs.size(); ++i)
        if (a0_valued(fs[i].elem)) {
          if (fs.size() == 1)
            return as_vertex_function(fs[0].elem);
          if (i + 1 < fs.size()) {
            fs[i + 1].elem = multiply(fs[i].elem, fs[i + 1].elem, g_, opts_.rewrite);
          } else {
            fs[i - 1].elem = multiply(fs[i - 1].elem, fs[i].elem, g_, opts_.rewrite);
          }
          fs.erase(fs.begin() + i);
          changed = true;
          break;
        }
    }

    if (fs.empty())
      return {};
    if (fs.size() == 1)
      return phi_block(g_, fs[0].block, fs[0].elem);

    std::string k = key(fs);
    if (auto it = memo_.find(k); it != memo_.end())
      return it->second;

    std::vector<VertexFunction> phis;
    int first_uncentered = -1;
    for (size_t i = 0; i < fs.size(); ++i) {
      phis.push_back(phi_block(g_, fs[i].block, fs[i].elem));
      if (first_uncentered < 0 && !phis.back().is_zero())
        first_uncentered = (int)i;
    }

    VertexFunction result;
    if (first_uncentered < 0) {
      // alternating product of centered factors: freeness gives zero
      result = {};
    } else {
      int j = first_uncentered;
      std::vector<Factor> centered = fs;
      centered[j].elem = fs[j].elem - phis[j].as_element();
      std::vector<Factor> merged = fs;
      merged[j].elem = phis[j].as_element();
      result = eval(std::move(centered)) + eval(std::move(merged));
    }
    memo_.emplace(std::move(k), result);
    return result;
  }

private:
  std::string key(const std::vector<Factor>& fs) const {
    std::string k;
    for (const Factor& f : fs) {
      k += "[" + std::to_string(f.block) + ":";
      for (const auto& [m, c] : f.elem.terms()) {
        k += c.str() + "*";
        if (m.is_vertex())
          k += "v" + std::to_string(m.vertex);
        else
          for (const Letter& l : m.word)
            k += (l.ghost ? "g" : "e") + std::to_string(l.edge) + ".";
        k += ";";
      }
      k += "]";
    }
    return k;
  }

  const SeparatedGraph& g_;
  const ExpectationOptions& opts_;
  long nodes_ = 0;
  std::map<std::string, VertexFunction> memo_;
};

} // namespace

std::pair<VertexFunction, BlockFactor> center(const SeparatedGraph& g, int block,
                                              const AlgebraElement& m,
                                              const ExpectationOptions& opts) {
  if (block < 0 || block >= g.block_count())
    throw Error(ErrorKind::UnknownBlock, "index " + std::to_string(block));
  AlgebraElement nf = normal_form(m, g, opts.rewrite);
  VertexFunction phi = phi_block(g, block, nf); // also checks block support
  BlockFactor f{block, nf - phi.as_element(), true};
  return {phi, f};
}

VertexFunction phi_sep(const SeparatedGraph& g, const AlgebraElement& a,
                       const ExpectationOptions& opts) {
  AlgebraElement nf = normal_form(a, g, opts.rewrite);
  VertexFunction out;
  Evaluator ev(g, opts);
  for (const auto& [m, c] : nf.terms()) {
    if (m.is_vertex()) {
      out.add(m.vertex, c);
      continue;
    }
    // maximal single-block segments
    std::vector<Factor> factors;
    size_t i = 0;
    while (i < m.word.size()) {
      int blk = g.block_of_edge(m.word[i].edge);
      size_t j = i;
      while (j < m.word.size() && g.block_of_edge(m.word[j].edge) == blk)
        ++j;
      factors.push_back(Factor{
          blk, AlgebraElement::word({m.word.begin() + i, m.word.begin() + j})});
      i = j;
    }
    VertexFunction phi = ev.eval(std::move(factors));
    for (const auto& [v, val] : phi.values)
      out.add(v, c * val);
  }
  return out;
}

} // namespace sepgraph
