#include "treespectra/pair_matrix.hpp"

#include <algorithm>
#include <bit>

namespace treespectra {

const char* pair_kind_name(PairKind k) {
  switch (k) {
    case PairKind::min4pc: return "min4pc";
    case PairKind::max4pc: return "max4pc";
    case PairKind::steiner2: return "steiner2";
  }
  return "?";
}

PairSpace::PairSpace(int n) : n_(n) {
  pairs_.reserve(std::size_t(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs_.emplace_back(i, j);
}

std::size_t PairSpace::index_of(const VertexPair& p) const {
  if (p.second() > n_) fail(Errc::pair_not_found, p.label() + " not in pair index");
  // offset of row block i, plus position of j within it
  std::size_t i = std::size_t(p.first()), j = std::size_t(p.second()), n = std::size_t(n_);
  return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

std::array<int, 3> quadruple_sums(const Tree& t, int i, int j, int k, int l) {
  return {t.distance(i, l) + t.distance(j, k), t.distance(i, k) + t.distance(j, l),
          t.distance(i, j) + t.distance(k, l)};
}

int steiner_distance(const Tree& t, const VertexPair& p, const VertexPair& q) {
  int vs[4] = {p.first(), p.second(), q.first(), q.second()};
  std::vector<std::uint64_t> acc((t.edges().size() + 63) / 64, 0);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      if (vs[a] == vs[b]) continue;
      std::vector<std::uint64_t> bits = t.path_edge_bits(VertexPair(vs[a], vs[b]));
      for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= bits[w];
    }
  int count = 0;
  for (std::uint64_t w : acc) count += std::popcount(w);
  return count;
}

int pair_entry(const Tree& t, PairKind kind, const VertexPair& p, const VertexPair& q) {
  switch (kind) {
    case PairKind::min4pc: {
      auto s = quadruple_sums(t, p.first(), p.second(), q.first(), q.second());
      return *std::min_element(s.begin(), s.end());
    }
    case PairKind::max4pc: {
      auto s = quadruple_sums(t, p.first(), p.second(), q.first(), q.second());
      return *std::max_element(s.begin(), s.end());
    }
    case PairKind::steiner2:
      return steiner_distance(t, p, q);
  }
  return 0;
}

PairMatrix PairMatrix::build(const Tree& t, PairKind kind) {
  if (t.vertex_count() > 64)
    fail(Errc::cap_exceeded,
         "full pair matrices are materialized only for n <= 64; use a restricted matrix");
  PairSpace space(t.vertex_count());
  const std::size_t m = space.size();
  ExactMatrix entries(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      int v = pair_entry(t, kind, space.pair(a), space.pair(b));
      entries(a, b) = v;
      entries(b, a) = v;
    }
  }
  return PairMatrix(std::move(space), std::move(entries), kind);
}

PairBasis min4pc_basis(const Tree& t, const VertexPair& f) {
  if (t.vertex_count() == 2)
    fail(Errc::no_non_edge_exists, "n = 2 has no non-edge; Min4PC analysis needs n >= 3");
  if (t.has_edge(f)) fail(Errc::f_is_an_edge, f.label() + " is an edge of the tree");
  int d = t.distance(f);
  if (d < 2) fail(Errc::distance_too_small, f.label() + " has distance " + std::to_string(d));
  std::vector<VertexPair> pairs = t.edges();
  pairs.push_back(f);
  PairBasis b(std::move(pairs), BasisTag::min4pc);
  b.f_ = f;
  b.f_distance_ = d;
  return b;
}

std::vector<VertexPair> non_edges(const Tree& t) {
  std::vector<VertexPair> out;
  for (int i = 1; i <= t.vertex_count(); ++i)
    for (int j = i + 1; j <= t.vertex_count(); ++j) {
      VertexPair p(i, j);
      if (!t.has_edge(p)) out.push_back(p);
    }
  return out;
}

PairBasis steiner_basis(const Tree& t, const std::vector<std::pair<int, int>>& choices) {
  std::vector<LineGraphBlock> blocks = t.line_graph_blocks();
  if (choices.size() != blocks.size())
    fail(Errc::bad_choice, "need one edge pair per block (" + std::to_string(blocks.size()) +
                               " blocks, got " + std::to_string(choices.size()) + ")");
  std::vector<VertexPair> pairs = t.edges();
  std::vector<std::pair<int, int>> recorded;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    auto [a, b] = choices[j];
    const auto& idx = blocks[j].edge_indices;
    bool a_in = std::find(idx.begin(), idx.end(), a) != idx.end();
    bool b_in = std::find(idx.begin(), idx.end(), b) != idx.end();
    if (a == b || !a_in || !b_in)
      fail(Errc::bad_choice, "edges (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                                 ") are not a pair inside block " + std::to_string(j + 1));
    const VertexPair& ea = t.edges()[std::size_t(a)];
    const VertexPair& eb = t.edges()[std::size_t(b)];
    // symmetric difference of endpoints: both edges meet at the block vertex
    int v = blocks[j].vertex;
    pairs.emplace_back(ea.other(v), eb.other(v));
    recorded.emplace_back(a, b);
  }
  PairBasis out(std::move(pairs), BasisTag::steiner);
  out.block_choices_ = std::move(recorded);
  return out;
}

PairBasis steiner_basis(const Tree& t) {
  std::vector<std::pair<int, int>> choices;
  for (const LineGraphBlock& b : t.line_graph_blocks())
    choices.emplace_back(b.edge_indices[0], b.edge_indices[1]);
  return steiner_basis(t, choices);
}

PairBasis path_ordered_basis(const Tree& t) {
  const int n = t.vertex_count();
  if (n < 3) fail(Errc::size_too_small, "path-ordered basis needs n >= 3");
  for (int i = 1; i < n; ++i)
    if (t.edges()[std::size_t(i - 1)] != VertexPair(i, i + 1))
      fail(Errc::bad_params, "tree is not the standard path with e_i = {i, i+1}");
  std::vector<VertexPair> pairs;
  std::vector<std::pair<int, int>> recorded;
  for (int j = 1; j <= n - 2; ++j) {
    pairs.emplace_back(j, j + 1);
    pairs.emplace_back(j, j + 2);
    recorded.emplace_back(j - 1, j);  // f_j = symmetric difference of e_j, e_{j+1}
  }
  pairs.emplace_back(n - 1, n);
  PairBasis out(std::move(pairs), BasisTag::path_ordered);
  out.block_choices_ = std::move(recorded);
  return out;
}

std::string PairBasis::describe() const {
  std::string out;
  switch (tag_) {
    case BasisTag::min4pc:
      out = "min4pc basis, f=" + f_->label() + " (d=" + std::to_string(f_distance_) + ")";
      break;
    case BasisTag::steiner: {
      out = "steiner basis, block choices";
      for (auto [a, b] : block_choices_)
        out += " (e" + std::to_string(a + 1) + ",e" + std::to_string(b + 1) + ")";
      break;
    }
    case BasisTag::path_ordered:
      out = "path-ordered basis (e_1,f_1,...,e_{n-1})";
      break;
  }
  return out;
}

ExactMatrix restrict(const PairMatrix& m, const PairBasis& rows, const PairBasis& cols) {
  std::vector<std::size_t> ri, ci;
  ri.reserve(rows.size());
  ci.reserve(cols.size());
  for (const VertexPair& p : rows.pairs()) ri.push_back(m.index().index_of(p));
  for (const VertexPair& p : cols.pairs()) ci.push_back(m.index().index_of(p));
  return m.entries().submatrix(ri, ci);
}

ExactMatrix restricted_pair_matrix(const Tree& t, PairKind kind, const PairBasis& basis) {
  const std::size_t m = basis.size();
  ExactMatrix out(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      int v = pair_entry(t, kind, basis.pairs()[a], basis.pairs()[b]);
      out(a, b) = v;
      out(b, a) = v;
    }
  return out;
}

SteinerV steiner_v(const Tree& t, const PairBasis& basis) {
  if (basis.tag() == BasisTag::min4pc || basis.block_choices().empty())
    fail(Errc::bad_params, "steiner_v needs a basis with recorded block choices");
  std::vector<LineGraphBlock> blocks = t.line_graph_blocks();
  const std::size_t ne = t.edges().size();
  std::vector<Rat> v(basis.size());

  // In both steiner-basis layouts the first n-1 slots... not true for the
  // path-ordered basis, so place values by pair identity instead.
  std::vector<Rat> edge_value(ne, Rat(1));
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    long weight = long(blocks[j].edge_indices.size()) - 1;
    auto [a, b] = basis.block_choices()[j];
    edge_value[std::size_t(a)] -= weight;
    edge_value[std::size_t(b)] -= weight;
  }
  std::size_t block_cursor = 0;
  for (std::size_t slot = 0; slot < basis.size(); ++slot) {
    const VertexPair& p = basis.pairs()[slot];
    int ei = t.edge_index_or(p);
    if (ei >= 0) {
      v[slot] = edge_value[std::size_t(ei)];
    } else {
      v[slot] = long(blocks[block_cursor].edge_indices.size()) - 1;
      ++block_cursor;
    }
  }

  // Defining identities; these are unconditional, so a failure is a bug.
  Rat total = 0;
  for (const Rat& x : v) total += x;
  if (total != 1) fail(Errc::bad_params, "1^t v != 1 for " + basis.describe());
  ExactMatrix d2 = restricted_pair_matrix(t, PairKind::steiner2, basis);
  Rat expect(t.vertex_count() - 1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Rat row = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) row += d2(i, j) * v[j];
    if (row != expect) fail(Errc::bad_params, "D2[B,B] v != (n-1) 1 for " + basis.describe());
  }
  return SteinerV{std::move(v)};
}

}  // namespace treespectra
