#include "treespectra/embedding.hpp"

#include <random>

namespace treespectra {

Embedding::Embedding(const Tree& t)
    : space_(t.vertex_count()), coords_(t.edges().size()) {
  vectors_.reserve(space_.size());
  for (const VertexPair& p : space_.pairs()) {
    std::vector<int> v(coords_, 0);
    for (int e : t.path_edge_set(p)) v[std::size_t(e)] = 1;
    vectors_.push_back(std::move(v));
  }
}

int l1_distance(const std::vector<int>& u, const std::vector<int>& v) {
  if (u.size() != v.size())
    fail(Errc::length_mismatch, "vectors have lengths " + std::to_string(u.size()) + " and " +
                                    std::to_string(v.size()));
  int d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i];
  return d;
}

EmbeddingCheck verify_embedding(const Tree& t) {
  Embedding phi(t);
  const PairSpace& space = phi.index();
  for (std::size_t a = 0; a < space.size(); ++a)
    for (std::size_t b = a; b < space.size(); ++b) {
      int expected = pair_entry(t, PairKind::min4pc, space.pair(a), space.pair(b));
      int got = l1_distance(phi.vector_for(space.pair(a)), phi.vector_for(space.pair(b)));
      if (expected != got) return {false, std::make_pair(space.pair(a), space.pair(b))};
    }
  return {};
}

SpotCheckResult quadratic_form_spot_check(const PairMatrix& m, FormConstraint constraint,
                                          std::size_t trials, std::uint64_t seed,
                                          int entry_bound) {
  if (m.kind() == PairKind::steiner2)
    fail(Errc::bad_params, "spot check needs a zero-diagonal kind (min4pc or max4pc)");
  if (entry_bound < 1) fail(Errc::bad_params, "entry bound must be >= 1");

  const std::size_t dim = m.index().size();
  const long target = constraint == FormConstraint::hypermetric ? 1 : 0;
  std::mt19937_64 rng(seed);

  // Entries are small integers; flatten once for the trial loop.
  std::vector<long> entry(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) entry[i * dim + j] = m.entries()(i, j).get_num().get_si();

  SpotCheckResult out;
  out.seed = seed;
  out.entry_bound = entry_bound;
  out.worst = 0;
  bool first = true;

  std::vector<long> x(dim);
  const std::uint64_t width = std::uint64_t(2 * entry_bound + 1);
  while (out.trials < trials) {
    long sum = 0;
    for (std::size_t i = 0; i + 1 < dim; ++i) {
      x[i] = long(uniform_below(rng, width)) - entry_bound;
      sum += x[i];
    }
    long last = target - sum;
    if (last < -entry_bound || last > entry_bound) {
      ++out.rejected;
      continue;
    }
    x[dim - 1] = last;

    Int value = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = i + 1; j < dim; ++j) {
        if (x[j] == 0) continue;
        value += Int(entry[i * dim + j]) * (x[i] * x[j]);
      }
    }
    if (first || value > out.worst) {
      out.worst = value;
      first = false;
    }
    ++out.trials;
  }
  out.ok = out.worst <= 0;
  return out;
}

Int pair_quadratic_form(const ExactMatrix& entries, const std::vector<long>& x) {
  if (x.size() != entries.rows() || !entries.is_square())
    fail(Errc::length_mismatch, "x must match the matrix order");
  Int value = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[j] == 0) continue;
      value += Rat(entries(i, j)).get_num() * (x[i] * x[j]);
    }
  }
  return value;
}

TriangleCheck triangle_check(const ExactMatrix& m) {
  const std::size_t k = m.rows();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (b == a) continue;
      for (std::size_t c = a + 1; c < k; ++c) {
        if (c == b) continue;
        if (m(a, c) > m(a, b) + m(b, c)) return {false, std::array<std::size_t, 3>{a, b, c}};
      }
    }
  return {};
}

}  // namespace treespectra
