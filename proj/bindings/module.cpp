#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "treespectra/analysis.hpp"
#include "treespectra/embedding.hpp"
#include "treespectra/io.hpp"
#include "treespectra/path_steiner.hpp"
#include "treespectra/verify.hpp"

namespace py = pybind11;
namespace ts = treespectra;

namespace {

py::object py_int(const ts::Int& z) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object py_rat(const ts::Rat& q) {
  if (ts::is_integer(q)) return py_int(q.get_num());
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py_int(q.get_num()), py_int(q.get_den()));
}

ts::Rat rat_from(py::handle h) {
  if (py::isinstance<py::int_>(h)) return ts::Rat(ts::Int(py::str(h).cast<std::string>()));
  if (py::isinstance<py::str>(h)) {
    ts::Rat q(h.cast<std::string>());
    q.canonicalize();
    return q;
  }
  // Fraction or anything with numerator/denominator
  py::object num = h.attr("numerator"), den = h.attr("denominator");
  ts::Rat q(ts::Int(py::str(num).cast<std::string>()), ts::Int(py::str(den).cast<std::string>()));
  q.canonicalize();
  return q;
}

ts::ExactMatrix matrix_from(const std::vector<std::vector<py::object>>& rows) {
  if (rows.empty()) throw py::value_error("matrix needs at least one row");
  ts::ExactMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw py::value_error("ragged matrix");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rat_from(rows[i][j]);
  }
  return m;
}

py::list matrix_to(const ts::ExactMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(py_rat(m(i, j)));
    rows.append(std::move(row));
  }
  return rows;
}

py::list poly_to(const ts::Poly& p) {
  py::list out;
  for (int k = 0; k <= p.degree(); ++k) out.append(py_rat(p.coeff(std::size_t(k))));
  return out;
}

ts::VertexPair pair_from(std::pair<int, int> p) { return ts::VertexPair(p.first, p.second); }

py::list pairs_to(const std::vector<ts::VertexPair>& pairs) {
  py::list out;
  for (const ts::VertexPair& p : pairs) out.append(py::make_tuple(p.first(), p.second()));
  return out;
}

ts::PairKind kind_from(const std::string& name) {
  if (name == "min4pc") return ts::PairKind::min4pc;
  if (name == "max4pc") return ts::PairKind::max4pc;
  if (name == "steiner2") return ts::PairKind::steiner2;
  throw py::value_error("kind must be min4pc, max4pc or steiner2");
}

py::dict report_to(const ts::CoefficientReport& r) {
  py::dict d;
  d["charpoly"] = poly_to(r.poly);
  d["window"] = py::make_tuple(r.window.lo, r.window.hi);
  py::list abs_seq;
  for (const ts::Rat& v : r.abs_seq) abs_seq.append(py_rat(v));
  d["abs_coeffs"] = std::move(abs_seq);
  d["unimodal"] = r.unimodal;
  d["log_concave"] = r.log_concave;
  d["peak_set"] = r.peak_set;
  d["peak_plateau"] = py::make_tuple(r.peak_plateau.first, r.peak_plateau.second);
  if (r.bound_interval) {
    d["bound_interval"] = py::make_tuple(r.bound_interval->first, r.bound_interval->second);
    d["bound_ok"] = *r.bound_ok;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact spectral toolkit for the Min4PC / Max4PC / 2-Steiner distance matrices of "
            "trees";

  py::register_exception<ts::Error>(m, "TreespectraError");

  py::class_<ts::Tree>(m, "Tree")
      .def_property_readonly("n", &ts::Tree::vertex_count)
      .def_property_readonly("edges", [](const ts::Tree& t) { return pairs_to(t.edges()); })
      .def("distance", [](const ts::Tree& t, int i, int j) { return t.distance(i, j); })
      .def("distance_matrix", [](const ts::Tree& t) { return matrix_to(t.distance_matrix()); })
      .def("path_edge_set",
           [](const ts::Tree& t, std::pair<int, int> p) { return t.path_edge_set(pair_from(p)); },
           "0-based indices into edges of the unique path between the pair")
      .def("leaves", [](const ts::Tree& t) { return t.leaves(); })
      .def("line_graph_blocks",
           [](const ts::Tree& t) {
             py::list out;
             for (const ts::LineGraphBlock& b : t.line_graph_blocks()) {
               py::dict d;
               d["vertex"] = b.vertex;
               d["edge_indices"] = b.edge_indices;
               out.append(std::move(d));
             }
             return out;
           })
      .def("__repr__", [](const ts::Tree& t) {
        return "<Tree n=" + std::to_string(t.vertex_count()) + ">";
      });

  py::class_<ts::PairBasis>(m, "PairBasis")
      .def_property_readonly("pairs",
                             [](const ts::PairBasis& b) { return pairs_to(b.pairs()); })
      .def_property_readonly("size", &ts::PairBasis::size)
      .def("describe", &ts::PairBasis::describe);

  m.def("build_tree",
        [](const std::vector<std::pair<int, int>>& edges, int n) {
          std::vector<ts::VertexPair> e;
          e.reserve(edges.size());
          for (auto p : edges) e.push_back(pair_from(p));
          return ts::Tree::from_edges(e, n);
        },
        py::arg("edges"), py::arg("n"));
  m.def("path", &ts::make_path, py::arg("n"));
  m.def("star", &ts::make_star, py::arg("n"));
  m.def("bistar", &ts::make_bistar, py::arg("n"));
  m.def("prufer",
        [](const std::vector<int>& seq, int n) {
          return ts::prufer_decode(std::span<const int>(seq.data(), seq.size()), n);
        },
        py::arg("seq"), py::arg("n"));
  m.def("random_tree", &ts::random_tree, py::arg("n"), py::arg("seed"));
  m.def("all_labeled_trees", [](int n) {
    ts::LabeledTreeRange range(n);
    py::list out;
    for (const ts::Tree& t : range) out.append(t);
    return out;
  });

  m.def("quadruple_sums",
        [](const ts::Tree& t, int i, int j, int k, int l) {
          auto s = ts::quadruple_sums(t, i, j, k, l);
          return py::make_tuple(s[0], s[1], s[2]);
        });
  m.def("steiner_distance",
        [](const ts::Tree& t, std::pair<int, int> p, std::pair<int, int> q) {
          return ts::steiner_distance(t, pair_from(p), pair_from(q));
        });
  m.def("pair_matrix",
        [](const ts::Tree& t, const std::string& kind) {
          ts::PairMatrix pm = ts::PairMatrix::build(t, kind_from(kind));
          return py::make_tuple(pairs_to(pm.index().pairs()), matrix_to(pm.entries()));
        },
        py::arg("tree"), py::arg("kind"), "returns (pair_index, entries)");

  m.def("min4pc_basis",
        [](const ts::Tree& t, std::pair<int, int> f) {
          return ts::min4pc_basis(t, pair_from(f));
        });
  m.def("non_edges", [](const ts::Tree& t) { return pairs_to(ts::non_edges(t)); });
  m.def("steiner_basis",
        [](const ts::Tree& t, std::optional<std::vector<std::pair<int, int>>> choices) {
          return choices ? ts::steiner_basis(t, *choices) : ts::steiner_basis(t);
        },
        py::arg("tree"), py::arg("choices") = py::none());
  m.def("path_ordered_basis", &ts::path_ordered_basis);
  m.def("restricted_matrix",
        [](const ts::Tree& t, const std::string& kind, const ts::PairBasis& b) {
          return matrix_to(ts::restricted_pair_matrix(t, kind_from(kind), b));
        });
  m.def("steiner_v", [](const ts::Tree& t, const ts::PairBasis& b) {
    py::list out;
    for (const ts::Rat& v : ts::steiner_v(t, b).values) out.append(py_rat(v));
    return out;
  });

  m.def("charpoly", [](const std::vector<std::vector<py::object>>& rows) {
    return poly_to(ts::charpoly(matrix_from(rows)));
  });
  m.def("determinant", [](const std::vector<std::vector<py::object>>& rows) {
    return py_rat(ts::determinant(matrix_from(rows)));
  });
  m.def("inverse", [](const std::vector<std::vector<py::object>>& rows) {
    return matrix_to(ts::inverse(matrix_from(rows)));
  });
  m.def("rank", [](const std::vector<std::vector<py::object>>& rows) {
    return ts::rank(matrix_from(rows));
  });
  m.def("inertia", [](const std::vector<std::vector<py::object>>& rows) {
    ts::InertiaTriple t = ts::inertia(matrix_from(rows));
    return py::make_tuple(t.positive, t.negative, t.zero);
  });
  m.def("schur_complement",
        [](const std::vector<std::vector<py::object>>& rows, std::vector<std::size_t> alpha) {
          return matrix_to(ts::schur_complement(matrix_from(rows), alpha));
        });
  m.def("equitable_quotient",
        [](const std::vector<std::vector<py::object>>& rows,
           const std::vector<std::vector<std::size_t>>& blocks) {
          return matrix_to(ts::equitable_quotient(matrix_from(rows), blocks));
        });

  m.def("analyze",
        [](const std::vector<py::object>& coeffs, std::size_t lo, std::size_t hi) {
          std::vector<ts::Rat> c;
          c.reserve(coeffs.size());
          for (const py::object& o : coeffs) c.push_back(rat_from(o));
          return report_to(ts::analyze(ts::Poly(std::move(c)), ts::Window{lo, hi}));
        },
        py::arg("coeffs"), py::arg("lo"), py::arg("hi"),
        "coefficient-sequence report over the inclusive window [lo, hi]");
  m.def("closed_form_min4pc",
        [](int n, int d) { return poly_to(ts::closed_form_min4pc(n, d)); });
  m.def("closed_form_star_steiner",
        [](int n) { return poly_to(ts::closed_form_star_steiner(n)); });
  m.def("closed_form_bistar_steiner",
        [](int n, int which) { return poly_to(ts::closed_form_bistar_steiner(n, which)); });
  m.def("peak_bound", [](const std::string& family, int n) {
    ts::PeakFamily f = family == "min4pc"   ? ts::PeakFamily::min4pc
                       : family == "star"   ? ts::PeakFamily::star
                       : family == "bistar" ? ts::PeakFamily::bistar
                                            : ts::PeakFamily::path;
    auto b = ts::peak_bound(f, n);
    return py::make_tuple(b.first, b.second);
  });
  m.def("normalized_tree_coeffs", [](const ts::Tree& t) {
    py::list out;
    for (const ts::Rat& v :
         ts::normalized_tree_coeffs(ts::charpoly(t.distance_matrix()), t.vertex_count()))
      out.append(py_rat(v));
    return out;
  });

  m.def("verify_embedding", [](const ts::Tree& t) { return ts::verify_embedding(t).ok; });
  m.def("embedding_table", &ts::embedding_to_csv);

  m.def("path_instance", [](int n) {
    ts::PathSteinerInstance inst = ts::build_path_instance(n);
    py::dict d;
    d["n"] = inst.n;
    d["basis"] = pairs_to(inst.basis.pairs());
    d["matrix"] = matrix_to(inst.matrix);
    py::list v;
    for (const ts::Rat& x : inst.v.values) v.append(py_rat(x));
    d["v"] = std::move(v);
    d["laplacian_like"] = matrix_to(inst.laplacian_like);
    d["inverse_formula_holds"] = ts::verify_inverse_formula(inst);
    return d;
  });
  m.def("conjecture_scan", [](int lo, int hi) {
    py::list out;
    for (const ts::ConjectureRow& r : ts::conjecture_scan(lo, hi)) {
      py::dict d;
      d["n"] = r.n;
      d["peak"] = py::make_tuple(r.peak_lo, r.peak_hi);
      d["peak_is_n_minus_1"] = r.peak_is_n_minus_1;
      d["a_2n_minus_5"] = py_int(r.a_2n5);
      d["conjectured"] = py_int(r.conjectured);
      d["matches"] = r.a_2n5_matches;
      out.append(std::move(d));
    }
    return out;
  });

  m.def("verify_tree", [](const ts::Tree& t) {
    py::list out;
    for (const ts::CheckResult& c : ts::verify_tree(t, ts::VerifyOptions{})) {
      py::dict d;
      d["id"] = c.id;
      d["inputs"] = c.inputs;
      d["expected"] = c.expected;
      d["computed"] = c.computed;
      d["pass"] = c.pass;
      out.append(std::move(d));
    }
    return out;
  });

  m.attr("__version__") = "0.1.0";
}
