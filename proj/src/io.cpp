#include "treespectra/io.hpp"

#include <fstream>
#include <sstream>

#include "treespectra/embedding.hpp"

namespace treespectra {

Tree parse_tree_text(std::istream& in) {
  int n = 0;
  if (!(in >> n)) fail(Errc::io_error, "missing vertex count on the first line");
  std::vector<VertexPair> edges;
  for (int k = 0; k < n - 1; ++k) {
    int a = 0, b = 0;
    if (!(in >> a >> b))
      fail(Errc::io_error, "expected " + std::to_string(n - 1) + " edge lines, got " +
                               std::to_string(k));
    edges.emplace_back(a, b);
  }
  return Tree::from_edges(edges, n);
}

Tree read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  return parse_tree_text(in);
}

std::string tree_to_text(const Tree& t) {
  std::ostringstream out;
  out << t.vertex_count() << "\n";
  for (const VertexPair& e : t.edges()) out << e.first() << " " << e.second() << "\n";
  return out.str();
}

std::string matrix_to_csv(const ExactMatrix& m, const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels) {
  std::ostringstream out;
  for (const std::string& c : col_labels) out << "," << c;
  out << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << row_labels[i];
    for (std::size_t j = 0; j < m.cols(); ++j) out << "," << rat_string(m(i, j));
    out << "\n";
  }
  return out.str();
}

std::string matrix_to_text(const ExactMatrix& m, const std::vector<std::string>& row_labels,
                           const std::vector<std::string>& col_labels) {
  std::vector<std::size_t> widths(m.cols() + 1, 0);
  for (const std::string& r : row_labels) widths[0] = std::max(widths[0], r.size());
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    widths[j + 1] = col_labels[j].size();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      cells[i][j] = rat_string(m(i, j));
      widths[j + 1] = std::max(widths[j + 1], cells[i][j].size());
    }
  }
  std::ostringstream out;
  out << std::string(widths[0], ' ');
  for (std::size_t j = 0; j < m.cols(); ++j)
    out << "  " << std::string(widths[j + 1] - col_labels[j].size(), ' ') << col_labels[j];
  out << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << std::string(widths[0] - row_labels[i].size(), ' ') << row_labels[i];
    for (std::size_t j = 0; j < m.cols(); ++j)
      out << "  " << std::string(widths[j + 1] - cells[i][j].size(), ' ') << cells[i][j];
    out << "\n";
  }
  return out.str();
}

Json matrix_to_json(const ExactMatrix& m, const std::vector<std::string>& row_labels,
                    const std::vector<std::string>& col_labels) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", row_labels}, {"cols", col_labels}, {"entries", rows}};
}

Json poly_to_json(const Poly& p) {
  Json arr = Json::array();
  for (int k = 0; k <= p.degree(); ++k) arr.push_back(rat_string(p.coeff(std::size_t(k))));
  return arr;
}

Json report_to_json(const CoefficientReport& r) {
  Json j;
  j["charpoly"] = poly_to_json(r.poly);
  j["window"] = {r.window.lo, r.window.hi};
  Json abs = Json::array();
  for (const Rat& v : r.abs_seq) abs.push_back(rat_string(v));
  j["abs_coeffs"] = std::move(abs);
  j["unimodal"] = r.unimodal;
  if (r.unimodal_violation) j["unimodal_violation"] = *r.unimodal_violation;
  j["log_concave"] = r.log_concave;
  if (!r.log_concave_violations.empty()) j["log_concave_violations"] = r.log_concave_violations;
  j["peak_plateau"] = {r.peak_plateau.first, r.peak_plateau.second};
  j["peak_set"] = r.peak_set;
  if (r.bound_interval) {
    j["bound_interval"] = {r.bound_interval->first, r.bound_interval->second};
    j["bound_ok"] = *r.bound_ok;
  }
  return j;
}

std::string report_to_csv(const CoefficientReport& r) {
  std::ostringstream out;
  out << "k,a_k,abs_a_k\n";
  for (std::size_t k = r.window.lo; k <= r.window.hi; ++k)
    out << k << "," << rat_string(r.poly.coeff(k)) << ","
        << rat_string(r.abs_seq[k - r.window.lo]) << "\n";
  return out.str();
}

std::string embedding_to_csv(const Tree& t) {
  Embedding phi(t);
  std::ostringstream out;
  for (const VertexPair& p : phi.index().pairs()) out << ",phi_" << p.first() << p.second();
  out << "\n";
  for (std::size_t e = 0; e < phi.coordinates(); ++e) {
    out << "e" << (e + 1);
    for (const VertexPair& p : phi.index().pairs()) out << "," << phi.vector_for(p)[e];
    out << "\n";
  }
  return out.str();
}

std::string conjectures_to_csv(const std::vector<ConjectureRow>& rows) {
  std::ostringstream out;
  out << "n,peak_index,peak_matches_n_minus_1,a_2n_minus_5,conjectured_value,match\n";
  for (const ConjectureRow& r : rows) {
    out << r.n << ",";
    if (r.peak_lo == r.peak_hi) out << r.peak_lo;
    else out << r.peak_lo << ".." << r.peak_hi;
    out << "," << (r.peak_is_n_minus_1 ? "true" : "false") << "," << int_string(r.a_2n5) << ","
        << int_string(r.conjectured) << "," << (r.a_2n5_matches ? "true" : "false") << "\n";
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot write " + path);
  out << contents;
  if (!out) fail(Errc::io_error, "short write to " + path);
}

}  // namespace treespectra
