#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "treespectra/analysis.hpp"
#include "treespectra/matrix.hpp"
#include "treespectra/path_steiner.hpp"
#include "treespectra/tree.hpp"

#include "json.hpp"

namespace treespectra {

using Json = nlohmann::ordered_json;

/// Edge-list text format: first line `n`, then n-1 lines `i j` (1-based).
Tree parse_tree_text(std::istream& in);
Tree read_tree_file(const std::string& path);  // IOError when unreadable
std::string tree_to_text(const Tree& t);

/// CSV with row/column headers; all values exact decimal strings.
std::string matrix_to_csv(const ExactMatrix& m, const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels);
std::string matrix_to_text(const ExactMatrix& m, const std::vector<std::string>& row_labels,
                           const std::vector<std::string>& col_labels);
Json matrix_to_json(const ExactMatrix& m, const std::vector<std::string>& row_labels,
                    const std::vector<std::string>& col_labels);

/// JSON array of exact decimal strings, index = degree.
Json poly_to_json(const Poly& p);

Json report_to_json(const CoefficientReport& r);
/// CSV rows (k, a_k, |a_k|) over the report's window.
std::string report_to_csv(const CoefficientReport& r);

/// Figure-style embedding table: rows = edges, columns = pairs.
std::string embedding_to_csv(const Tree& t);

std::string conjectures_to_csv(const std::vector<ConjectureRow>& rows);

void write_file(const std::string& path, const std::string& contents);  // IOError

}  // namespace treespectra
