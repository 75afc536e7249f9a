#pragma once

// Summary table across dimensions: per n, the winning construction, its
// sizes, the lower bounds, and the two quality ratios.  Output is fully
// deterministic (fixed column order, headers always on, floats at six
// significant digits), so identical invocations are byte-identical.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubedom/constructions.hpp"
#include "cubedom/core.hpp"
#include "cubedom/domination.hpp"

namespace cubedom {

struct TableRow {
  int n = 0;
  std::string method;
  std::optional<int> base_dimension;
  std::optional<int> layer_bits;
  std::optional<int> parity_bits;
  std::uint64_t ds_size = 0;     // best doubled-Hamming dominating set for Q_n
  std::uint64_t cds_size = 0;    // built size, or the formula bound above the cap
  std::uint64_t leaf_count = 0;
  std::uint64_t gamma_lower = 0;
  std::uint64_t gamma_c_lower = 0;
  double ratio_gamma = 0.0;      // ds_size / (2^n / (n+1))
  double ratio_gamma_c = 0.0;    // cds_size / (2^n / n)
  bool explicit_build = false;
};

inline TableRow table_row(int n) {
  const ConstructionReport report = auto_construct(n);
  TableRow row;
  row.n = n;
  row.method = report.method;
  row.base_dimension = report.base_dimension;
  row.layer_bits = report.layer_bits;
  row.parity_bits = report.parity_bits;
  row.ds_size = doubling_ds_size(n);
  row.cds_size = report.cds_size;
  row.leaf_count = report.leaf_count;
  row.gamma_lower = report.gamma_lower;
  row.gamma_c_lower = report.gamma_c_lower;
  row.ratio_gamma = double(row.ds_size) * double(n + 1) / double(universe_size(n));
  row.ratio_gamma_c = report.ratio_gamma_c;
  row.explicit_build = report.explicit_build;
  return row;
}

// Rows for min_n..max_n.  Dimensions above the explicit-set cap are allowed
// only when formula-only rows were requested.
inline std::vector<TableRow> build_table(int min_n, int max_n,
                                         bool allow_formula_rows = false) {
  if (min_n < 2 || min_n > max_n)
    throw std::invalid_argument("need 2 <= min_n <= max_n");
  const int cap = allow_formula_rows ? 62 : max_explicit_dimension();
  if (max_n > cap)
    throw std::invalid_argument("max_n " + std::to_string(max_n) + " above " +
                                std::to_string(cap) +
                                (allow_formula_rows ? "" : " (pass the formula-rows flag)"));
  std::vector<TableRow> rows;
  rows.reserve(std::size_t(max_n - min_n + 1));
  for (int n = min_n; n <= max_n; ++n) rows.push_back(table_row(n));
  return rows;
}

enum class TableFormat { csv, tsv, markdown };

namespace detail {

inline std::string six_digits(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

inline std::string opt_cell(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "-";
}

}  // namespace detail

inline const std::vector<std::string>& table_columns() {
  static const std::vector<std::string> cols = {
      "n",          "method",      "N",           "j",
      "k",          "ds_size",     "cds_size",    "leaf_count",
      "gamma_lower", "gamma_c_lower", "ratio_gamma", "ratio_gamma_c"};
  return cols;
}

inline std::string format_table(const std::vector<TableRow>& rows, TableFormat format) {
  const auto& cols = table_columns();
  auto cells_of = [](const TableRow& r) {
    return std::vector<std::string>{
        std::to_string(r.n),           r.method,
        detail::opt_cell(r.base_dimension), detail::opt_cell(r.layer_bits),
        detail::opt_cell(r.parity_bits),    std::to_string(r.ds_size),
        std::to_string(r.cds_size),    std::to_string(r.leaf_count),
        std::to_string(r.gamma_lower), std::to_string(r.gamma_c_lower),
        detail::six_digits(r.ratio_gamma),  detail::six_digits(r.ratio_gamma_c)};
  };

  std::string out;
  const char sep = format == TableFormat::tsv ? '\t' : ',';
  if (format == TableFormat::markdown) {
    out += "|";
    for (const auto& c : cols) out += " " + c + " |";
    out += "\n|";
    for (std::size_t i = 0; i < cols.size(); ++i) out += " --- |";
    out += "\n";
    for (const auto& row : rows) {
      out += "|";
      for (const auto& cell : cells_of(row)) out += " " + cell + " |";
      out += "\n";
    }
    return out;
  }
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) out += sep;
    out += cols[i];
  }
  out += "\n";
  for (const auto& row : rows) {
    const auto cells = cells_of(row);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += sep;
      out += cells[i];
    }
    out += "\n";
  }
  return out;
}

}  // namespace cubedom
