#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "permstat/bijections.hpp"
#include "permstat/error.hpp"
#include "permstat/polynomials.hpp"
#include "permstat/star.hpp"
#include "permstat/stats.hpp"
#include "permstat/verify.hpp"

namespace permstat {

enum class OutputFormat { Text, Csv, Json };

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Regenerates one of the built-in reference tables from scratch.
/// Coefficient tables list rows lexicographically by (j,) n, k; the two
/// 24-row bijection tables list sigma in lexicographic order.
inline Table make_table(const std::string& name, int jobs = 1) {
  Table t;
  t.name = name;
  if (name == "appendix-a") {
    t.columns = {"n", "k", "value"};
    for (int n = 1; n <= 5; ++n) {
      const std::vector<MultiPoly> row = a_family_row(n, jobs);
      for (int k = 0; 2 * k <= n - 1; ++k)
        t.rows.push_back({std::to_string(n), std::to_string(k),
                          row[static_cast<size_t>(k)].to_string()});
    }
  } else if (name == "appendix-b") {
    t.columns = {"n", "k", "j", "value"};
    // coverage per fixed-point count: j=0 up to n=6, j=1 up to n=5, j=2 for n=2..6
    const auto covered = [](int j, int n) {
      if (j == 0) return n >= 1 && n <= 6;
      if (j == 1) return n >= 1 && n <= 5;
      return j == 2 && n >= 2 && n <= 6;
    };
    for (int n = 1; n <= 6; ++n) {
      const auto rows = b_family_rows(n, jobs);
      for (int k = 0; 2 * k <= n; ++k)
        for (int j = 0; j <= 2; ++j) {
          if (!covered(j, n) || 2 * k > n - j) continue;
          t.rows.push_back({std::to_string(n), std::to_string(k), std::to_string(j),
                            rows[static_cast<size_t>(j)][static_cast<size_t>(k)].to_string()});
        }
    }
  } else if (name == "appendix-c") {
    t.columns = {"n", "k", "value"};
    for (int n = 2; n <= 7; ++n) {
      const std::vector<MultiPoly> row = c_family_row(n, jobs);
      for (int k = 1; 2 * k <= n; ++k)
        t.rows.push_back({std::to_string(n), std::to_string(k),
                          row[static_cast<size_t>(k)].to_string()});
    }
  } else if (name == "appendix-d") {
    t.columns = {"n", "k", "value"};
    for (int n = 1; n <= 7; ++n) {
      const std::vector<MultiPoly> row = d_family_row(n, jobs);
      for (int k = 0; 2 * k <= n - 1; ++k)
        t.rows.push_back({std::to_string(n), std::to_string(k),
                          row[static_cast<size_t>(k)].to_string()});
    }
  } else if (name == "figure-1") {
    t.columns = {"sigma", "tau", "des", "les", "ress", "da_minus_fmax", "dd", "valley", "fmax"};
    for_each_permutation(4, [&t](const Permutation& s) {
      const Permutation tau = phi(s);
      const LinearCounts lin = linear_counts(s, BoundaryConvention::ZeroTop);
      const PatternCounts pat = pattern_counts(s);
      t.rows.push_back({s.to_string(), tau.to_string(), std::to_string(lin.des),
                        std::to_string(pat.les), std::to_string(pat.ress),
                        std::to_string(lin.da - lin.fmax), std::to_string(lin.dd),
                        std::to_string(lin.valley), std::to_string(lin.fmax)});
    });
  } else if (name == "figure-2") {
    t.columns = {"sigma", "tau", "tau_star", "des", "les", "res", "da_star", "dd_star",
                 "valley_star"};
    for_each_permutation(4, [&t](const Permutation& s) {
      const Permutation tau = psi(s);
      const LinearCounts lin = linear_counts(s, BoundaryConvention::ZeroZero);
      const PatternCounts pat = pattern_counts(s);
      t.rows.push_back({s.to_string(), tau.to_string(), star_map(tau).to_string(),
                        std::to_string(lin.des), std::to_string(pat.les),
                        std::to_string(pat.res), std::to_string(lin.da),
                        std::to_string(lin.dd), std::to_string(lin.valley)});
    });
  } else {
    throw DomainError("unknown table '" + name + "'");
  }
  return t;
}

inline std::string render_table_csv(const Table& t) {
  std::ostringstream os;
  for (size_t i = 0; i < t.columns.size(); ++i) {
    if (i) os << ',';
    os << t.columns[i];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << row[i];
    }
    os << '\n';
  }
  return os.str();
}

inline std::string render_table_json(const Table& t) {
  // hand-rolled to keep key order identical to the column order
  const auto escape = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    return out;
  };
  std::ostringstream os;
  os << "[\n";
  for (size_t r = 0; r < t.rows.size(); ++r) {
    os << "  {";
    for (size_t i = 0; i < t.columns.size(); ++i) {
      if (i) os << ", ";
      os << '"' << escape(t.columns[i]) << "\": \"" << escape(t.rows[r][i]) << '"';
    }
    os << (r + 1 < t.rows.size() ? "},\n" : "}\n");
  }
  os << "]\n";
  return os.str();
}

inline std::string render_table_text(const Table& t) {
  std::vector<size_t> width(t.columns.size(), 0);
  for (size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows)
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  const auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) os << "  ";
      if (i + 1 < cells.size()) {
        os << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
      } else {
        os << cells[i];
      }
    }
    os << '\n';
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
  return os.str();
}

inline std::string render_table(const Table& t, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: return render_table_text(t);
    case OutputFormat::Csv: return render_table_csv(t);
    case OutputFormat::Json: return render_table_json(t);
  }
  throw DomainError("unknown output format");
}

}  // namespace permstat
