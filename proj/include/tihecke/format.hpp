#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "tihecke/errors.hpp"

namespace tihecke {

enum class OutputFormat { text, csv, latex, json };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "csv") return OutputFormat::csv;
  if (s == "latex") return OutputFormat::latex;
  if (s == "json") return OutputFormat::json;
  fail(errc::invalid_spec, "unknown format '" + s + "' (expected json|csv|latex|text)");
}

// A rendered table; math_cols marks columns set in math mode in LaTeX.
struct TableDoc {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<bool> math_cols;

  void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

inline std::string render_text(const TableDoc& doc) {
  std::vector<std::size_t> width(doc.header.size(), 0);
  for (std::size_t c = 0; c < doc.header.size(); ++c) width[c] = doc.header[c].size();
  for (const auto& row : doc.rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  if (!doc.title.empty()) out += "# " + doc.title + "\n";
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size()) out.append(width[c] - row[c].size() + 2, ' ');
    }
    out += "\n";
  };
  emit(doc.header);
  for (const auto& row : doc.rows) emit(row);
  return out;
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

inline std::string render_csv(const TableDoc& doc) {
  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ",";
      out += csv_quote(row[c]);
    }
    out += "\n";
  };
  emit(doc.header);
  for (const auto& row : doc.rows) emit(row);
  return out;
}

inline std::string latex_escape_text(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '#' || c == '%' || c == '&') out += '\\';
    out += c;
  }
  return out;
}

inline std::string render_latex(const TableDoc& doc) {
  std::string out = "\\begin{tabular}{";
  for (std::size_t c = 0; c < doc.header.size(); ++c) out += "l";
  out += "}\n\\hline\n";
  for (std::size_t c = 0; c < doc.header.size(); ++c) {
    if (c) out += " & ";
    out += latex_escape_text(doc.header[c]);
  }
  out += " \\\\\n\\hline\n";
  for (const auto& row : doc.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += " & ";
      const bool math = c < doc.math_cols.size() && doc.math_cols[c];
      out += math ? "$" + row[c] + "$" : latex_escape_text(row[c]);
    }
    out += " \\\\\n";
  }
  out += "\\hline\n\\end{tabular}\n";
  return out;
}

inline std::string render_table(const TableDoc& doc, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::text: return render_text(doc);
    case OutputFormat::csv: return render_csv(doc);
    case OutputFormat::latex: return render_latex(doc);
    case OutputFormat::json: fail(errc::internal, "JSON output is assembled separately");
  }
  fail(errc::internal, "unreachable format");
}

}  // namespace tihecke
