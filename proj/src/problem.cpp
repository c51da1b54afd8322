#include "syzkit/problem.hpp"

#include <fstream>
#include <queue>
#include <sstream>

#include "syzkit/errors.hpp"

namespace syz {

namespace {

struct Line {
  std::size_t number;
  std::string text;  // comment stripped, original columns kept
};

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> words(const std::string& s, std::size_t from = 0) {
  std::vector<Token> out;
  std::size_t i = from;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    out.push_back(Token{s.substr(start, i - start), start + 1});
  }
  return out;
}

int parse_int(const Token& t, std::size_t line, const char* what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(t.text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != t.text.size() || t.text.empty()) throw ParseError(std::string("expected an integer ") + what, line, t.column);
  if (v < 0 || v > 1000000000) throw ParseError(std::string("out of range ") + what, line, t.column);
  return static_cast<int>(v);
}

// Splits s[from, to) at sep, returning trimmed pieces with 1-based columns.
std::vector<Token> split_trimmed(const std::string& s, std::size_t from, std::size_t to, char sep) {
  std::vector<Token> out;
  std::size_t start = from;
  for (std::size_t i = from; i <= to; ++i) {
    if (i == to || s[i] == sep) {
      std::size_t a = start, b = i;
      while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
      while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
      out.push_back(Token{s.substr(a, b - a), a + 1});
      start = i + 1;
    }
  }
  return out;
}

Polynomial parse_at(const Token& t, const RingPtr& ring, std::size_t line) {
  if (t.text.empty()) throw ParseError("empty polynomial", line, t.column);
  try {
    return parse_poly(t.text, ring);
  } catch (const ParseError& e) {
    std::string msg = e.what();
    auto colon = msg.find(": ");
    throw ParseError(colon == std::string::npos ? msg : msg.substr(colon + 2), line, t.column + e.column() - 1);
  }
}

std::string at(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

}  // namespace

ShiftInference infer_shifts(const std::vector<Column>& columns, std::size_t rows) {
  ShiftInference out;
  out.row_shifts.assign(rows, 0);
  out.column_degrees.assign(columns.size(), 0);
  std::vector<bool> row_seen(rows, false), col_seen(columns.size(), false);
  for (std::size_t start = 0; start < rows; ++start) {
    if (row_seen[start]) continue;
    row_seen[start] = true;
    std::vector<std::size_t> block_rows{start};
    std::queue<std::pair<bool, std::size_t>> todo;  // (is_row, index)
    todo.push({true, start});
    while (!todo.empty()) {
      auto [is_row, idx] = todo.front();
      todo.pop();
      if (is_row) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
          const auto& e = columns[c][idx];
          if (e.is_zero()) continue;
          int deg = e.total_degree() + out.row_shifts[idx];
          if (!col_seen[c]) {
            col_seen[c] = true;
            out.column_degrees[c] = deg;
            todo.push({false, c});
          } else if (out.column_degrees[c] != deg) {
            out.consistent = false;
            out.bad_row = idx;
            out.bad_column = c;
            return out;
          }
        }
      } else {
        for (std::size_t r = 0; r < rows; ++r) {
          const auto& e = columns[idx][r];
          if (e.is_zero()) continue;
          int shift = out.column_degrees[idx] - e.total_degree();
          if (!row_seen[r]) {
            row_seen[r] = true;
            out.row_shifts[r] = shift;
            block_rows.push_back(r);
            todo.push({true, r});
          } else if (out.row_shifts[r] != shift) {
            out.consistent = false;
            out.bad_row = r;
            out.bad_column = idx;
            return out;
          }
        }
      }
    }
    int low = out.row_shifts[block_rows[0]];
    for (std::size_t r : block_rows) low = std::min(low, out.row_shifts[r]);
    for (std::size_t r : block_rows) out.row_shifts[r] -= low;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (!col_seen[c]) continue;
      bool in_block = false;
      for (std::size_t r : block_rows) in_block = in_block || !columns[c][r].is_zero();
      if (in_block) out.column_degrees[c] -= low;
    }
  }
  return out;
}

ProblemSpec parse_problem(const std::string& text, const std::string& label) {
  std::vector<Line> lines;
  {
    std::istringstream in(text);
    std::string raw;
    std::size_t n = 0;
    while (std::getline(in, raw)) {
      ++n;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      if (words(raw).empty()) continue;
      lines.push_back(Line{n, raw});
    }
  }

  std::optional<Field> field;
  RingPtr ring;
  std::vector<Polynomial> ideal_gens;
  std::vector<std::pair<Polynomial, std::pair<std::size_t, std::size_t>>> ideal_pos;
  std::size_t ideal_line = 0;
  std::optional<std::vector<std::vector<Polynomial>>> rows;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> entry_pos;
  std::optional<int> steps;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const Line& line = lines[li];
    auto w = words(line.text);
    const std::string& key = w[0].text;
    if (key == "field") {
      if (ring) throw ParseError("field must come before ring", line.number, w[0].column);
      if (w.size() == 2 && w[1].text == "rational") {
        field = Field::rational();
      } else if (w.size() == 3 && w[1].text == "prime") {
        int p = parse_int(w[2], line.number, "prime");
        try {
          field = Field::prime(static_cast<std::uint32_t>(p));
        } catch (const std::invalid_argument&) {
          throw ParseError(w[2].text + " is not prime", line.number, w[2].column);
        }
      } else {
        throw ParseError("expected 'field rational' or 'field prime P'", line.number, w[0].column);
      }
    } else if (key == "ring") {
      if (ring) throw ParseError("ring declared twice", line.number, w[0].column);
      std::vector<std::string> names;
      for (std::size_t k = 1; k < w.size(); ++k) names.push_back(w[k].text);
      if (names.empty()) throw ParseError("ring needs at least one variable", line.number, w[0].column);
      try {
        ring = make_ring(names, field.value_or(Field::prime(Field::kDefaultPrime)));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line.number, w[1].column);
      }
    } else if (key == "ideal") {
      if (!ring) throw ParseError("ideal before ring", line.number, w[0].column);
      ideal_line = line.number;
      std::size_t from = w[0].column - 1 + key.size();
      auto pieces = split_trimmed(line.text, from, line.text.size(), ';');
      if (pieces.size() == 1 && pieces[0].text == "0") continue;
      for (const auto& t : pieces) {
        Polynomial g = parse_at(t, ring, line.number);
        if (!g.is_homogeneous())
          throw NotHomogeneous(at(line.number, t.column) + "ideal generator '" + t.text + "' is not homogeneous");
        if (!g.is_zero()) ideal_gens.push_back(g);
      }
    } else if (key == "module") {
      if (!ring) throw ParseError("module before ring", line.number, w[0].column);
      if (w.size() != 3 || w[1].text != "rows") throw ParseError("expected 'module rows N'", line.number, w[0].column);
      int n = parse_int(w[2], line.number, "row count");
      rows.emplace();
      std::optional<std::size_t> width;
      for (int r = 0; r < n; ++r) {
        if (++li >= lines.size()) throw ParseError("missing matrix row", line.number, w[2].column);
        const Line& row = lines[li];
        auto open = row.text.find('[');
        auto close = row.text.rfind(']');
        if (open == std::string::npos || close == std::string::npos || close < open)
          throw ParseError("expected a row '[ a, b, ... ]'", row.number, words(row.text)[0].column);
        auto pieces = split_trimmed(row.text, open + 1, close, ',');
        std::vector<Polynomial> entries;
        std::vector<std::pair<std::size_t, std::size_t>> pos;
        if (!(pieces.size() == 1 && pieces[0].text.empty())) {
          for (const auto& t : pieces) {
            entries.push_back(parse_at(t, ring, row.number));
            pos.push_back({row.number, t.column});
            if (!entries.back().is_homogeneous())
              throw NotHomogeneous(at(row.number, t.column) + "entry '" + t.text + "' is not homogeneous");
          }
        }
        if (width && *width != entries.size())
          throw ParseError("row has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(*width),
                           row.number, open + 1);
        width = entries.size();
        rows->push_back(std::move(entries));
        entry_pos.push_back(std::move(pos));
      }
    } else if (key == "steps") {
      if (w.size() != 2) throw ParseError("expected 'steps N'", line.number, w[0].column);
      int s = parse_int(w[1], line.number, "step count");
      if (s < 1) throw ParseError("steps must be at least 1", line.number, w[1].column);
      steps = s;
    } else {
      throw ParseError("unknown directive '" + key + "'", line.number, w[0].column);
    }
  }
  if (!ring) throw ParseError("missing 'ring' line", lines.empty() ? 1 : lines.back().number, 1);
  if (!rows) throw ParseError("missing 'module rows N' block", lines.empty() ? 1 : lines.back().number, 1);

  std::optional<QuotientRing> quotient;
  try {
    quotient.emplace(Ideal(ring, ideal_gens));
  } catch (const UnitIdeal&) {
    throw UnitIdeal("line " + std::to_string(ideal_line) + ": defining ideal is the unit ideal");
  }

  const std::size_t r = rows->size();
  const std::size_t c = r == 0 ? 0 : (*rows)[0].size();
  std::vector<Column> columns(c, Column(r, Polynomial(ring)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) columns[j][i] = (*rows)[i][j];
  ShiftInference shifts = infer_shifts(columns, r);
  if (!shifts.consistent) {
    auto [ln, col] = entry_pos[shifts.bad_row][shifts.bad_column];
    throw NotHomogeneous(at(ln, col) + "entry '" + (*rows)[shifts.bad_row][shifts.bad_column].to_string() +
                         "' makes the matrix inhomogeneous for every choice of generator degrees");
  }
  ModuleMap pres{FreeModule{}, FreeModule{shifts.row_shifts}, {}};
  for (std::size_t j = 0; j < c; ++j) {
    if (is_zero_column(columns[j])) continue;
    pres.source.shifts.push_back(shifts.column_degrees[j]);
    pres.columns.push_back(std::move(columns[j]));
  }
  ProblemSpec spec{*quotient, PresentedModule{*quotient, std::move(pres)}, 0, label};
  spec.steps = steps.value_or(quotient->dim() + 3);
  return spec;
}

ProblemSpec load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str(), path.stem().string());
}

std::string to_problem_text(const ProblemSpec& spec) {
  std::ostringstream out;
  const RingPtr& r = spec.ring.ambient();
  out << "# " << spec.label << "\n";
  out << "field " << r->field().describe() << "\n";
  out << "ring";
  for (const auto& v : r->variable_names()) out << ' ' << v;
  out << "\n";
  const auto& gens = spec.ring.ideal().generators();
  out << "ideal ";
  if (gens.empty()) out << "0";
  for (std::size_t k = 0; k < gens.size(); ++k) out << (k ? "; " : "") << gens[k].to_string();
  out << "\n";
  const ModuleMap& p = spec.module.presentation;
  out << "module rows " << p.rows() << "\n";
  for (std::size_t i = 0; i < p.rows(); ++i) {
    out << "[ ";
    for (std::size_t j = 0; j < p.cols(); ++j) out << (j ? ", " : "") << p.entry(i, j).to_string();
    out << " ]\n";
  }
  out << "steps " << spec.steps << "\n";
  return out.str();
}

}  // namespace syz
