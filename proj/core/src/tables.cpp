#include "minram/tables.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "minram/construct.hpp"
#include "minram/errors.hpp"
#include "minram/factor.hpp"
#include "minram/text.hpp"

namespace minram {
namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, '\t')) {
    auto b = cell.find_first_not_of(' ');
    auto e = cell.find_last_not_of(' ');
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  return out;
}

std::uint64_t to_uint(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError("not a nonnegative integer: '" + s + "'");
  }
  return std::stoull(s);
}

/// Poly cells written with a stray 'x' for 't' are read with the
/// substitution and a warning.
FpPoly read_poly_cell(const std::string& name, const std::string& cell, const PrimeField& field, RowReport& r) {
  try {
    return parse_poly(cell, field);
  } catch (const ParseError&) {
    if (cell.find('x') == std::string::npos) throw;
    std::string fixed = cell;
    std::replace(fixed.begin(), fixed.end(), 'x', 't');
    FpPoly f = parse_poly(fixed, field);
    r.warnings.push_back(name + ": '" + cell + "' read as '" + fixed + "' (x is not a variable of F_p[t])");
    return f;
  }
}

void verify_d8_row(const TableRow& row, RowReport& r) {
  PrimeField field(row.p);
  const FpPoly a = read_poly_cell("a", row.cols[3], field, r);
  const FpPoly b = read_poly_cell("b", row.cols[4], field, r);
  D8Witness w = D8Witness::from_ab(a, b);
  if (to_uint(row.cols[1]) % row.p != w.A) r.failed.push_back("A = lc(a)");
  if (to_uint(row.cols[2]) % row.p != w.disc_AB) r.failed.push_back("A^2-4B matches printed");
  Verification v = verify_d8(w, D8VerifyOptions{true});
  for (auto& f : v.failed()) r.failed.push_back(f);
  for (auto& n : v.notes) r.notes.push_back(n);
}

void verify_s3_row(const TableRow& row, RowReport& r) {
  PrimeField field(row.p);
  const std::uint64_t u = to_uint(row.cols[1]);
  const FpPoly w = read_poly_cell("w", row.cols[2], field, r);
  const FpPoly printed = read_poly_cell("pi", row.cols[3], field, r);
  S3Witness s = S3Witness::from_uw(u, w);
  const bool same = printed == s.pi;
  if (!same) r.failed.push_back("printed pi = 4w^3-27u");
  try {
    if (!is_irreducible(printed)) r.failed.push_back("printed pi irreducible");
  } catch (const DomainError&) {
    r.failed.push_back("printed pi irreducible");
  }
  Verification v = verify_s3(s);
  for (auto& f : v.failed()) r.failed.push_back(f);
  for (auto& n : v.notes) r.notes.push_back(n);
  if (!same && v.ok()) {
    r.notes.push_back("recomputed pi = " + to_string(s.pi) + " passes every check; (u, w) is a valid witness");
  }
}

}  // namespace

Table read_table(std::istream& in) {
  Table t;
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> errors;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cells = split_tabs(line);
    if (!have_header) {
      if (cells == kD8Header) {
        t.id = 1;
      } else if (cells == kS3Header) {
        t.id = 2;
      } else {
        throw ParseError("line " + std::to_string(lineno) + ": unrecognized table header");
      }
      have_header = true;
      continue;
    }
    const std::size_t want = t.id == 1 ? kD8Header.size() : kS3Header.size();
    if (cells.size() != want) {
      errors.push_back("line " + std::to_string(lineno) + ": expected " + std::to_string(want) + " columns, got " +
                       std::to_string(cells.size()));
      continue;
    }
    try {
      t.rows.push_back({t.id, to_uint(cells[0]), cells, lineno});
    } catch (const ParseError& e) {
      errors.push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_header) throw ParseError("empty table");
  if (!errors.empty()) {
    std::string msg = "table parse errors:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw ParseError(msg);
  }
  return t;
}

Table read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_table(in);
}

nlohmann::json RowReport::to_json() const {
  return {{"line", line}, {"p", p},           {"pass", pass()},
          {"failed", failed}, {"warnings", warnings}, {"notes", notes}};
}

std::size_t TableReport::passed() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const RowReport& r) { return r.pass(); }));
}

nlohmann::json TableReport::to_json() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : rows) rs.push_back(r.to_json());
  return {{"table", table}, {"passed", passed()}, {"total", rows.size()}, {"rows", rs}};
}

RowReport verify_row(const TableRow& row) {
  RowReport r;
  r.line = row.line;
  r.p = row.p;
  try {
    if (row.table == 1) {
      verify_d8_row(row, r);
    } else {
      verify_s3_row(row, r);
    }
  } catch (const std::exception& e) {
    r.failed.push_back(std::string("row unreadable: ") + e.what());
  }
  return r;
}

TableReport verify_table(const Table& t) {
  TableReport rep;
  rep.table = t.id;
  for (const auto& row : t.rows) rep.rows.push_back(verify_row(row));
  return rep;
}

}  // namespace minram
