#include "apqaoa/dimacs.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace apqaoa {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_int(std::string_view tok, int line_no) {
  long value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw DimacsError("line " + std::to_string(line_no) + ": expected integer, got '" +
                      std::string(tok) + "'");
  }
  return value;
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text, std::optional<int> expected_k) {
  int n = -1;
  long declared_m = -1;
  std::vector<std::vector<Literal>> raw;
  std::vector<Literal> current;
  int line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.front() == "c" || tokens.front().front() == 'c') continue;
    if (tokens.front() == "%") break;  // SATLIB trailer
    if (tokens.front() == "p") {
      if (n >= 0) throw DimacsError("line " + std::to_string(line_no) + ": duplicate header");
      if (tokens.size() != 4 || tokens[1] != "cnf") {
        throw DimacsError("line " + std::to_string(line_no) + ": malformed header, expected 'p cnf <n> <m>'");
      }
      const long nv = parse_int(tokens[2], line_no);
      declared_m = parse_int(tokens[3], line_no);
      if (nv < 0 || nv > kMaxVariables || declared_m < 0) {
        throw DimacsError("line " + std::to_string(line_no) + ": header values out of range");
      }
      n = static_cast<int>(nv);
      continue;
    }
    if (n < 0) throw DimacsError("line " + std::to_string(line_no) + ": clause before header");
    for (std::string_view tok : tokens) {
      const long v = parse_int(tok, line_no);
      if (v == 0) {
        raw.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (v < -n || v > n) {
        throw DimacsError("line " + std::to_string(line_no) + ": literal " + std::to_string(v) +
                          " outside 1.." + std::to_string(n));
      }
      current.push_back(Literal::from_int(static_cast<int>(v)));
    }
  }

  if (n < 0) throw DimacsError("missing 'p cnf' header");
  if (!current.empty()) throw DimacsError("last clause is not terminated by 0");
  if (static_cast<long>(raw.size()) != declared_m) {
    throw DimacsError("header declares " + std::to_string(declared_m) + " clauses, found " +
                      std::to_string(raw.size()));
  }

  int k = expected_k.value_or(raw.empty() ? std::max(1, std::min(3, n)) : static_cast<int>(raw.front().size()));
  CnfFormula formula(n, k);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (static_cast<int>(raw[i].size()) != k) {
      throw DimacsError("clause " + std::to_string(i + 1) + " has " + std::to_string(raw[i].size()) +
                        " literals, expected " + std::to_string(k));
    }
    formula.add_clause(Clause(std::move(raw[i])));
  }
  return formula;
}

std::string write_dimacs(const CnfFormula& formula, std::string_view comment) {
  std::ostringstream out;
  std::size_t pos = 0;
  while (pos < comment.size()) {
    std::size_t eol = comment.find('\n', pos);
    if (eol == std::string_view::npos) eol = comment.size();
    out << "c " << comment.substr(pos, eol - pos) << '\n';
    pos = eol + 1;
  }
  out << "p cnf " << formula.num_vars() << ' ' << formula.num_clauses() << '\n';
  for (const Clause& c : formula.clauses()) {
    for (const Literal& lit : c.literals()) out << lit.to_int() << ' ';
    out << "0\n";
  }
  return out.str();
}

CnfFormula read_dimacs_file(const std::string& path, std::optional<int> expected_k) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dimacs(buf.str(), expected_k);
}

void write_dimacs_file(const std::string& path, const CnfFormula& formula,
                       std::string_view comment) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << write_dimacs(formula, comment);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace apqaoa
