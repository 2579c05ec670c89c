#include "qmc/sdp.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <tuple>

namespace qmc {

SdpaData to_sdpa(const SdpProblem& p, bool maximize) {
  SdpaData d;
  d.m = static_cast<int>(p.n_vars());
  d.blocks.push_back(p.block_dim);
  for (std::size_t i = 0; i < p.pins.size(); ++i) {
    d.blocks.push_back(1);
    d.blocks.push_back(1);
  }
  d.c.assign(d.m, 0.0);
  for (const auto& [v, c] : p.objective.terms) d.c[v] = maximize ? -to_double(c) : to_double(c);

  for (int r = 0; r < p.block_dim; ++r)
    for (int c = r; c < p.block_dim; ++c) {
      const AffineExpr& e = p.entry(r, c);
      if (e.constant != 0) d.entries.push_back({0, 1, r + 1, c + 1, -to_double(e.constant)});
      for (const auto& [v, a] : e.terms) d.entries.push_back({v + 1, 1, r + 1, c + 1, to_double(a)});
    }
  int block = 2;
  for (const SdpPin& pin : p.pins) {
    // expr - value >= 0 and value - expr >= 0
    double k = to_double(pin.expr.constant - pin.value);
    for (int s : {1, -1}) {
      if (k != 0) d.entries.push_back({0, block, 1, 1, -s * k});
      for (const auto& [v, a] : pin.expr.terms) d.entries.push_back({v + 1, block, 1, 1, s * to_double(a)});
      ++block;
    }
  }
  std::stable_sort(d.entries.begin(), d.entries.end(), [](const auto& a, const auto& b) {
    return std::tie(a.mat, a.block, a.i, a.j) < std::tie(b.mat, b.block, b.i, b.j);
  });
  return d;
}

namespace {

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string write_sdpa(const SdpaData& d) {
  std::ostringstream out;
  out << d.m << "\n" << d.blocks.size() << "\n";
  for (std::size_t b = 0; b < d.blocks.size(); ++b) out << (b ? " " : "") << d.blocks[b];
  out << "\n";
  for (int i = 0; i < d.m; ++i) out << (i ? " " : "") << shortest(d.c[i]);
  out << "\n";
  for (const auto& e : d.entries)
    out << e.mat << " " << e.block << " " << e.i << " " << e.j << " " << shortest(e.value) << "\n";
  return out.str();
}

std::string export_sdpa(const SdpProblem& p, bool maximize) { return write_sdpa(to_sdpa(p, maximize)); }

SdpaData parse_sdpa(std::string_view text) {
  std::string cleaned(text);
  std::istringstream lines(cleaned);
  std::string line;
  std::vector<std::string> tokens;
  bool header = true;
  while (std::getline(lines, line)) {
    if (header && (line.empty() || line[0] == '"' || line[0] == '*')) continue;
    header = false;
    // trailing annotations such as "2 =mDIM"
    line = line.substr(0, line.find_first_of("=\"*"));
    for (char& ch : line)
      if (ch == ',' || ch == '{' || ch == '}' || ch == '(' || ch == ')') ch = ' ';
    std::istringstream in(line);
    std::string t;
    while (in >> t) tokens.push_back(t);
  }
  std::size_t pos = 0;
  auto next_int = [&](const char* what) {
    if (pos >= tokens.size()) throw InputError(std::string("SDPA: missing ") + what);
    try {
      return std::stoi(tokens[pos++]);
    } catch (const std::exception&) {
      throw InputError(std::string("SDPA: bad ") + what + " '" + tokens[pos - 1] + "'");
    }
  };
  auto next_double = [&](const char* what) {
    if (pos >= tokens.size()) throw InputError(std::string("SDPA: missing ") + what);
    try {
      return std::stod(tokens[pos++]);
    } catch (const std::exception&) {
      throw InputError(std::string("SDPA: bad ") + what + " '" + tokens[pos - 1] + "'");
    }
  };
  SdpaData d;
  d.m = next_int("variable count");
  int nb = next_int("block count");
  if (d.m < 0 || nb < 1) throw InputError("SDPA: bad header");
  for (int b = 0; b < nb; ++b) {
    int s = next_int("block size");
    if (s == 0) throw InputError("SDPA: zero block size");
    d.blocks.push_back(std::abs(s));
  }
  for (int i = 0; i < d.m; ++i) d.c.push_back(next_double("objective coefficient"));
  while (pos < tokens.size()) {
    SdpaData::Entry e;
    e.mat = next_int("matrix number");
    e.block = next_int("block number");
    e.i = next_int("row");
    e.j = next_int("column");
    e.value = next_double("value");
    if (e.mat < 0 || e.mat > d.m || e.block < 1 || e.block > nb) throw InputError("SDPA: entry index out of range");
    int size = d.blocks[e.block - 1];
    if (e.i < 1 || e.j < 1 || e.i > size || e.j > size) throw InputError("SDPA: entry position out of range");
    if (e.i > e.j) std::swap(e.i, e.j);
    d.entries.push_back(e);
  }
  return d;
}

}  // namespace qmc
