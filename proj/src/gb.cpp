#include "qmc/gb.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qmc {

namespace {

// Position of `pattern` as a contiguous subword of `w`, or npos.
std::size_t find_subword(const Word& w, const Word& pattern) {
  if (pattern.size() > w.size()) return std::string::npos;
  for (std::size_t s = 0; s + pattern.size() <= w.size(); ++s)
    if (std::equal(pattern.begin(), pattern.end(), w.begin() + s)) return s;
  return std::string::npos;
}

}  // namespace

SwapPolynomial gb_reduce(const SwapPolynomial& p, const std::vector<SwapPolynomial>& gb) {
  for (const auto& g : gb) {
    if (g.is_zero()) throw std::invalid_argument("zero polynomial in Groebner basis");
    if (g.n() != p.n()) throw std::invalid_argument("gb_reduce: Groebner basis over different n");
  }
  SwapPolynomial r = p;
  while (true) {
    const SwapPolynomial* hit = nullptr;
    SwapMonomial target;
    std::size_t pos = 0;
    for (auto it = r.terms().rbegin(); it != r.terms().rend() && !hit; ++it) {
      for (const auto& g : gb) {
        pos = find_subword(it->first.word(), g.leading_monomial().word());
        if (pos != std::string::npos) {
          hit = &g;
          target = it->first;
          break;
        }
      }
    }
    if (!hit) return r;
    const Word& w = target.word();
    const SwapMonomial& lm = hit->leading_monomial();
    Rational factor = r.coefficient(target) / hit->leading_coefficient();
    SwapMonomial left(p.n(), Word(w.begin(), w.begin() + pos));
    SwapMonomial right(p.n(), Word(w.begin() + pos + lm.degree(), w.end()));
    SwapPolynomial sub(p.n());
    for (const auto& [m, c] : hit->terms()) sub.add_term(left * m * right, c * factor);
    r -= sub;
  }
}

std::vector<SwapPolynomial> parse_gb(const std::string& text, int n) {
  std::vector<SwapPolynomial> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_swap_polynomial(line, n));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  int maxn = n;
  for (const auto& g : out) maxn = std::max(maxn, g.n());
  for (auto& g : out) g = g.with_ambient(maxn);
  return out;
}

std::string data_path(const std::string& name) {
  namespace fs = std::filesystem;
  if (fs::exists(name)) return name;
  const char* env = std::getenv("QMC_DATA_DIR");
  std::string dir = env && *env ? env : QMC_DATA_DIR;
  return (fs::path(dir) / name).string();
}

std::string load_data_text(const std::string& name) {
  std::string path = data_path(name);
  std::ifstream f(path);
  if (!f) throw InputError("cannot open data file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<SwapPolynomial> load_gb(const std::string& name, int n) { return parse_gb(load_data_text(name), n); }

}  // namespace qmc
