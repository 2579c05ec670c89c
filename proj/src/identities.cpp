#include "qmc/identities.hpp"

#include "qmc/basis.hpp"
#include "qmc/gb.hpp"
#include "qmc/pauli.hpp"

#include <sstream>

namespace qmc {

namespace {

SwapPolynomial gen(int n, int i, int j) { return SwapPolynomial(SwapMonomial(n, {make_letter(i, j)})); }
SwapPolynomial one(int n) { return SwapPolynomial::constant(n, 1); }

template <class F>
std::vector<SwapPolynomial> over_triples(int n, F make) {
  std::vector<SwapPolynomial> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (i != j && j != k && i != k) out.push_back(make(i, j, k));
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<SwapPolynomial> involution_relations(int n) {
  std::vector<SwapPolynomial> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.push_back(gen(n, i, j) * gen(n, i, j) - one(n));
  return out;
}

std::vector<SwapPolynomial> conjugation_relations(int n) {
  return over_triples(n, [n](int i, int j, int k) { return gen(n, i, j) * gen(n, j, k) - gen(n, i, k) * gen(n, i, j); });
}

std::vector<SwapPolynomial> triangle_relations(int n) {
  return over_triples(n, [n](int i, int j, int k) {
    SwapPolynomial a = gen(n, i, j), b = gen(n, j, k);
    return a * b + b * a - a - b - gen(n, i, k) + one(n);
  });
}

std::vector<SwapPolynomial> disjoint_commutators(int n) {
  std::vector<SwapPolynomial> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (i == j || k == l) continue;
          if (i == k || i == l || j == k || j == l) continue;
          SwapPolynomial a = gen(n, i, j), b = gen(n, k, l);
          out.push_back(a * b - b * a);
        }
  return out;
}

std::vector<SwapPolynomial> braid_cubes(int n) {
  return over_triples(n, [n](int i, int j, int k) {
    SwapPolynomial t = gen(n, i, j) * gen(n, j, k);
    return t * t * t - one(n);
  });
}

std::vector<CertificateTriple> parse_certificate(const std::string& text, int n) {
  std::vector<CertificateTriple> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> parts;
    std::size_t start = 0, bar;
    while ((bar = line.find('|', start)) != std::string::npos) {
      parts.push_back(line.substr(start, bar - start));
      start = bar + 1;
    }
    parts.push_back(line.substr(start));
    if (parts.size() != 3) throw InputError("certificate line " + std::to_string(lineno) + ": expected f | g | l");
    out.push_back({parse_swap_polynomial(parts[0], n), parse_swap_polynomial(parts[1], n), parse_swap_polynomial(parts[2], n)});
  }
  return out;
}

SwapPolynomial certificate_sum(const std::vector<CertificateTriple>& triples) {
  if (triples.empty()) throw std::invalid_argument("empty certificate");
  SwapPolynomial s(triples.front().f.n());
  for (const auto& t : triples) s += t.f * t.g * t.l;
  return s;
}

std::vector<std::pair<std::string, SwapPolynomial>> parse_named_identities(const std::string& text) {
  std::vector<std::pair<std::string, SwapPolynomial>> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw InputError("identity line " + std::to_string(lineno) + ": expected name: polynomial");
    out.emplace_back(trim(line.substr(0, colon)), parse_swap_polynomial(line.substr(colon + 1)));
  }
  return out;
}

namespace {

IdentityCheck all_vanish(const std::string& name, const std::vector<SwapPolynomial>& ps) {
  IdentityCheck c{name, true, std::to_string(ps.size()) + " polynomials"};
  for (const auto& p : ps)
    if (!fingerprint(p).is_zero()) {
      c.pass = false;
      c.detail = "nonzero: " + p.str();
      break;
    }
  return c;
}

IdentityCheck gb_self_reduction(const std::string& file) {
  IdentityCheck c{"gb_reduce(g) = 0 for " + file, true, ""};
  std::vector<SwapPolynomial> gb = load_gb(file);
  c.detail = std::to_string(gb.size()) + " generators";
  for (const auto& g : gb)
    if (!gb_reduce(g, gb).is_zero()) {
      c.pass = false;
      c.detail = "does not reduce to 0: " + g.str();
      break;
    }
  return c;
}

IdentityCheck size_check(const std::string& name, std::size_t got, const BigInt& want) {
  std::ostringstream d;
  d << "derived " << got << ", formula " << want;
  return {name, BigInt(got) == want, d.str()};
}

}  // namespace

std::vector<IdentityCheck> verify_identities(const VerifyOptions& opts) {
  std::vector<IdentityCheck> out;
  const int n = 5;
  out.push_back(all_vanish("s_ij^2 = 1", involution_relations(n)));
  out.push_back(all_vanish("s_ij s_jk = s_ik s_ij", conjugation_relations(n)));
  out.push_back(all_vanish("triangle relation", triangle_relations(n)));
  out.push_back(all_vanish("disjoint swaps commute", disjoint_commutators(n)));
  out.push_back(all_vanish("(s_ij s_jk)^3 = 1", braid_cubes(n)));

  {
    auto triples = parse_certificate(load_data_text("commutator_certificate"));
    SwapPolynomial sum = certificate_sum(triples);
    SwapPolynomial a = SwapPolynomial::generator(4, 1, 2), b = SwapPolynomial::generator(4, 3, 4);
    SwapPolynomial comm = a * b - b * a;
    IdentityCheck c{"commutator certificate", true, std::to_string(triples.size()) + " triples"};
    if (sum != comm) {
      c.pass = false;
      c.detail = "sum differs from s12 s34 - s34 s12 in the free algebra";
    }
    for (const auto& t : triples)
      if (!fingerprint(t.g).is_zero()) {
        c.pass = false;
        c.detail = "middle factor is not a relation: " + t.g.str();
      }
    out.push_back(c);
  }

  for (const auto& [name, p] : parse_named_identities(load_data_text("identities")))
    out.push_back(all_vanish("identity " + name, {p}));

  for (const char* f : {"gb_swap_3", "gb_swap_4", "gb_irrep_3_1", "gb_irrep_2_2", "gb_sym_4"})
    out.push_back(gb_self_reduction(f));
  for (const char* f : {"gb_swap_3", "gb_swap_4", "gb_sym_4"})
    out.push_back(all_vanish(std::string(f) + " lies in the swap ideal", load_gb(f)));

  for (int m = 2; m <= 8; ++m) {
    auto b2 = basis_b2(m);
    ModSpan span;
    std::size_t rank = 0;
    for (const auto& w : b2)
      if (span.add(mod_coordinates(w.word()))) ++rank;
    IdentityCheck c = size_check("|B2(" + std::to_string(m) + ")|", b2.size(), basis_b2_size(m));
    c.pass = c.pass && rank == b2.size();
    c.detail += ", rank " + std::to_string(rank);
    out.push_back(c);
  }
  if (opts.basis_sizes) {
    out.push_back(size_check("|B3(5)|", derive_basis(5, 3).size(), basis_b3_size(5)));
    out.push_back(size_check("|B3(6)|", derive_basis(6, 3).size(), basis_b3_size(6)));
    out.push_back(size_check("|B4(7)|", derive_basis(7, 4).size(), basis_b4_size(7)));
  }
  return out;
}

}  // namespace qmc
