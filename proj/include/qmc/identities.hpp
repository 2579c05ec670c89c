#pragma once

#include "qmc/swap.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qmc {

// Relations of the presentation written as polynomials that must vanish, one
// per ordered index tuple so that every index form s_ij = s_ji appears.
std::vector<SwapPolynomial> involution_relations(int n);   // s_ij^2 - 1
std::vector<SwapPolynomial> conjugation_relations(int n);  // s_ij s_jk - s_ik s_ij
std::vector<SwapPolynomial> triangle_relations(int n);     // s_ij s_jk + s_jk s_ij - s_ij - s_jk - s_ik + 1
std::vector<SwapPolynomial> disjoint_commutators(int n);   // s_ij s_kl - s_kl s_ij
std::vector<SwapPolynomial> braid_cubes(int n);            // (s_ij s_jk)^3 - 1

struct CertificateTriple {
  SwapPolynomial f;
  SwapPolynomial g;
  SwapPolynomial l;
};

// Lines "f | g | l", '#' comments.
std::vector<CertificateTriple> parse_certificate(const std::string& text, int n = 4);
SwapPolynomial certificate_sum(const std::vector<CertificateTriple>& triples);

// Lines "name: polynomial", '#' comments.
std::vector<std::pair<std::string, SwapPolynomial>> parse_named_identities(const std::string& text);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  bool basis_sizes = true;  // derive B3(5), B3(6), B4(7) (tens of seconds)
};

// The conformance suite behind `qmc verify`.
std::vector<IdentityCheck> verify_identities(const VerifyOptions& opts = {});

}  // namespace qmc
