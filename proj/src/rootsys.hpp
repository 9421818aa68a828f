#pragma once

#include <string>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace mnp {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Simple type in canonical form: A(n>=1), B(n>=2), C(n>=3), D(n>=4),
// E(6..8), F4, G2. Anything else is rejected.
struct SimpleType {
  Series series;
  int rank;
};

// Parses "A2", "a1,b3,E8": case-insensitive, comma-separated tokens.
std::vector<SimpleType> parse_group(const std::string& spec);
std::string group_to_string(const std::vector<SimpleType>& components);

// A root alpha = sum n_j alpha_j, held as its integer coordinate vector n
// in the fixed simple-root basis.
using Coords = std::vector<long long>;

struct RootSystem {
  std::vector<SimpleType> components;
  int rank = 0;
  // cartan[i][j] = <alpha_j, alpha_i^vee>, block diagonal over components.
  std::vector<std::vector<long long>> cartan;
  // d_i with d_i * cartan[i][j] = d_j * cartan[j][i]; gives the invariant
  // inner product (alpha_i, alpha_j) = d_i * cartan[i][j].
  std::vector<long long> symmetrizer;
  // All roots, sorted lexicographically by coordinates.
  std::vector<Coords> roots;
};

RootSystem build_root_system(const std::vector<SimpleType>& components);

enum class Basis { Coweight, Coroot };

// Element of the Cartan subalgebra in one of two exact coordinate systems:
// masses as fundamental-coweight coefficients, charges as simple-coroot
// coefficients.
struct CartanElement {
  Basis basis;
  RatVec coeffs;
};

// The real number i*alpha(h). Coweight basis h = sum m_i w_i^vee gives
// sum_j n_j m_j; coroot basis h = sum k_i alpha_i^vee gives
// sum_{i,j} k_i cartan[i][j] n_j.
Rat pairing(const RootSystem& rs, const Coords& root, const CartanElement& h);

// Coordinates of beta^vee in the simple-coroot basis; always integers.
std::vector<long long> coroot_coords(const RootSystem& rs, const Coords& beta);

// Default generic tiebreak functional (1, 1/2, 1/4, ...).
RatVec default_tiebreak(int n);

struct PositiveSystem {
  std::vector<Coords> positive_roots;  // lexicographically sorted
  std::vector<Coords> base;            // indecomposable positive roots, sorted
};

// alpha is declared positive when the triple
//   (pairing(alpha, mu), -pairing(alpha, kappa), <alpha, tiebreak>)
// is lexicographically positive. Throws InvalidInput when the tiebreak is
// not generic (some root has all three pairings zero).
PositiveSystem positive_system(const RootSystem& rs, const CartanElement& mu,
                               const CartanElement& kappa, const RatVec& tiebreak);

}  // namespace mnp
