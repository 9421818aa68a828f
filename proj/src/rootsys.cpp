#include "rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "errors.hpp"

namespace mnp {

namespace {

bool rank_ok(Series s, int rank) {
  switch (s) {
    case Series::A: return rank >= 1;
    case Series::B: return rank >= 2;
    case Series::C: return rank >= 3;
    case Series::D: return rank >= 4;
    case Series::E: return rank >= 6 && rank <= 8;
    case Series::F: return rank == 4;
    case Series::G: return rank == 2;
  }
  return false;
}

using Mat = std::vector<std::vector<long long>>;

Mat cartan_block(SimpleType t) {
  const int n = t.rank;
  Mat a(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (t.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 1, n - 3);
      break;
    case Series::E:
      bond(0, 2);
      bond(2, 3);
      bond(1, 3);
      for (int i = 3; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Series::F:
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      a[2][1] = -2;
      break;
    case Series::G:
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return a;
}

std::vector<long long> symmetrizer_block(SimpleType t) {
  const int n = t.rank;
  std::vector<long long> d(n, 1);
  switch (t.series) {
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case Series::C:
      d[n - 1] = 2;
      break;
    case Series::F:
      d[0] = d[1] = 2;
      break;
    case Series::G:
      d[0] = 3;
      break;
    default:
      break;
  }
  return d;
}

// Positive roots of one simple component, generated by root strings:
// with p the largest k such that beta - k*alpha_i is a root, the string
// length gives q = p - <beta, alpha_i^vee>, and beta + alpha_i is a root
// exactly when q > 0.
std::vector<Coords> positive_roots_block(const Mat& a) {
  const int n = static_cast<int>(a.size());
  std::set<Coords> pos;
  std::vector<Coords> queue;
  for (int i = 0; i < n; ++i) {
    Coords e(n, 0);
    e[i] = 1;
    pos.insert(e);
    queue.push_back(e);
  }
  for (size_t q = 0; q < queue.size(); ++q) {
    Coords beta = queue[q];
    for (int i = 0; i < n; ++i) {
      long long pair_i = 0;
      for (int j = 0; j < n; ++j) pair_i += a[i][j] * beta[j];
      bool is_simple_i = true;
      for (int j = 0; j < n; ++j)
        if (beta[j] != (j == i ? 1 : 0)) is_simple_i = false;
      if (is_simple_i) continue;
      long long p = 0;
      Coords down = beta;
      while (true) {
        down[i] -= 1;
        if (down[i] < 0 || !pos.count(down)) break;
        ++p;
      }
      if (p - pair_i > 0) {
        Coords up = beta;
        up[i] += 1;
        if (pos.insert(up).second) queue.push_back(up);
      }
    }
  }
  return {pos.begin(), pos.end()};
}

}  // namespace

std::vector<SimpleType> parse_group(const std::string& spec) {
  std::vector<SimpleType> out;
  size_t pos = 0;
  int token_index = 0;
  while (pos <= spec.size()) {
    size_t comma = spec.find(',', pos);
    std::string tok = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    tok = (b == std::string::npos) ? "" : tok.substr(b, e - b + 1);
    ++token_index;
    auto bad = [&](const std::string& why) {
      throw InvalidInput("group spec token " + std::to_string(token_index) + " ('" + tok +
                         "'): " + why);
    };
    if (tok.empty()) bad("empty token");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    if (c < 'A' || c > 'G') bad("series must be one of A..G");
    if (tok.size() < 2) bad("missing rank");
    int rank = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i]))) bad("rank must be an integer");
      rank = rank * 10 + (tok[i] - '0');
      if (rank > 1000) bad("rank out of range");
    }
    SimpleType t{static_cast<Series>(c), rank};
    if (!rank_ok(t.series, t.rank)) bad("rank out of range for series " + std::string(1, c));
    out.push_back(t);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw InvalidInput("empty group spec");
  return out;
}

std::string group_to_string(const std::vector<SimpleType>& components) {
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += ',';
    s += static_cast<char>(components[i].series);
    s += std::to_string(components[i].rank);
  }
  return s;
}

RootSystem build_root_system(const std::vector<SimpleType>& components) {
  if (components.empty()) throw InvalidInput("empty component list");
  RootSystem rs;
  rs.components = components;
  for (const auto& t : components) {
    if (!rank_ok(t.series, t.rank))
      throw InvalidInput("non-canonical simple type " + std::string(1, char(t.series)) +
                         std::to_string(t.rank));
    rs.rank += t.rank;
  }
  const int n = rs.rank;
  rs.cartan.assign(n, std::vector<long long>(n, 0));
  rs.symmetrizer.assign(n, 1);

  std::set<Coords> all;
  int offset = 0;
  for (const auto& t : components) {
    Mat block = cartan_block(t);
    auto d = symmetrizer_block(t);
    for (int i = 0; i < t.rank; ++i) {
      rs.symmetrizer[offset + i] = d[i];
      for (int j = 0; j < t.rank; ++j) rs.cartan[offset + i][offset + j] = block[i][j];
    }
    for (const Coords& local : positive_roots_block(block)) {
      Coords g(n, 0), gneg(n, 0);
      for (int j = 0; j < t.rank; ++j) {
        g[offset + j] = local[j];
        gneg[offset + j] = -local[j];
      }
      all.insert(g);
      all.insert(gneg);
    }
    offset += t.rank;
  }
  rs.roots.assign(all.begin(), all.end());

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.symmetrizer[i] * rs.cartan[i][j] != rs.symmetrizer[j] * rs.cartan[j][i])
        throw InternalError("cartan matrix is not symmetrizable");
  return rs;
}

Rat pairing(const RootSystem& rs, const Coords& root, const CartanElement& h) {
  if (static_cast<int>(root.size()) != rs.rank || static_cast<int>(h.coeffs.size()) != rs.rank)
    throw InvalidInput("pairing: coordinate length does not match the rank");
  Rat acc;
  if (h.basis == Basis::Coweight) {
    for (int j = 0; j < rs.rank; ++j) acc += h.coeffs[j] * Rat(root[j]);
  } else {
    for (int i = 0; i < rs.rank; ++i) {
      long long row = 0;
      for (int j = 0; j < rs.rank; ++j) row += rs.cartan[i][j] * root[j];
      acc += h.coeffs[i] * Rat(row);
    }
  }
  return acc;
}

std::vector<long long> coroot_coords(const RootSystem& rs, const Coords& beta) {
  const int n = rs.rank;
  long long norm = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) norm += beta[i] * beta[j] * rs.symmetrizer[i] * rs.cartan[i][j];
  if (norm <= 0 || norm % 2 != 0) throw InternalError("coroot: degenerate root norm");
  const long long half = norm / 2;
  std::vector<long long> c(n, 0);
  for (int j = 0; j < n; ++j) {
    long long v = beta[j] * rs.symmetrizer[j];
    if (v % half != 0) throw InternalError("coroot: non-integral coroot coordinate");
    c[j] = v / half;
  }
  return c;
}

RatVec default_tiebreak(int n) {
  if (n > 62) throw InvalidInput("total rank too large for the default tiebreak");
  RatVec t(n);
  for (int j = 0; j < n; ++j) t[j] = Rat(1, 1LL << j);
  return t;
}

PositiveSystem positive_system(const RootSystem& rs, const CartanElement& mu,
                               const CartanElement& kappa, const RatVec& tiebreak) {
  if (mu.basis != Basis::Coweight) throw InvalidInput("mass must be in the coweight basis");
  if (kappa.basis != Basis::Coroot) throw InvalidInput("charge must be in the coroot basis");
  if (static_cast<int>(tiebreak.size()) != rs.rank)
    throw InvalidInput("tiebreak length does not match the rank");

  std::set<Coords> pos;
  for (const Coords& alpha : rs.roots) {
    Rat p1 = pairing(rs, alpha, mu);
    Rat p2 = -pairing(rs, alpha, kappa);
    Rat p3;
    for (int j = 0; j < rs.rank; ++j) p3 += tiebreak[j] * Rat(alpha[j]);
    if (p1.is_zero() && p2.is_zero() && p3.is_zero())
      throw InvalidInput("tiebreak is not generic: a root pairs to zero with all three functionals");
    int s = !p1.is_zero() ? p1.sign() : (!p2.is_zero() ? p2.sign() : p3.sign());
    if (s > 0) pos.insert(alpha);
  }
  if (pos.size() * 2 != rs.roots.size())
    throw InternalError("positive system does not contain half of the roots");

  PositiveSystem ps;
  ps.positive_roots.assign(pos.begin(), pos.end());
  for (const Coords& beta : ps.positive_roots) {
    bool decomposable = false;
    for (const Coords& gamma : ps.positive_roots) {
      if (gamma == beta) continue;
      Coords diff(rs.rank);
      for (int j = 0; j < rs.rank; ++j) diff[j] = beta[j] - gamma[j];
      if (pos.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) ps.base.push_back(beta);
  }
  if (static_cast<int>(ps.base.size()) != rs.rank)
    throw InternalError("adapted base does not have one root per rank");
  return ps;
}

}  // namespace mnp
