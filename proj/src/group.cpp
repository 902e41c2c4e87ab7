#include "plesken/group.hpp"

#include "plesken/error.hpp"

#include <deque>
#include <map>
#include <sstream>

namespace plesken {

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = a + 1; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

FiniteGroup from_cayley_table(FiniteGroup::Table table, std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw Error("MalformedTable", "empty table");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error("MalformedTable", "row " + std::to_string(i) + " has wrong length", {{"row", i}});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        throw Error("NotClosed", "entry out of range", {{"i", i}, {"j", j}, {"value", table[i][j]}});
      }
    }
  }

  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = table[e][j] == j && table[j][e] == j;
    if (ok) identity = e;
  }
  if (identity == n) throw Error("NoIdentity", "no two-sided identity element");

  std::vector<std::size_t> inverse(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] == identity && table[j][i] == identity) {
        inverse[i] = j;
        break;
      }
    }
    if (inverse[i] == n) throw Error("MissingInverse", "element has no two-sided inverse", {{"element", i}});
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (table[table[i][j]][k] != table[i][table[j][k]]) {
          throw Error("NotAssociative", "(ij)k != i(jk)", {{"i", i}, {"j", j}, {"k", k}});
        }
      }
    }
  }

  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  } else if (labels.size() != n) {
    throw Error("MalformedTable", "label count does not match order", {{"labels", labels.size()}});
  }

  FiniteGroup g;
  g.table_ = std::move(table);
  g.identity_ = identity;
  g.inverse_ = std::move(inverse);
  g.labels_ = std::move(labels);
  return g;
}

namespace {

/// Breadth-first closure of `generators` starting from `one`. `multiply` is
/// the group law on concrete elements; element 0 of the result is `one`.
template <typename Element, typename Multiply>
std::vector<Element> closure(const Element& one, const std::vector<Element>& generators, Multiply multiply,
                             std::size_t order_limit) {
  std::vector<Element> elements{one};
  std::map<Element, std::size_t> seen{{one, 0}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t current = queue.front();
    queue.pop_front();
    for (const auto& gen : generators) {
      Element next = multiply(elements[current], gen);
      if (seen.contains(next)) continue;
      if (elements.size() >= order_limit) {
        throw Error("OrderLimitExceeded", "closure exceeds order limit", {{"limit", order_limit}});
      }
      seen.emplace(next, elements.size());
      queue.push_back(elements.size());
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

template <typename Element, typename Multiply>
FiniteGroup::Table table_of(const std::vector<Element>& elements, Multiply multiply) {
  std::map<Element, std::size_t> index;
  for (std::size_t k = 0; k < elements.size(); ++k) index.emplace(elements[k], k);
  FiniteGroup::Table table(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) table[a][b] = index.at(multiply(elements[a], elements[b]));
  }
  return table;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation out(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) out[x] = p[q[x]];
  return out;
}

long mod(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

IntMatrix multiply_mod(const IntMatrix& a, const IntMatrix& b, long p) {
  const std::size_t k = a.size();
  IntMatrix out(k, std::vector<long>(k, 0));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t m = 0; m < k; ++m) {
      if (a[r][m] == 0) continue;
      for (std::size_t c = 0; c < k; ++c) out[r][c] = mod(out[r][c] + a[r][m] * b[m][c], p);
    }
  }
  return out;
}

long det_mod(IntMatrix m, long p) {
  const std::size_t k = m.size();
  long det = 1;
  auto inv_mod = [p](long a) {
    long result = 1;
    long base = mod(a, p);
    for (long e = p - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return result;
  };
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m[pivot][col] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = mod(-det, p);
    }
    det = det * m[col][col] % p;
    long inv = inv_mod(m[col][col]);
    for (std::size_t r = col + 1; r < k; ++r) {
      long factor = m[r][col] * inv % p;
      for (std::size_t c = col; c < k; ++c) m[r][c] = mod(m[r][c] - factor * m[col][c], p);
    }
  }
  return det;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::string matrix_label(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.size(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m[r].size(); ++c) os << (c ? "," : "") << m[r][c];
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix identity_matrix(std::size_t k) {
  IntMatrix m(k, std::vector<long>(k, 0));
  for (std::size_t d = 0; d < k; ++d) m[d][d] = 1;
  return m;
}

IntMatrix elementary(std::size_t k, std::size_t r, std::size_t c) {
  IntMatrix m = identity_matrix(k);
  m[r][c] = 1;
  return m;
}

std::string power_label(const char* symbol, long k) {
  if (k == 0) return "";
  if (k == 1) return symbol;
  return std::string(symbol) + "^" + std::to_string(k);
}

}  // namespace

std::string cycle_notation(const Permutation& perm) {
  std::vector<bool> done(perm.size(), false);
  std::ostringstream os;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == start) continue;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      os << (first ? "" : " ") << x;
      first = false;
      x = perm[x];
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

FiniteGroup from_permutation_generators(const std::vector<Permutation>& generators, std::size_t order_limit) {
  const std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].size() != degree) {
      throw Error("DomainMismatch", "generators act on different domains", {{"generator", g}});
    }
    std::vector<bool> hit(degree, false);
    for (auto x : generators[g]) {
      if (x >= degree || hit[x]) throw Error("NotAPermutation", "generator is not a bijection", {{"generator", g}});
      hit[x] = true;
    }
  }
  Permutation one(degree);
  for (std::size_t x = 0; x < degree; ++x) one[x] = x;
  auto elements = closure(one, generators, compose, order_limit);
  std::vector<std::string> labels;
  for (const auto& e : elements) labels.push_back(cycle_notation(e));
  return from_cayley_table(table_of(elements, compose), std::move(labels));
}

FiniteGroup from_matrix_generators_mod_p(const std::vector<IntMatrix>& generators, long p, std::size_t order_limit) {
  if (!is_prime(p)) throw Error("BadParameter", "modulus is not prime", {{"p", p}});
  const std::size_t k = generators.empty() ? 1 : generators.front().size();
  std::vector<IntMatrix> reduced;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& m = generators[g];
    if (m.size() != k) throw Error("MalformedMatrix", "generator has wrong size", {{"generator", g}});
    IntMatrix r(k, std::vector<long>(k));
    for (std::size_t a = 0; a < k; ++a) {
      if (m[a].size() != k) throw Error("MalformedMatrix", "generator is not square", {{"generator", g}});
      for (std::size_t b = 0; b < k; ++b) r[a][b] = mod(m[a][b], p);
    }
    if (det_mod(r, p) == 0) throw Error("NotInvertibleModP", "generator is singular mod p", {{"generator", g}, {"p", p}});
    reduced.push_back(std::move(r));
  }
  auto multiply = [p](const IntMatrix& a, const IntMatrix& b) { return multiply_mod(a, b, p); };
  auto elements = closure(identity_matrix(k), reduced, multiply, order_limit);
  std::vector<std::string> labels;
  for (const auto& e : elements) labels.push_back(matrix_label(e));
  return from_cayley_table(table_of(elements, multiply), std::move(labels));
}

FiniteGroup preset(std::string_view name, long parameter) {
  auto bad = [&](const char* why) {
    return Error("BadParameter", std::string(name) + ": " + why, {{"preset", name}, {"parameter", parameter}});
  };
  if (name == "cyclic") {
    if (parameter < 1) throw bad("order must be >= 1");
    const auto n = static_cast<std::size_t>(parameter);
    FiniteGroup::Table table(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(i == 0 ? "e" : power_label("a", static_cast<long>(i)));
      for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    }
    return from_cayley_table(std::move(table), std::move(labels));
  }
  if (name == "dihedral") {
    // a^k b^s has index k + n*s; b a = a^{-1} b.
    if (parameter < 1) throw bad("n must be >= 1");
    const long n = parameter;
    const auto order = static_cast<std::size_t>(2 * n);
    FiniteGroup::Table table(order, std::vector<std::size_t>(order));
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < order; ++x) {
      long k = static_cast<long>(x) % n;
      long s = static_cast<long>(x) / n;
      std::string label = power_label("a", k) + (s ? "b" : "");
      labels.push_back(label.empty() ? "e" : label);
      for (std::size_t y = 0; y < order; ++y) {
        long l = static_cast<long>(y) % n;
        long t = static_cast<long>(y) / n;
        long k2 = mod(k + (s ? -l : l), n);
        table[x][y] = static_cast<std::size_t>(k2 + n * ((s + t) % 2));
      }
    }
    return from_cayley_table(std::move(table), std::move(labels));
  }
  if (name == "symmetric") {
    if (parameter < 1 || parameter > 7) throw bad("degree must be in [1, 7]");
    const auto n = static_cast<std::size_t>(parameter);
    std::vector<Permutation> gens;
    if (n >= 2) {
      Permutation swap(n), cycle(n);
      for (std::size_t x = 0; x < n; ++x) {
        swap[x] = x;
        cycle[x] = (x + 1) % n;
      }
      std::swap(swap[0], swap[1]);
      gens.push_back(swap);
      if (n >= 3) gens.push_back(cycle);
    } else {
      gens.push_back(Permutation{0});
    }
    return from_permutation_generators(gens);
  }
  if (name == "quaternion8") {
    if (parameter != 0 && parameter != 8) throw bad("quaternion8 takes no parameter");
    // Index 2u + s is (-1)^s * unit_u with units 1, i, j, k.
    static const int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    FiniteGroup::Table table(8, std::vector<std::size_t>(8));
    for (std::size_t x = 0; x < 8; ++x) {
      for (std::size_t y = 0; y < 8; ++y) {
        std::size_t u = x / 2, v = y / 2;
        std::size_t sign = (x % 2 + y % 2 + kSign[u][v]) % 2;
        table[x][y] = 2 * kUnit[u][v] + sign;
      }
    }
    return from_cayley_table(std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
  }
  if (name == "heisenberg_p") {
    if (!is_prime(parameter)) throw bad("p must be prime");
    return from_matrix_generators_mod_p({elementary(3, 0, 1), elementary(3, 1, 2)}, parameter);
  }
  if (name == "elementary_abelian_p2") {
    if (!is_prime(parameter)) throw bad("p must be prime");
    return from_matrix_generators_mod_p({elementary(3, 0, 2), elementary(3, 1, 2)}, parameter);
  }
  throw Error("UnknownPreset", "unknown preset '" + std::string(name) + "'", {{"preset", name}});
}

std::size_t self_inverse_count(const FiniteGroup& group) {
  std::size_t count = 0;
  for (std::size_t g = 0; g < group.order(); ++g) {
    if (group.mul(g, g) == group.identity()) ++count;
  }
  return count;
}

}  // namespace plesken
