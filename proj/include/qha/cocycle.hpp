#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "qha/quasihopf.hpp"

namespace qha {

struct NotAutomorphism : std::runtime_error {
  NotAutomorphism() : std::runtime_error("permutation is not a group automorphism") {}
};

/// Finite group by multiplication table; identity, inverses and
/// associativity are verified at construction.
class GroupTable {
 public:
  GroupTable(std::string name, std::vector<std::string> labels, std::vector<std::vector<int>> table)
      : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
    n_ = (int)labels_.size();
    identity_ = -1;
    for (int e = 0; e < n_; ++e) {
      bool id = true;
      for (int g = 0; g < n_; ++g)
        if (table_[e][g] != g || table_[g][e] != g) {
          id = false;
          break;
        }
      if (id) {
        identity_ = e;
        break;
      }
    }
    if (identity_ < 0) throw std::invalid_argument("group table has no identity");
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw std::invalid_argument("group table not associative");
    inverse_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    for (int a = 0; a < n_; ++a)
      if (inverse_[a] < 0) throw std::invalid_argument("group table has a non-invertible element");
  }

  static GroupTable cyclic(int n) {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
      labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i)));
      for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    }
    return GroupTable("C" + std::to_string(n), labels, t);
  }

  /// S3 indexed as w = 3I + i for tau^I sigma^i, with tau a transposition
  /// and sigma a 3-cycle obeying sigma tau = tau sigma^{-1}.
  static GroupTable s3() {
    std::vector<std::string> labels(6);
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    auto idx = [](int I, int i) { return 3 * I + ((i % 3) + 3) % 3; };
    for (int I = 0; I < 2; ++I)
      for (int i = 0; i < 3; ++i) {
        std::string l = I ? "t" : "";
        if (i == 1) l += "s";
        if (i == 2) l += "s2";
        labels[idx(I, i)] = l.empty() ? "e" : l;
        for (int J = 0; J < 2; ++J)
          for (int j = 0; j < 3; ++j) t[idx(I, i)][idx(J, j)] = idx((I + J) % 2, (J ? -i : i) + j);
      }
    return GroupTable("S3", labels, t);
  }

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_automorphism(const std::vector<int>& perm) const {
    if ((int)perm.size() != n_) return false;
    std::vector<bool> seen(n_, false);
    for (int v : perm) {
      if (v < 0 || v >= n_ || seen[v]) return false;
      seen[v] = true;
    }
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (perm[table_[a][b]] != table_[perm[a]][perm[b]]) return false;
    return true;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int n_;
  int identity_;
};

/// Mathematical floor, correct for negative arguments.
inline int floor_div(int a, int b) {
  int q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline int mod3(int m) { return ((m % 3) + 3) % 3; }

/// Normalized 3-cochain with nonzero values; normalization (value 1 when
/// any argument is the identity) is testable, the cocycle identity is
/// checked by verify_3cocycle.
struct Cocycle3Table {
  std::shared_ptr<const GroupTable> group;
  std::string name;
  std::vector<Cyc> values;  // index (g*n + h)*n + l

  const Cyc& at(int g, int h, int l) const { return values[((size_t)g * group->order() + h) * group->order() + l]; }
  Cyc& at(int g, int h, int l) { return values[((size_t)g * group->order() + h) * group->order() + l]; }
};

struct Cochain2Table {
  std::shared_ptr<const GroupTable> group;
  std::string name;
  std::vector<Cyc> values;  // index g*n + h

  const Cyc& at(int g, int h) const { return values[(size_t)g * group->order() + h]; }
  Cyc& at(int g, int h) { return values[(size_t)g * group->order() + h]; }
};

inline Cocycle3Table constant_cocycle(std::shared_ptr<const GroupTable> G) {
  size_t n = (size_t)G->order();
  Cocycle3Table t{std::move(G), "1", std::vector<Cyc>(n * n * n, Cyc::one())};
  return t;
}

/// Standard cyclic-group representative: value zeta_n^(a * i * floor((j+l)/n))
/// on (g^i, g^j, g^l), with zeta_n the primitive n-th root in the global
/// field.
inline Cocycle3Table build_cyclic_cocycle(int n, int a) {
  auto G = std::make_shared<const GroupTable>(GroupTable::cyclic(n));
  Cocycle3Table t = constant_cocycle(G);
  t.name = "phi[C" + std::to_string(n) + ",a=" + std::to_string(a) + "]";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) t.at(i, j, l) = Cyc::root_of_unity(n, a * i * floor_div(j + l, n));
  return t;
}

/// Printed variant of the order-6 family: exponent uses floor((j+l)/3) in
/// place of floor((j+l)/6).  Kept so the adjudication can run both.
inline Cocycle3Table build_cyclic6_printed(int a, std::shared_ptr<const GroupTable> C6) {
  Cocycle3Table t = constant_cocycle(std::move(C6));
  t.name = "phi6-printed[a=" + std::to_string(a) + "]";
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int l = 0; l < 6; ++l) t.at(i, j, l) = Cyc::root_of_unity(6, a * i * floor_div(j + l, 3));
  return t;
}

/// The S3 family: on (tau^I sigma^i, tau^J sigma^j, tau^L sigma^l) the value
/// is q^(p (-1)^{J+L} i floor(((-1)^L j + l)/3)) * (-1)^{p I J L} with q a
/// primitive third root of unity.  Floors of negative arguments are
/// mathematical floors.
inline Cocycle3Table build_s3_cocycle(int p, std::shared_ptr<const GroupTable> S3) {
  Cocycle3Table t = constant_cocycle(std::move(S3));
  t.name = "omega[S3,p=" + std::to_string(p) + "]";
  for (int I = 0; I < 2; ++I)
    for (int i = 0; i < 3; ++i)
      for (int J = 0; J < 2; ++J)
        for (int j = 0; j < 3; ++j)
          for (int L = 0; L < 2; ++L)
            for (int l = 0; l < 3; ++l) {
              int signJL = ((J + L) % 2 == 0) ? 1 : -1;
              int e = p * signJL * i * floor_div((L ? -j : j) + l, 3);
              Cyc v = Cyc::root_of_unity(3, e);
              if (p % 2 == 1 && I == 1 && J == 1 && L == 1) v = -v;
              t.at(3 * I + i, 3 * J + j, 3 * L + l) = v;
            }
  return t;
}

enum class PsiVariant { as_printed, proof_derived };

/// Order-3 table used on the sigma-part of S3.  The two printed exponent
/// variants disagree; both are constructed so the cocycle checker and the
/// cohomologous test can adjudicate.
inline Cocycle3Table build_psi(int a, PsiVariant variant, std::shared_ptr<const GroupTable> C3) {
  Cocycle3Table t = constant_cocycle(std::move(C3));
  t.name = std::string("psi[a=") + std::to_string(a) + "," +
           (variant == PsiVariant::as_printed ? "as_printed" : "proof_derived") + "]";
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) {
        int corr = floor_div(mod3(j + l), 2) - floor_div(j, 2) - floor_div(l, 2);
        int e = a * i * floor_div(j + l, 3) + (variant == PsiVariant::as_printed ? a * i : a) * corr;
        t.at(i, j, l) = Cyc::root_of_unity(3, e);
      }
  return t;
}

/// g_a(sigma^i, sigma^j) = q^(a i floor(j/2)), the cobounding 2-cochain of
/// the psi adjudication.
inline Cochain2Table build_ga(int a, std::shared_ptr<const GroupTable> C3) {
  Cochain2Table t{C3, "g[a=" + std::to_string(a) + "]", std::vector<Cyc>(9, Cyc::one())};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t.at(i, j) = Cyc::root_of_unity(3, a * i * floor_div(j, 2));
  return t;
}

/// Checks normalization plus the group 3-cocycle identity
/// phi(h,k,l) phi(g,hk,l) phi(g,h,k) = phi(gh,k,l) phi(g,h,kl).
inline Report verify_3cocycle(const Cocycle3Table& phi) {
  const GroupTable& G = *phi.group;
  int n = G.order(), e = G.identity();
  Report rep(phi.name);
  bool norm = true, nonzero = true;
  std::string wit;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int l = 0; l < n; ++l) {
        if (phi.at(g, h, l).is_zero()) nonzero = false;
        if ((g == e || h == e || l == e) && !phi.at(g, h, l).is_one()) {
          if (norm) wit = "(" + G.labels()[g] + "," + G.labels()[h] + "," + G.labels()[l] + ")";
          norm = false;
        }
      }
  rep.add("cocycle-nonzero", "all values nonzero", nonzero);
  rep.add("cocycle-normalized", "value 1 when any argument is the identity", norm,
          norm ? std::nullopt : std::optional<std::string>(wit));
  bool coc = true;
  std::string cwit;
  for (int g = 0; g < n && coc; ++g)
    for (int h = 0; h < n && coc; ++h)
      for (int k = 0; k < n && coc; ++k)
        for (int l = 0; l < n && coc; ++l) {
          Cyc lhs = phi.at(h, k, l) * phi.at(g, G.mul(h, k), l) * phi.at(g, h, k);
          Cyc rhs = phi.at(G.mul(g, h), k, l) * phi.at(g, h, G.mul(k, l));
          if (lhs != rhs) {
            coc = false;
            cwit = "(" + G.labels()[g] + "," + G.labels()[h] + "," + G.labels()[k] + "," + G.labels()[l] +
                   "): " + lhs.str() + " vs " + rhs.str();
          }
        }
  rep.add("cocycle-identity", "group 3-cocycle identity", coc,
          coc ? std::nullopt : std::optional<std::string>(cwit));
  return rep;
}

/// delta g (x,y,z) = g(y,z) g(xy,z)^{-1} g(x,yz) g(x,y)^{-1}.
inline Cocycle3Table coboundary(const Cochain2Table& g2) {
  const GroupTable& G = *g2.group;
  int n = G.order();
  Cocycle3Table t = constant_cocycle(g2.group);
  t.name = "d(" + g2.name + ")";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        t.at(x, y, z) = g2.at(y, z) * g2.at(G.mul(x, y), z).inverse() * g2.at(x, G.mul(y, z)) *
                        g2.at(x, y).inverse();
  return t;
}

inline bool cohomologous(const Cocycle3Table& phi, const Cocycle3Table& psi, const Cochain2Table& g2) {
  const GroupTable& G = *phi.group;
  Cocycle3Table d = coboundary(g2);
  int n = G.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (psi.at(x, y, z) != phi.at(x, y, z) * d.at(x, y, z)) return false;
  return true;
}

/// Pointwise invariance of the table under a verified group automorphism.
inline bool invariant_under(const Cocycle3Table& phi, const std::vector<int>& aut) {
  const GroupTable& G = *phi.group;
  if (!G.is_automorphism(aut)) throw NotAutomorphism();
  int n = G.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (phi.at(aut[x], aut[y], aut[z]) != phi.at(x, y, z)) return false;
  return true;
}

/// Seeded random normalized 2-cochain with root-of-unity values.
inline Cochain2Table random_cochain(std::shared_ptr<const GroupTable> G, int root_order, uint64_t seed) {
  int n = G->order(), e = G->identity();
  Cochain2Table t{G, "random[" + std::to_string(seed) + "]",
                  std::vector<Cyc>((size_t)n * n, Cyc::one())};
  std::mt19937_64 rng(seed ^ 0xabcdef1234567890ULL);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      if (g == e || h == e) continue;
      t.at(g, h) = Cyc::root_of_unity(root_order, (int)(rng() % (uint64_t)root_order));
    }
  return t;
}

// --- function algebras and reassociators --------------------------------------

/// Function algebra k^G: basis of point idempotents P_g, convolution-dual
/// comultiplication, counit = evaluation at the identity.
inline Algebra function_algebra(const GroupTable& G, const std::string& name = "") {
  Algebra A(name.empty() ? "k^" + G.name() : name, G.order());
  for (int g = 0; g < G.order(); ++g) {
    A.basis_labels[g] = "P(" + G.labels()[g] + ")";
    A.unit.at({g}) = Cyc::one();
    A.mult.at({g, g, g}) = Cyc::one();
  }
  return A;
}

/// Group algebra k[G] with grouplike basis.
inline Algebra group_algebra(const GroupTable& G, const std::string& name = "") {
  Algebra A(name.empty() ? "k[" + G.name() + "]" : name, G.order());
  A.basis_labels = G.labels();
  A.unit.at({G.identity()}) = Cyc::one();
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b) A.mult.at({a, b, G.mul(a, b)}) = Cyc::one();
  return A;
}

/// Phi = sum phi(g,h,l) P_g x P_h x P_l over the function algebra k^G;
/// invertible entrywise since all table values are nonzero.
inline Tensor reassociator_from_cocycle(const GroupTable& G, const Cocycle3Table& phi) {
  int n = G.order();
  Tensor t(std::vector<int>{n, n, n});
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int l = 0; l < n; ++l) t.at({g, h, l}) = phi.at(g, h, l);
  return t;
}

/// Change of basis on k[C_n]: rows are the primitive idempotents
/// 1_i = (1/n) sum_t zeta_n^{-ti} g^t, certified orthogonal and resolving 1.
inline Tensor idempotent_basis(int n) {
  Tensor m(std::vector<int>{n, n});
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < n; ++t) m.at({i, t}) = Cyc::root_of_unity(n, -t * i) * Cyc(1, n);
  // Certificates against the cyclic group algebra.
  Algebra A = group_algebra(GroupTable::cyclic(n));
  Tensor sum(std::vector<int>{n});
  for (int i = 0; i < n; ++i) {
    Tensor ei(std::vector<int>{n});
    for (int t = 0; t < n; ++t) ei.at({t}) = m.at({i, t});
    sum += ei;
    for (int j = 0; j < n; ++j) {
      Tensor ej(std::vector<int>{n});
      for (int t = 0; t < n; ++t) ej.at({t}) = m.at({j, t});
      Tensor prod = tensor_element_mul(A, 1, ei, ej);
      if (i == j && prod != ei) throw CertificateFailure("idempotent basis: not idempotent");
      if (i != j && !prod.is_zero()) throw CertificateFailure("idempotent basis: not orthogonal");
    }
  }
  if (sum != A.unit) throw CertificateFailure("idempotent basis: does not resolve 1");
  return m;
}

/// The quasi-Hopf algebra (k^G, Phi_phi): pointwise multiplication,
/// dual-group comultiplication, S(P_g) = P_{g^{-1}}, reassociator from the
/// cocycle table, beta = 1 and alpha obtained by the linear solve.
inline QuasiHopf function_algebra_quasi_hopf(const GroupTable& G, const Cocycle3Table& phi,
                                             const std::string& name) {
  int n = G.order();
  Algebra A = function_algebra(G, name);
  Tensor comult(std::vector<int>{n, n, n});
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u) comult.at({u, G.mul(G.inv(u), w), w}) += Cyc::one();
  Tensor counit(std::vector<int>{n});
  counit.at({G.identity()}) = Cyc::one();
  Tensor Phi = reassociator_from_cocycle(G, phi);
  Tensor PhiInv(std::vector<int>{n, n, n});
  for (size_t f = 0; f < Phi.size(); ++f) PhiInv[f] = Phi[f].inverse();
  QuasiBialgebra qb = make_quasi_bialgebra(A, comult, counit, Phi, PhiInv);
  Tensor S(std::vector<int>{n, n});
  for (int g = 0; g < n; ++g) S.at({G.inv(g), g}) = Cyc::one();
  Tensor beta = A.unit;
  auto ds = solve_distinguished(qb, S, beta);
  if (!ds) throw CertificateFailure("no distinguished element for " + name);
  QuasiHopf H;
  H.qb = std::move(qb);
  H.antipode = S;
  H.alpha = ds->alpha;
  H.beta = beta;
  return H;
}

}  // namespace qha
