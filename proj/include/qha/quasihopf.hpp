#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qha/algebra.hpp"

namespace qha {

struct AntipodeNotInvertible : std::runtime_error {
  AntipodeNotInvertible() : std::runtime_error("antipode matrix is singular") {}
};

/// Quasi-bialgebra: algebra, comultiplication, counit and an invertible
/// reassociator.  comult has dims (n, n, n) with comult[j][k][i] the
/// coefficient of e_j x e_k in Delta(e_i); counit is a functional; phi and
/// phi_inv live in H^(x3) and are certified inverse at construction.
template <class R>
struct QuasiBialgebraT {
  AlgebraT<R> alg;
  TensorT<R> comult;   // (n, n, n): [j][k][i]
  TensorT<R> counit;   // (n)
  TensorT<R> phi;      // element of H^(x3)
  TensorT<R> phi_inv;  // certified inverse

  int dim() const { return alg.dim; }
};

template <class R>
struct QuasiHopfT {
  QuasiBialgebraT<R> qb;
  TensorT<R> antipode;  // (n, n) matrix, [out][in]
  TensorT<R> alpha;     // (n)
  TensorT<R> beta;      // (n)

  int dim() const { return qb.alg.dim; }
};

using QuasiBialgebra = QuasiBialgebraT<Cyc>;
using QuasiHopf = QuasiHopfT<Cyc>;

/// Counital invertible gauge transformation F in H x H with its certified
/// inverse.
struct Twist {
  Tensor f;
  Tensor f_inv;
};

// --- small helpers -----------------------------------------------------------

/// Applies Delta to one leg of an element of H^(x k).
template <class R>
TensorT<R> apply_comult_leg(const QuasiBialgebraT<R>& H, const TensorT<R>& t, int leg) {
  return t.split_leg(H.comult, leg);
}

template <class R>
TensorT<R> apply_counit_leg(const QuasiBialgebraT<R>& H, const TensorT<R>& t, int leg) {
  return t.contract_leg(H.counit, leg);
}

template <class R>
TensorT<R> delta_of_basis(const QuasiBialgebraT<R>& H, int i) {
  TensorT<R> e(std::vector<int>{H.dim()});
  e[(size_t)i] = R(1);
  return apply_comult_leg(H, e, 0);
}

inline Tensor apply_antipode_leg(const QuasiHopf& H, const Tensor& t, int leg) {
  return t.apply_to_leg(H.antipode, leg);
}

/// Product of a list of order-1 elements of H, left to right.
template <class R>
TensorT<R> chain_product(const AlgebraT<R>& A, const std::vector<TensorT<R>>& factors) {
  TensorT<R> acc = A.unit;
  for (const auto& f : factors) acc = tensor_element_mul(A, 1, acc, f);
  return acc;
}

/// Certifies phi * phi_inv = phi_inv * phi = 1 and eps(1) = 1; fills
/// phi_inv by a linear solve when not supplied.
inline QuasiBialgebra make_quasi_bialgebra(Algebra alg, Tensor comult, Tensor counit, Tensor phi,
                                           std::optional<Tensor> phi_inv = std::nullopt) {
  QuasiBialgebra H;
  H.alg = std::move(alg);
  H.comult = std::move(comult);
  H.counit = std::move(counit);
  H.phi = std::move(phi);
  if (phi_inv) {
    H.phi_inv = std::move(*phi_inv);
  } else {
    auto inv = tensor_element_invert(H.alg, 3, H.phi);
    if (!inv) throw CertificateFailure("reassociator is not invertible in " + H.alg.name);
    H.phi_inv = std::move(*inv);
  }
  Tensor unit3 = unit_tensor(H.alg, 3);
  if (tensor_element_mul(H.alg, 3, H.phi, H.phi_inv) != unit3 ||
      tensor_element_mul(H.alg, 3, H.phi_inv, H.phi) != unit3)
    throw CertificateFailure("reassociator inverse certificate failed in " + H.alg.name);
  Tensor e1 = H.alg.unit.contract_leg(H.counit, 0);
  if (!(e1.order() == 1 && e1.dim(0) == 1 && e1[(size_t)0].is_one()))
    throw CertificateFailure("counit does not send 1 to 1 in " + H.alg.name);
  return H;
}

inline Twist make_twist(const Algebra& A, const Tensor& f) {
  auto inv = tensor_element_invert(A, 2, f);
  if (!inv) throw CertificateFailure("twist is not invertible");
  return Twist{f, *inv};
}

/// Pretty form of an order-1 element for witnesses.
inline std::string element_str(const Algebra& A, const Tensor& v) {
  std::string s;
  for (int i = 0; i < A.dim; ++i) {
    const Cyc& c = v.at({i});
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + A.basis_labels[i];
  }
  return s.empty() ? "0" : s;
}

// --- verification ------------------------------------------------------------

/// Quasi-bialgebra axiom suite: Delta and eps are unital algebra morphisms,
/// quasi-coassociativity and the counit identities hold on every basis
/// vector, and the reassociator satisfies the pentagon-type cocycle identity
/// and its counit normalization.
template <class R>
Report verify_quasi_bialgebra(const QuasiBialgebraT<R>& H, std::string subject = "") {
  const auto& A = H.alg;
  int n = A.dim;
  Report rep(subject.empty() ? A.name : subject);

  auto elem = [&](int i) {
    TensorT<R> e(std::vector<int>{n});
    e[(size_t)i] = R(1);
    return e;
  };

  {  // Delta algebra morphism
    bool ok = apply_comult_leg(H, A.unit, 0) == unit_tensor(A, 2);
    rep.add("delta-unit", "comultiplication preserves the unit", ok);
    bool mok = true;
    std::string wit;
    for (int i = 0; i < n && mok; ++i)
      for (int j = 0; j < n && mok; ++j) {
        TensorT<R> lhs = apply_comult_leg(H, tensor_element_mul(A, 1, elem(i), elem(j)), 0);
        TensorT<R> rhs = tensor_element_mul(A, 2, delta_of_basis(H, i), delta_of_basis(H, j));
        if (lhs != rhs) {
          mok = false;
          wit = "(" + A.basis_labels[i] + "," + A.basis_labels[j] + ")";
        }
      }
    rep.add("delta-mult", "comultiplication is multiplicative", mok,
            mok ? std::nullopt : std::optional<std::string>(wit));
  }
  {  // eps algebra morphism
    bool eok = true;
    std::string wit;
    for (int i = 0; i < n && eok; ++i)
      for (int j = 0; j < n && eok; ++j) {
        TensorT<R> prod = tensor_element_mul(A, 1, elem(i), elem(j));
        R lhs = prod.contract_leg(H.counit, 0)[(size_t)0];
        R rhs = H.counit[(size_t)i] * H.counit[(size_t)j];
        if (!(lhs - rhs).is_zero()) {
          eok = false;
          wit = "(" + A.basis_labels[i] + "," + A.basis_labels[j] + ")";
        }
      }
    rep.add("eps-mult", "counit is multiplicative", eok,
            eok ? std::nullopt : std::optional<std::string>(wit));
  }
  {  // q1
    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i) {
      TensorT<R> d = delta_of_basis(H, i);
      TensorT<R> lhs = apply_comult_leg(H, d, 1);
      TensorT<R> mid = apply_comult_leg(H, d, 0);
      TensorT<R> rhs = tensor_element_mul(A, 3, tensor_element_mul(A, 3, H.phi, mid), H.phi_inv);
      if (lhs != rhs) {
        ok = false;
        wit = "basis " + A.basis_labels[i];
      }
    }
    rep.add("q1", "quasi-coassociativity conjugated by the reassociator", ok,
            ok ? std::nullopt : std::optional<std::string>(wit));
  }
  {  // q2
    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i) {
      TensorT<R> d = delta_of_basis(H, i);
      TensorT<R> e = elem(i);
      if (apply_counit_leg(H, d, 1) != e || apply_counit_leg(H, d, 0) != e) {
        ok = false;
        wit = "basis " + A.basis_labels[i];
      }
    }
    rep.add("q2", "counit identities for the comultiplication", ok,
            ok ? std::nullopt : std::optional<std::string>(wit));
  }
  {  // q3 pentagon
    TensorT<R> one1 = A.unit;
    TensorT<R> lhs = tensor_element_mul(
        A, 4,
        tensor_element_mul(A, 4, one1.kron(H.phi), apply_comult_leg(H, H.phi, 1)),
        H.phi.kron(one1));
    TensorT<R> rhs =
        tensor_element_mul(A, 4, apply_comult_leg(H, H.phi, 2), apply_comult_leg(H, H.phi, 0));
    rep.add("q3", "pentagon cocycle identity for the reassociator", lhs == rhs);
  }
  {  // q4
    bool ok = apply_counit_leg(H, H.phi, 1) == unit_tensor(A, 2);
    rep.add("q4", "counit normalization of the reassociator", ok);
  }
  return rep;
}

/// Full quasi-Hopf suite: the quasi-bialgebra records first, then the
/// antipode's anti-morphism property and the two antipode identities.
inline Report verify_quasi_hopf(const QuasiHopf& H, std::string subject = "") {
  const Algebra& A = H.qb.alg;
  int n = A.dim;
  Report rep = verify_quasi_bialgebra(H.qb, subject);

  auto elem = [&](int i) { return basis_vector(n, i); };

  {  // antipode: unital anti-morphism
    bool ok = A.unit.apply_to_leg(H.antipode, 0) == A.unit;
    rep.add("s-unit", "antipode fixes the unit", ok);
    bool aok = true;
    std::string wit;
    for (int i = 0; i < n && aok; ++i)
      for (int j = 0; j < n && aok; ++j) {
        Tensor lhs = tensor_element_mul(A, 1, elem(i), elem(j)).apply_to_leg(H.antipode, 0);
        Tensor rhs = tensor_element_mul(A, 1, elem(j).apply_to_leg(H.antipode, 0),
                                        elem(i).apply_to_leg(H.antipode, 0));
        if (lhs != rhs) {
          aok = false;
          wit = "(" + A.basis_labels[i] + "," + A.basis_labels[j] + ")";
        }
      }
    rep.add("s-anti", "antipode is an anti-morphism", aok,
            aok ? std::nullopt : std::optional<std::string>(wit));
  }

  // Sums over Delta(h) with the antipode applied to one tensor factor and a
  // fixed middle element: sum S(h_1) * mid * h_2 resp. h_1 * mid * S(h_2).
  auto sandwich = [&](const Tensor& pairs, const Tensor& mid) {
    Tensor acc(std::vector<int>{n});
    for (size_t f = 0; f < pairs.size(); ++f) {
      if (pairs[f].is_zero()) continue;
      auto idx = pairs.unflatten(f);
      Tensor term = chain_product(A, {elem(idx[0]), mid, elem(idx[1])});
      acc += term * pairs[f];
    }
    return acc;
  };

  {  // q5
    bool ok_a = true, ok_b = true;
    std::string wit_a, wit_b;
    for (int i = 0; i < n; ++i) {
      Tensor d = delta_of_basis(H.qb, i);
      Tensor lhs_a = sandwich(apply_antipode_leg(H, d, 0), H.alpha);
      Tensor rhs_a = H.alpha * H.qb.counit[(size_t)i];
      if (ok_a && lhs_a != rhs_a) {
        ok_a = false;
        wit_a = "basis " + A.basis_labels[i] + ": " + "lhs != eps(h)*alpha";
      }
      Tensor lhs_b = sandwich(apply_antipode_leg(H, d, 1), H.beta);
      Tensor rhs_b = H.beta * H.qb.counit[(size_t)i];
      if (ok_b && lhs_b != rhs_b) {
        ok_b = false;
        wit_b = "basis " + A.basis_labels[i];
      }
    }
    rep.add("q5-alpha", "left antipode identity with alpha", ok_a,
            ok_a ? std::nullopt : std::optional<std::string>(wit_a));
    rep.add("q5-beta", "right antipode identity with beta", ok_b,
            ok_b ? std::nullopt : std::optional<std::string>(wit_b));
  }
  {  // q6
    Tensor acc_a(std::vector<int>{n}), acc_b(std::vector<int>{n});
    for (size_t f = 0; f < H.qb.phi.size(); ++f) {
      if (!H.qb.phi[f].is_zero()) {
        auto id3 = H.qb.phi.unflatten(f);
        Tensor term = chain_product(
            A, {elem(id3[0]), H.beta, elem(id3[1]).apply_to_leg(H.antipode, 0), H.alpha, elem(id3[2])});
        acc_a += term * H.qb.phi[f];
      }
      if (!H.qb.phi_inv[f].is_zero()) {
        auto id3 = H.qb.phi_inv.unflatten(f);
        Tensor term = chain_product(A, {elem(id3[0]).apply_to_leg(H.antipode, 0), H.alpha, elem(id3[1]),
                                        H.beta, elem(id3[2]).apply_to_leg(H.antipode, 0)});
        acc_b += term * H.qb.phi_inv[f];
      }
    }
    bool ok_a = acc_a == A.unit;
    bool ok_b = acc_b == A.unit;
    rep.add("q6-alpha", "reassociator-antipode identity (X side)", ok_a,
            ok_a ? std::nullopt : std::optional<std::string>("evaluates to " + element_str(A, acc_a)));
    rep.add("q6-beta", "reassociator-antipode identity (x side)", ok_b,
            ok_b ? std::nullopt : std::optional<std::string>("evaluates to " + element_str(A, acc_b)));
  }
  return rep;
}

// --- gauge transformations ----------------------------------------------------

inline bool twist_is_counital(const QuasiBialgebra& H, const Twist& F) {
  return F.f.contract_leg(H.counit, 0) == H.alg.unit && F.f.contract_leg(H.counit, 1) == H.alg.unit;
}

/// Twisted quasi-bialgebra: Delta_F = F Delta F^{-1} and the standard
/// five-factor formula for Phi_F.  The inverse of Phi_F is assembled from
/// the mirrored formula and certified by multiplication.
inline QuasiBialgebra apply_twist(const QuasiBialgebra& H, const Twist& F) {
  const Algebra& A = H.alg;
  int n = A.dim;
  QuasiBialgebra out;
  out.alg = A;
  out.alg.name = A.name + "_F";
  out.counit = H.counit;
  out.comult = Tensor(std::vector<int>{n, n, n});
  for (int i = 0; i < n; ++i) {
    Tensor d = delta_of_basis(H, i);
    d = tensor_element_mul(A, 2, tensor_element_mul(A, 2, F.f, d), F.f_inv);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out.comult.at({j, k, i}) = d.at({j, k});
  }
  Tensor one1 = A.unit;
  out.phi = tensor_element_mul(
      A, 3,
      tensor_element_mul(A, 3, tensor_element_mul(A, 3, one1.kron(F.f), apply_comult_leg(H, F.f, 1)), H.phi),
      tensor_element_mul(A, 3, apply_comult_leg(H, F.f_inv, 0), F.f_inv.kron(one1)));
  out.phi_inv = tensor_element_mul(
      A, 3,
      tensor_element_mul(A, 3, tensor_element_mul(A, 3, F.f.kron(one1), apply_comult_leg(H, F.f, 0)),
                         H.phi_inv),
      tensor_element_mul(A, 3, apply_comult_leg(H, F.f_inv, 1), one1.kron(F.f_inv)));
  Tensor unit3 = unit_tensor(A, 3);
  if (tensor_element_mul(A, 3, out.phi, out.phi_inv) != unit3 ||
      tensor_element_mul(A, 3, out.phi_inv, out.phi) != unit3)
    throw CertificateFailure("twisted reassociator inverse certificate failed");
  return out;
}

inline QuasiHopf apply_twist(const QuasiHopf& H, const Twist& F) {
  QuasiHopf out;
  out.qb = apply_twist(H.qb, F);
  out.antipode = H.antipode;
  const Algebra& A = H.qb.alg;
  int n = A.dim;
  Tensor alpha_f(std::vector<int>{n}), beta_f(std::vector<int>{n});
  for (size_t f = 0; f < F.f_inv.size(); ++f) {
    if (F.f_inv[f].is_zero()) continue;
    auto idx = F.f_inv.unflatten(f);
    Tensor term = chain_product(
        A, {basis_vector(n, idx[0]).apply_to_leg(H.antipode, 0), H.alpha, basis_vector(n, idx[1])});
    alpha_f += term * F.f_inv[f];
  }
  for (size_t f = 0; f < F.f.size(); ++f) {
    if (F.f[f].is_zero()) continue;
    auto idx = F.f.unflatten(f);
    Tensor term = chain_product(
        A, {basis_vector(n, idx[0]), H.beta, basis_vector(n, idx[1]).apply_to_leg(H.antipode, 0)});
    beta_f += term * F.f[f];
  }
  out.alpha = alpha_f;
  out.beta = beta_f;
  return out;
}

/// The inverse gauge transformation, viewed as a twist on H_F.
inline Twist inverse_twist(const Twist& F) { return Twist{F.f_inv, F.f}; }

/// Seeded pseudorandom counital invertible twist.  Coefficients are small
/// rationals on the counit-reduced legs so counitality holds by
/// construction; invertibility is checked and new draws are taken until it
/// does (bounded retries).
inline std::optional<Twist> generate_twist(const QuasiBialgebra& H, uint64_t seed, int max_tries = 32) {
  const Algebra& A = H.alg;
  int n = A.dim;
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Tensor f = unit_tensor(A, 2);
    std::uniform_int_distribution<int> coord(0, n - 1), numdist(-2, 2), dendist(1, 2);
    int terms = 2 + (int)(rng() % 3);
    for (int t = 0; t < terms; ++t) {
      int i = coord(rng), j = coord(rng);
      Cyc c(numdist(rng), dendist(rng));
      if (c.is_zero()) continue;
      // (e_i - eps(e_i) 1) x (e_j - eps(e_j) 1)
      Tensor u = basis_vector(n, i) - A.unit * H.counit.at({i});
      Tensor v = basis_vector(n, j) - A.unit * H.counit.at({j});
      f += u.kron(v) * c;
    }
    auto inv = tensor_element_invert(A, 2, f);
    if (!inv) continue;
    Twist F{f, *inv};
    if (!twist_is_counital(H, F)) continue;
    return F;
  }
  return std::nullopt;
}

// --- distinguished elements ---------------------------------------------------

struct DistinguishedSolution {
  Tensor alpha;
  int degeneracy = 0;  // dimension of the affine solution set
};

/// Fixes S and beta, solves the antipode identities linearly for alpha.
/// Returns the canonical echelon representative; std::nullopt when the
/// system is infeasible.
inline std::optional<DistinguishedSolution> solve_distinguished(const QuasiBialgebra& H, const Tensor& S,
                                                                const Tensor& beta) {
  const Algebra& A = H.alg;
  int n = A.dim;
  auto elem = [&](int i) { return basis_vector(n, i); };
  // Columns: image of candidate alpha = e_v under each linear condition.
  std::vector<std::vector<Cyc>> rows;
  std::vector<Cyc> rhs;
  auto add_block = [&](const std::vector<Tensor>& cols, const Tensor& target) {
    for (int r = 0; r < n; ++r) {
      std::vector<Cyc> row(n);
      for (int v = 0; v < n; ++v) row[v] = cols[v].at({r});
      rows.push_back(std::move(row));
      rhs.push_back(target.at({r}));
    }
  };
  // q5 left identity for every basis h.
  for (int i = 0; i < n; ++i) {
    Tensor d = delta_of_basis(H, i).apply_to_leg(S, 0);
    std::vector<Tensor> cols;
    for (int v = 0; v < n; ++v) {
      Tensor acc(std::vector<int>{n});
      for (size_t f = 0; f < d.size(); ++f) {
        if (d[f].is_zero()) continue;
        auto idx = d.unflatten(f);
        acc += chain_product(A, {elem(idx[0]), elem(v), elem(idx[1])}) * d[f];
      }
      cols.push_back(acc - elem(v) * H.counit.at({i}));
    }
    add_block(cols, Tensor(std::vector<int>{n}));
  }
  // q6, both identities.
  {
    std::vector<Tensor> cols_a, cols_b;
    for (int v = 0; v < n; ++v) {
      Tensor acc_a(std::vector<int>{n}), acc_b(std::vector<int>{n});
      for (size_t f = 0; f < H.phi.size(); ++f) {
        if (!H.phi[f].is_zero()) {
          auto id3 = H.phi.unflatten(f);
          acc_a += chain_product(A, {elem(id3[0]), beta, elem(id3[1]).apply_to_leg(S, 0), elem(v),
                                     elem(id3[2])}) *
                   H.phi[f];
        }
        if (!H.phi_inv[f].is_zero()) {
          auto id3 = H.phi_inv.unflatten(f);
          acc_b += chain_product(A, {elem(id3[0]).apply_to_leg(S, 0), elem(v), elem(id3[1]), beta,
                                     elem(id3[2]).apply_to_leg(S, 0)}) *
                   H.phi_inv[f];
        }
      }
      cols_a.push_back(acc_a);
      cols_b.push_back(acc_b);
    }
    add_block(cols_a, A.unit);
    add_block(cols_b, A.unit);
  }
  int m = (int)rows.size();
  Tensor M(std::vector<int>{m, n}), b(std::vector<int>{m});
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) M.at({r, c}) = rows[r][c];
    b.at({r}) = rhs[r];
  }
  LinearSolution sol = solve_linear(M, b);
  if (!sol.feasible()) return std::nullopt;
  return DistinguishedSolution{*sol.particular, (int)sol.kernel_basis.size()};
}

// --- canonical elements -------------------------------------------------------

struct CanonicalElements {
  Tensor p_r, q_r, p_l;  // elements of H x H, dims (n, n)
};

/// p_R = x1 x x2 beta S(x3), q_R = X1 x S^{-1}(alpha X3) X2,
/// p_L = X2 S^{-1}(X1 beta) x X3.  Requires an invertible antipode.
inline CanonicalElements canonical_elements(const QuasiHopf& H) {
  const Algebra& A = H.qb.alg;
  int n = A.dim;
  auto sinv_m = matrix_inverse(H.antipode);
  if (!sinv_m) throw AntipodeNotInvertible();
  const Tensor& S = H.antipode;
  const Tensor& Sinv = *sinv_m;
  auto elem = [&](int i) { return basis_vector(n, i); };
  CanonicalElements ce{Tensor(std::vector<int>{n, n}), Tensor(std::vector<int>{n, n}),
                       Tensor(std::vector<int>{n, n})};
  for (size_t f = 0; f < H.qb.phi.size(); ++f) {
    if (!H.qb.phi_inv[f].is_zero()) {
      auto id3 = H.qb.phi_inv.unflatten(f);
      Tensor right = chain_product(A, {elem(id3[1]), H.beta, elem(id3[2]).apply_to_leg(S, 0)});
      ce.p_r += elem(id3[0]).kron(right) * H.qb.phi_inv[f];
    }
    if (!H.qb.phi[f].is_zero()) {
      auto id3 = H.qb.phi.unflatten(f);
      Tensor right =
          chain_product(A, {tensor_element_mul(A, 1, H.alpha, elem(id3[2])).apply_to_leg(Sinv, 0),
                            elem(id3[1])});
      ce.q_r += elem(id3[0]).kron(right) * H.qb.phi[f];
      Tensor left =
          chain_product(A, {elem(id3[1]), tensor_element_mul(A, 1, elem(id3[0]), H.beta).apply_to_leg(Sinv, 0)});
      ce.p_l += left.kron(elem(id3[2])) * H.qb.phi[f];
    }
  }
  return ce;
}

// --- morphisms ----------------------------------------------------------------

struct MorphismOptions {
  bool check_bijective = false;
  bool check_coalgebra = false;
  bool check_quasi_hopf = false;
};

/// Structure-preservation suite for a linear map f: A -> B (matrix dims
/// (dim B, dim A)).  The coalgebra option needs both quasi-bialgebra
/// structures; the quasi-Hopf option additionally compares reassociators,
/// antipodes and distinguished elements through f.
inline Report verify_quasi_hopf_morphism(const QuasiHopf& HA, const QuasiHopf& HB, const Tensor& f,
                                         MorphismOptions opt) {
  Report rep = verify_algebra_morphism(HA.qb.alg, HB.qb.alg, f, opt.check_bijective);
  if (opt.check_coalgebra || opt.check_quasi_hopf) {
    bool cok = true;
    std::string wit;
    for (int i = 0; i < HA.dim() && cok; ++i) {
      Tensor lhs = delta_of_basis(HA.qb, i).apply_to_leg(f, 0).apply_to_leg(f, 1);
      Tensor rhs = apply_comult_leg(HB.qb, basis_vector(HA.dim(), i).apply_to_leg(f, 0), 0);
      if (lhs != rhs) {
        cok = false;
        wit = "basis " + HA.qb.alg.basis_labels[i];
      }
    }
    rep.add("morph-comult", "comultiplication intertwined", cok,
            cok ? std::nullopt : std::optional<std::string>(wit));
    bool eok = true;
    for (int i = 0; i < HA.dim() && eok; ++i) {
      Cyc lhs = HA.qb.counit.at({i});
      Cyc rhs = basis_vector(HA.dim(), i).apply_to_leg(f, 0).contract_leg(HB.qb.counit, 0)[(size_t)0];
      if (lhs != rhs) eok = false;
    }
    rep.add("morph-counit", "counit intertwined", eok);
  }
  if (opt.check_quasi_hopf) {
    Tensor phiA = HA.qb.phi;
    for (int leg = 0; leg < 3; ++leg) phiA = phiA.apply_to_leg(f, leg);
    rep.add("morph-phi", "reassociator mapped to reassociator", phiA == HB.qb.phi);
    bool sok = true;
    for (int i = 0; i < HA.dim() && sok; ++i) {
      Tensor lhs = basis_vector(HA.dim(), i).apply_to_leg(HA.antipode, 0).apply_to_leg(f, 0);
      Tensor rhs = basis_vector(HA.dim(), i).apply_to_leg(f, 0).apply_to_leg(HB.antipode, 0);
      if (lhs != rhs) sok = false;
    }
    rep.add("morph-antipode", "antipode intertwined", sok);
    rep.add("morph-alpha", "alpha mapped to alpha", HA.alpha.apply_to_leg(f, 0) == HB.alpha);
    rep.add("morph-beta", "beta mapped to beta", HA.beta.apply_to_leg(f, 0) == HB.beta);
  }
  return rep;
}

}  // namespace qha
