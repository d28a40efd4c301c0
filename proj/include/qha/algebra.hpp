#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qha/report.hpp"
#include "qha/tensor.hpp"

namespace qha {

struct CertificateFailure : std::runtime_error {
  explicit CertificateFailure(const std::string& what) : std::runtime_error(what) {}
};
struct NotAnIdeal : std::runtime_error {
  explicit NotAnIdeal(const std::string& what) : std::runtime_error(what) {}
};

/// Finite-dimensional unital algebra by structure constants over the ring R:
/// mult[i][j][k] is the coefficient of e_k in e_i * e_j.  Associativity is
/// not an invariant of the type; verify_algebra certifies it.
template <class R>
struct AlgebraT {
  std::string name;
  int dim = 0;
  std::vector<std::string> basis_labels;
  TensorT<R> unit;  // order 1
  TensorT<R> mult;  // order 3, [i][j][k]
  bool associativity_certified = false;

  AlgebraT() = default;
  AlgebraT(std::string nm, int d)
      : name(std::move(nm)),
        dim(d),
        basis_labels(),
        unit(std::vector<int>{d}),
        mult(std::vector<int>{d, d, d}) {
    for (int i = 0; i < d; ++i) basis_labels.push_back("e" + std::to_string(i));
  }

  using Row = std::vector<std::pair<int, R>>;

  /// Sparse structure-constant rows, built on demand: rows()[i*dim+j] lists
  /// the nonzero (k, c) of e_i * e_j.
  const std::vector<Row>& rows() const {
    if (rows_.empty() && dim > 0) {
      rows_.resize((size_t)dim * dim);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
          Row& r = rows_[(size_t)i * dim + j];
          for (int k = 0; k < dim; ++k) {
            const R& c = mult.at({i, j, k});
            if (!c.is_zero()) r.emplace_back(k, c);
          }
        }
    }
    return rows_;
  }
  void invalidate_rows() { rows_.clear(); }

 private:
  mutable std::vector<Row> rows_;
};

using Algebra = AlgebraT<Cyc>;

/// Product in A^(tensor k): u, v order-k tensors, every leg of dimension
/// dim(A).  Multiplication is applied legwise through the structure
/// constants; cost is (nonzeros of u) x (nonzeros of v) x branching.
template <class R>
TensorT<R> tensor_element_mul(const AlgebraT<R>& A, int k, const TensorT<R>& u, const TensorT<R>& v) {
  if (u.order() != k || v.order() != k) throw ShapeMismatch("tensor_element_mul: order mismatch");
  for (int t = 0; t < k; ++t)
    if (u.dim(t) != A.dim || v.dim(t) != A.dim) throw ShapeMismatch("tensor_element_mul: leg dim mismatch");
  const auto& rows = A.rows();
  TensorT<R> out(u.dims());

  std::vector<std::pair<std::vector<int>, const R*>> unz, vnz;
  for (size_t f = 0; f < u.size(); ++f)
    if (!u[f].is_zero()) unz.emplace_back(u.unflatten(f), &u[f]);
  for (size_t f = 0; f < v.size(); ++f)
    if (!v[f].is_zero()) vnz.emplace_back(v.unflatten(f), &v[f]);

  std::vector<int> idx(k);
  for (const auto& [ui, uc] : unz) {
    for (const auto& [vi, vc] : vnz) {
      R base = (*uc) * (*vc);
      if (base.is_zero()) continue;
      // Legwise expansion with early exit on empty rows.
      std::function<void(int, const R&)> walk = [&](int leg, const R& acc) {
        if (leg == k) {
          out[out.flatten(idx)] += acc;
          return;
        }
        const auto& row = rows[(size_t)ui[leg] * A.dim + vi[leg]];
        for (const auto& [tgt, c] : row) {
          idx[leg] = tgt;
          walk(leg + 1, acc * c);
        }
      };
      walk(0, base);
    }
  }
  return out;
}

template <class R>
TensorT<R> unit_tensor(const AlgebraT<R>& A, int k) {
  TensorT<R> u = A.unit;
  TensorT<R> out = u;
  for (int t = 1; t < k; ++t) out = out.kron(u);
  return out;
}

/// Two-sided inverse of u in A^(tensor k) found by one linear solve plus a
/// two-sided check; std::nullopt when not invertible.
inline std::optional<Tensor> tensor_element_invert(const Algebra& A, int k, const Tensor& u) {
  size_t n = u.size();
  Tensor unit = unit_tensor(A, k);
  // Matrix of left multiplication by u on A^(tensor k).
  Tensor M(std::vector<int>{(int)n, (int)n});
  for (size_t col = 0; col < n; ++col) {
    Tensor e(u.dims());
    e[col] = Cyc::one();
    Tensor prod = tensor_element_mul(A, k, u, e);
    for (size_t r = 0; r < n; ++r) M.at({(int)r, (int)col}) = prod[r];
  }
  Tensor rhs(std::vector<int>{(int)n});
  for (size_t r = 0; r < n; ++r) rhs.at({(int)r}) = unit[r];
  LinearSolution sol = solve_linear(M, rhs);
  if (!sol.feasible()) return std::nullopt;
  Tensor v(u.dims());
  for (size_t r = 0; r < n; ++r) v[r] = (*sol.particular)[r];
  if (tensor_element_mul(A, k, u, v) != unit) return std::nullopt;
  if (tensor_element_mul(A, k, v, u) != unit) return std::nullopt;
  return v;
}

/// Unit laws plus associativity on all basis triples; failures become report
/// entries (lexicographic (i,j,k) order), never exceptions.
template <class R>
Report verify_algebra(AlgebraT<R>& A) {
  Report rep(A.name.empty() ? "algebra" : A.name);
  bool unit_ok = true;
  std::string unit_witness;
  for (int i = 0; i < A.dim && unit_ok; ++i) {
    TensorT<R> e(std::vector<int>{A.dim});
    e[(size_t)i] = R(1);
    if (tensor_element_mul(A, 1, A.unit, e) != e || tensor_element_mul(A, 1, e, A.unit) != e) {
      unit_ok = false;
      unit_witness = "basis " + A.basis_labels[i];
    }
  }
  rep.add("unit-law", "two-sided unit law", unit_ok,
          unit_ok ? std::nullopt : std::optional<std::string>(unit_witness));

  bool assoc_ok = true;
  std::string assoc_witness;
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      for (int k = 0; k < A.dim; ++k) {
        TensorT<R> ei(std::vector<int>{A.dim}), ej(std::vector<int>{A.dim}), ek(std::vector<int>{A.dim});
        ei[(size_t)i] = R(1);
        ej[(size_t)j] = R(1);
        ek[(size_t)k] = R(1);
        TensorT<R> l = tensor_element_mul(A, 1, tensor_element_mul(A, 1, ei, ej), ek);
        TensorT<R> r = tensor_element_mul(A, 1, ei, tensor_element_mul(A, 1, ej, ek));
        if (l != r && assoc_ok) {
          assoc_ok = false;
          assoc_witness = "(" + A.basis_labels[i] + "," + A.basis_labels[j] + "," + A.basis_labels[k] + ")";
        }
      }
  rep.add("assoc", "associativity on basis triples", assoc_ok,
          assoc_ok ? std::nullopt : std::optional<std::string>(assoc_witness));
  A.associativity_certified = rep.all_pass();
  return rep;
}

/// Matrix of left multiplication by the element with coordinates v.
inline Tensor left_mult_matrix(const Algebra& A, const Tensor& v) {
  Tensor M(std::vector<int>{A.dim, A.dim});
  for (int j = 0; j < A.dim; ++j) {
    Tensor e(std::vector<int>{A.dim});
    e.at({j}) = Cyc::one();
    Tensor prod = tensor_element_mul(A, 1, v, e);
    for (int i = 0; i < A.dim; ++i) M.at({i, j}) = prod.at({i});
  }
  return M;
}

namespace detail {

inline Tensor trace_gram(const Algebra& A) {
  // T[i][j] = tr(L_i L_j) = sum_{a,b} m[i][b][a] m[j][a][b]
  Tensor G(std::vector<int>{A.dim, A.dim});
  for (int i = 0; i < A.dim; ++i)
    for (int j = i; j < A.dim; ++j) {
      Cyc s;
      for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < A.dim; ++b) {
          const Cyc& x = A.mult.at({i, b, a});
          if (x.is_zero()) continue;
          const Cyc& y = A.mult.at({j, a, b});
          if (y.is_zero()) continue;
          s += x * y;
        }
      G.at({i, j}) = s;
      G.at({j, i}) = s;
    }
  return G;
}

inline std::vector<Tensor> subspace_product(const Algebra& A, const std::vector<Tensor>& u,
                                            const std::vector<Tensor>& v) {
  std::vector<Tensor> prods;
  for (const auto& x : u)
    for (const auto& y : v) prods.push_back(tensor_element_mul(A, 1, x, y));
  return prods;
}

}  // namespace detail

/// Deterministic complement quotient.  The section consists of the basis
/// vectors at non-pivot positions of the ideal's echelon basis.
inline Algebra quotient_algebra(const Algebra& A, const Subspace& ideal,
                                std::vector<int>* section_out = nullptr) {
  // Certify two-sidedness before quotienting.
  for (const auto& v : ideal.basis()) {
    for (int i = 0; i < A.dim; ++i) {
      Tensor e(std::vector<int>{A.dim});
      e.at({i}) = Cyc::one();
      if (!ideal.contains(tensor_element_mul(A, 1, e, v)) ||
          !ideal.contains(tensor_element_mul(A, 1, v, e)))
        throw NotAnIdeal("subspace is not a two-sided ideal of " + A.name);
    }
  }
  std::vector<bool> is_pivot(A.dim, false);
  for (int p : ideal.pivots()) is_pivot[p] = true;
  std::vector<int> section;
  for (int i = 0; i < A.dim; ++i)
    if (!is_pivot[i]) section.push_back(i);
  if (section_out) *section_out = section;

  int q = (int)section.size();
  // Projection: reduce modulo ideal rows, read off section coordinates.
  auto project = [&](Tensor v) {
    const auto& rows = ideal.rows();
    const auto& pivots = ideal.pivots();
    for (size_t r = 0; r < rows.size(); ++r) {
      Cyc f = v.at({pivots[r]});
      if (f.is_zero()) continue;
      for (int i = 0; i < A.dim; ++i) v.at({i}) -= f * rows[r][i];
    }
    Tensor out(std::vector<int>{q});
    for (int t = 0; t < q; ++t) out.at({t}) = v.at({section[t]});
    return out;
  };

  Algebra Q(A.name + "/J", q);
  for (int t = 0; t < q; ++t) Q.basis_labels[t] = A.basis_labels[section[t]];
  Q.unit = project(A.unit);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      Tensor ea(std::vector<int>{A.dim}), eb(std::vector<int>{A.dim});
      ea.at({section[a]}) = Cyc::one();
      eb.at({section[b]}) = Cyc::one();
      Tensor p = project(tensor_element_mul(A, 1, ea, eb));
      for (int c = 0; c < q; ++c) Q.mult.at({a, b, c}) = p.at({c});
    }
  return Q;
}

/// Jacobson radical as the kernel of the trace form of the regular
/// representation (characteristic zero).  Three certificates are checked
/// before returning: the kernel is a two-sided ideal, it is nilpotent with
/// exponent at most dim, and the trace form on the quotient is nondegenerate.
inline Subspace jacobson_radical(const Algebra& A) {
  Tensor G = detail::trace_gram(A);
  Tensor zero(std::vector<int>{A.dim});
  LinearSolution sol = solve_linear(G, zero);
  Subspace J = Subspace::from_vectors(A.dim, sol.kernel_basis);

  // Certificate 1: two-sided ideal.
  for (const auto& v : J.basis())
    for (int i = 0; i < A.dim; ++i) {
      Tensor e(std::vector<int>{A.dim});
      e.at({i}) = Cyc::one();
      if (!J.contains(tensor_element_mul(A, 1, e, v)) || !J.contains(tensor_element_mul(A, 1, v, e)))
        throw CertificateFailure("radical candidate is not an ideal in " + A.name);
    }

  // Certificate 2: nilpotency, J^m = 0 for some m <= dim.
  if (J.dim() > 0) {
    std::vector<Tensor> power = J.basis();
    bool nil = false;
    for (int m = 2; m <= A.dim + 1; ++m) {
      power = detail::subspace_product(A, power, J.basis());
      Subspace span = Subspace::from_vectors(A.dim, power);
      if (span.dim() == 0) {
        nil = true;
        break;
      }
      power = span.basis();
    }
    if (!nil) throw CertificateFailure("radical candidate is not nilpotent in " + A.name);
  }

  // Certificate 3: trace form nondegenerate on the quotient.
  Algebra Q = quotient_algebra(A, J);
  Tensor GQ = detail::trace_gram(Q);
  LinearSolution qk = solve_linear(GQ, Tensor(std::vector<int>{Q.dim}));
  if (!qk.kernel_basis.empty())
    throw CertificateFailure("trace form degenerate on quotient of " + A.name);

  return J;
}

inline bool is_semisimple(const Algebra& A) { return jacobson_radical(A).dim() == 0; }

// ---------------------------------------------------------------------------
// Basicity: quotient by the radical, then decompose into one-dimensional
// blocks via a complete set of orthogonal primitive idempotents.

struct NonSplit : std::runtime_error {
  std::string polynomial;
  explicit NonSplit(std::string poly)
      : std::runtime_error("minimal polynomial does not split over the configured cyclotomic field: " + poly),
        polynomial(std::move(poly)) {}
};

namespace detail {

/// Durand-Kerner root finding for a monic complex polynomial (ascending
/// coefficients, leading 1 implicit).  Degrees here are at most 6.
inline std::vector<std::complex<double>> numeric_roots(const std::vector<std::complex<double>>& monic) {
  int n = (int)monic.size();  // degree
  std::vector<std::complex<double>> r(n);
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> p = 1.0;
  for (int i = 0; i < n; ++i) {
    p *= seed;
    r[i] = p;
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> v = 1.0;
    for (int i = n - 1; i >= 0; --i) v = v * x + monic[i];
    return v;
  };
  for (int iter = 0; iter < 400; ++iter) {
    double delta = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> den = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= (r[i] - r[j]);
      std::complex<double> step = eval(r[i]) / den;
      r[i] -= step;
      delta += std::abs(step);
    }
    if (delta < 1e-14) break;
  }
  return r;
}

inline std::optional<Rational> rationalize(double x, long long max_den = 1000000) {
  // Continued fractions with a denominator bound.
  double v = x;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    if (fl > 9e17 || fl < -9e17) return std::nullopt;
    long long a = (long long)fl;
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = v - fl;
    if (frac < 1e-12) break;
    v = 1.0 / frac;
  }
  if (q1 == 0) return std::nullopt;
  if (std::abs((double)p1 / (double)q1 - x) > 1e-7) return std::nullopt;
  return Rational(p1, q1);
}

/// All roots of p (coefficients in Q(zeta_L), ascending, monic) that lie in
/// Q(zeta_L).  Numeric candidates under a pair of non-conjugate embeddings
/// pin down power-basis coordinates, which are then verified exactly; only
/// exactly verified roots are returned.
inline std::vector<Cyc> roots_in_field(const std::vector<Cyc>& monic) {
  const CycField& F = CycField::get();
  int L = F.order(), phi = F.phi();
  std::vector<int> units;
  for (int a = 1; a < L; ++a) {
    bool cop = std::gcd(a, L) == 1;
    if (cop && a <= L - a) units.push_back(a);  // one per conjugate pair
  }
  if (L <= 2) units = {1};
  int npair = (int)units.size();
  // phi = 2 * npair except for L in {1, 2} where the field is real.
  std::vector<std::vector<std::complex<double>>> rootsets;
  for (int a : units) {
    std::vector<std::complex<double>> c;
    for (const auto& q : monic) c.push_back(q.embed(a));
    rootsets.push_back(numeric_roots(c));
  }
  // Real linear system columns: coordinates of zeta^j under each embedding.
  int n = (int)monic.size();
  std::vector<Cyc> found;
  auto try_candidate = [&](const std::vector<double>& target) {
    // Solve sum_j c_j * emb_a(zeta^j) = target_a for rational c_j.
    int rows2 = 2 * npair;
    std::vector<std::vector<double>> M(rows2, std::vector<double>(phi + 1, 0.0));
    for (int pi = 0; pi < npair; ++pi)
      for (int j = 0; j < phi; ++j) {
        std::complex<double> z = Cyc::zeta_pow(j).embed(units[pi]);
        M[2 * pi][j] = z.real();
        M[2 * pi + 1][j] = z.imag();
      }
    for (int r = 0; r < rows2; ++r) M[r][phi] = target[r];
    // Gaussian elimination in doubles.
    int rank = 0;
    for (int c = 0; c < phi && rank < rows2; ++c) {
      int sel = -1;
      double best = 1e-9;
      for (int r = rank; r < rows2; ++r)
        if (std::abs(M[r][c]) > best) {
          best = std::abs(M[r][c]);
          sel = r;
        }
      if (sel < 0) continue;
      std::swap(M[rank], M[sel]);
      for (int r = 0; r < rows2; ++r) {
        if (r == rank) continue;
        double f = M[r][c] / M[rank][c];
        for (int cc = c; cc <= phi; ++cc) M[r][cc] -= f * M[rank][cc];
      }
      ++rank;
    }
    if (rank < phi) return;  // embeddings degenerate; cannot reconstruct
    std::vector<double> coord(phi, 0.0);
    int rr = 0;
    for (int c = 0; c < phi; ++c) {
      coord[c] = M[rr][phi] / M[rr][c];
      ++rr;
    }
    Cyc cand;
    for (int j = 0; j < phi; ++j) {
      auto r = rationalize(coord[j]);
      if (!r) return;
      cand.coeff(j) = *r;
    }
    // Exact verification.
    Cyc v(0), pw(1);
    for (int i = 0; i < n; ++i) {
      v += monic[i] * pw;
      pw *= cand;
    }
    v += pw;  // leading monic term
    if (!v.is_zero()) return;
    for (const auto& f : found)
      if (f == cand) return;
    found.push_back(cand);
  };

  // Enumerate tuples: one numeric root per embedding.
  std::vector<int> pick(npair, 0);
  int deg = n;
  std::function<void(int)> rec = [&](int level) {
    if (level == npair) {
      std::vector<double> tgt;
      for (int pi = 0; pi < npair; ++pi) {
        tgt.push_back(rootsets[pi][pick[pi]].real());
        tgt.push_back(rootsets[pi][pick[pi]].imag());
      }
      try_candidate(tgt);
      return;
    }
    for (int i = 0; i < deg; ++i) {
      pick[level] = i;
      rec(level + 1);
    }
  };
  if (deg > 0) rec(0);
  return found;
}

}  // namespace detail

struct BasicityResult {
  bool basic = false;
  int block_count = 0;
  std::vector<Tensor> idempotents;  // complete orthogonal primitive set when basic
};

/// Decides whether A is basic: quotient by the radical, require
/// commutativity, then split into one-dimensional blocks by simultaneous
/// eigenspace refinement over the quotient basis elements.  Throws NonSplit
/// (with the offending minimal polynomial) when an eigenvalue lies outside
/// Q(zeta_L).
inline BasicityResult is_basic(const Algebra& A) {
  Subspace J = jacobson_radical(A);
  Algebra Q = quotient_algebra(A, J);
  BasicityResult res;
  // Commutativity of A/J.
  for (int i = 0; i < Q.dim; ++i)
    for (int j = i + 1; j < Q.dim; ++j) {
      Tensor ei(std::vector<int>{Q.dim}), ej(std::vector<int>{Q.dim});
      ei.at({i}) = Cyc::one();
      ej.at({j}) = Cyc::one();
      if (tensor_element_mul(Q, 1, ei, ej) != tensor_element_mul(Q, 1, ej, ei)) return res;
    }

  // Blocks as lists of coordinate vectors in Q.
  std::vector<std::vector<Tensor>> blocks{std::vector<Tensor>{}};
  blocks[0].clear();
  for (int i = 0; i < Q.dim; ++i) blocks[0].push_back(basis_vector(Q.dim, i));

  for (int g = 0; g < Q.dim; ++g) {
    Tensor Lg = left_mult_matrix(Q, basis_vector(Q.dim, g));
    std::vector<std::vector<Tensor>> next;
    for (auto& blk : blocks) {
      int d = (int)blk.size();
      if (d == 1) {
        next.push_back(blk);
        continue;
      }
      // Restrict Lg to the block.
      Subspace span = Subspace::from_vectors(Q.dim, blk);
      std::vector<Tensor> bb = span.basis();
      d = (int)bb.size();
      Tensor M(std::vector<int>{d, d});
      Tensor coords(std::vector<int>{Q.dim, d});
      for (int c = 0; c < d; ++c)
        for (int r = 0; r < Q.dim; ++r) coords.at({r, c}) = bb[c].at({r});
      for (int c = 0; c < d; ++c) {
        Tensor img = bb[c].apply_to_leg(Lg, 0);
        LinearSolution s = solve_linear(coords, img);
        if (!s.feasible()) throw CertificateFailure("block not invariant in is_basic");
        for (int r = 0; r < d; ++r) M.at({r, c}) = (*s.particular).at({r});
      }
      // Minimal polynomial of M by linear dependence of its powers.
      std::vector<Tensor> pows{identity_matrix(d)};
      std::vector<Cyc> minpoly;
      for (int degree = 1; degree <= d; ++degree) {
        pows.push_back(pows.back().apply_to_leg(M, 0));
        Tensor dep(std::vector<int>{d * d, degree});
        for (int c = 0; c < degree; ++c)
          for (int f = 0; f < d * d; ++f) dep.at({f, c}) = pows[c][(size_t)f];
        Tensor rhs(std::vector<int>{d * d});
        for (int f = 0; f < d * d; ++f) rhs.at({f}) = pows[degree][(size_t)f];
        LinearSolution s = solve_linear(dep, rhs);
        if (s.feasible()) {
          for (int c = 0; c < degree; ++c) minpoly.push_back(-(*s.particular).at({c}));
          break;
        }
      }
      if ((int)minpoly.size() <= 1) {
        next.push_back(bb);  // scalar action, no refinement from this element
        continue;
      }
      std::vector<Cyc> roots = detail::roots_in_field(minpoly);
      if ((int)roots.size() < (int)minpoly.size()) {
        std::string poly = "t^" + std::to_string(minpoly.size());
        for (int i = (int)minpoly.size() - 1; i >= 0; --i)
          if (!minpoly[i].is_zero()) poly += " + (" + minpoly[i].str() + ")*t^" + std::to_string(i);
        throw NonSplit(poly);
      }
      for (const auto& lam : roots) {
        // Kernel of (M - lam) inside the block, lifted to Q coordinates.
        Tensor Ml = M;
        for (int i = 0; i < d; ++i) Ml.at({i, i}) -= lam;
        LinearSolution ks = solve_linear(Ml, Tensor(std::vector<int>{d}));
        std::vector<Tensor> piece;
        for (const auto& kv : ks.kernel_basis) {
          Tensor lift(std::vector<int>{Q.dim});
          for (int c = 0; c < d; ++c)
            for (int r = 0; r < Q.dim; ++r) lift.at({r}) += kv.at({c}) * bb[c].at({r});
          piece.push_back(lift);
        }
        if (!piece.empty()) next.push_back(piece);
      }
    }
    blocks = next;
  }

  res.block_count = (int)blocks.size();
  for (const auto& blk : blocks)
    if (blk.size() != 1) return res;  // fully split never leaves fat blocks in the regular rep
  if (res.block_count != Q.dim) return res;

  // Solve for the idempotent acting as identity on its block, zero on others.
  Tensor full(std::vector<int>{Q.dim * Q.dim, Q.dim});
  std::vector<Tensor> targets;
  std::vector<Tensor> reps;
  for (const auto& blk : blocks) reps.push_back(blk[0]);
  for (int col = 0; col < Q.dim; ++col) {
    Tensor e = basis_vector(Q.dim, col);
    for (int b = 0; b < Q.dim; ++b) {
      Tensor prod = tensor_element_mul(Q, 1, e, reps[b]);
      for (int r = 0; r < Q.dim; ++r) full.at({b * Q.dim + r, col}) = prod.at({r});
    }
  }
  Tensor sum_check(std::vector<int>{Q.dim});
  for (int b = 0; b < Q.dim; ++b) {
    Tensor rhs(std::vector<int>{Q.dim * Q.dim});
    for (int r = 0; r < Q.dim; ++r) rhs.at({b * Q.dim + r}) = reps[b].at({r});
    LinearSolution s = solve_linear(full, rhs);
    if (!s.feasible()) return res;
    res.idempotents.push_back(*s.particular);
    sum_check += *s.particular;
  }
  // Certificates: orthogonal idempotents resolving the unit.
  if (sum_check != Q.unit) throw CertificateFailure("idempotents do not resolve the unit");
  for (int i = 0; i < (int)res.idempotents.size(); ++i)
    for (int j = 0; j < (int)res.idempotents.size(); ++j) {
      Tensor p = tensor_element_mul(Q, 1, res.idempotents[i], res.idempotents[j]);
      if (i == j && p != res.idempotents[i]) throw CertificateFailure("idempotent not idempotent");
      if (i != j && !p.is_zero()) throw CertificateFailure("idempotents not orthogonal");
    }
  res.basic = true;
  return res;
}

/// Multiplicativity and unitality of a linear map f: A -> B given by a
/// matrix with dims (dim B, dim A); optionally invertibility.
inline Report verify_algebra_morphism(const Algebra& A, const Algebra& B, const Tensor& f,
                                      bool check_bijective = false) {
  if (f.order() != 2 || f.dim(0) != B.dim || f.dim(1) != A.dim)
    throw ShapeMismatch("morphism matrix must have dims (dim B, dim A)");
  Report rep("morphism " + A.name + " -> " + B.name);
  bool unit_ok = A.unit.apply_to_leg(f, 0) == B.unit;
  rep.add("morph-unit", "unit preserved", unit_ok);
  bool mult_ok = true;
  std::string wit;
  for (int i = 0; i < A.dim && mult_ok; ++i)
    for (int j = 0; j < A.dim && mult_ok; ++j) {
      Tensor ei = basis_vector(A.dim, i), ej = basis_vector(A.dim, j);
      Tensor lhs = tensor_element_mul(A, 1, ei, ej).apply_to_leg(f, 0);
      Tensor rhs = tensor_element_mul(B, 1, ei.apply_to_leg(f, 0), ej.apply_to_leg(f, 0));
      if (lhs != rhs) {
        mult_ok = false;
        wit = "(" + A.basis_labels[i] + "," + A.basis_labels[j] + ")";
      }
    }
  rep.add("morph-mult", "multiplicativity on basis pairs", mult_ok,
          mult_ok ? std::nullopt : std::optional<std::string>(wit));
  if (check_bijective) rep.add("morph-bijective", "matrix invertible", matrix_inverse(f).has_value());
  return rep;
}

}  // namespace qha
