#pragma once

#include <functional>
#include <map>
#include <memory>

#include "qha/biproduct.hpp"
#include "qha/cocycle.hpp"
#include "qha/yd.hpp"

namespace qha::catalog {

// --- the two order-two bases ---------------------------------------------------

/// k[C2] as an ordinary Hopf algebra (trivial reassociator, identity
/// antipode, alpha = beta = 1).
inline QuasiHopf kc2_hopf() {
  Algebra A = group_algebra(GroupTable::cyclic(2), "kC2");
  int n = 2;
  Tensor comult(std::vector<int>{n, n, n});
  comult.at({0, 0, 0}) = Cyc::one();
  comult.at({1, 1, 1}) = Cyc::one();
  Tensor counit(std::vector<int>{n});
  counit.at({0}) = Cyc::one();
  counit.at({1}) = Cyc::one();
  QuasiBialgebra qb = make_quasi_bialgebra(A, comult, counit, unit_tensor(A, 3), unit_tensor(A, 3));
  QuasiHopf H;
  H.qb = std::move(qb);
  H.antipode = identity_matrix(2);
  H.alpha = H.qb.alg.unit;
  H.beta = H.qb.alg.unit;
  return H;
}

/// The quasi-Hopf structure on k[C2]: reassociator 1 - 2 p- x p- x p-,
/// identity antipode, alpha = g, beta = 1.
inline QuasiHopf h2() {
  QuasiHopf H = kc2_hopf();
  H.qb.alg.name = "H2";
  Tensor p(std::vector<int>{2});
  p.at({0}) = Cyc(1, 2);
  p.at({1}) = Cyc(-1, 2);
  Tensor phi = unit_tensor(H.qb.alg, 3) - p.kron(p).kron(p) * Cyc(2);
  H.qb.phi = phi;
  H.qb.phi_inv = phi;  // self-inverse; certified below
  Tensor unit3 = unit_tensor(H.qb.alg, 3);
  if (tensor_element_mul(H.qb.alg, 3, phi, phi) != unit3)
    throw CertificateFailure("order-two reassociator is not self-inverse");
  H.alpha = basis_vector(2, 1);
  return H;
}

inline std::shared_ptr<const QuasiHopf> kc2_base() {
  static auto p = std::make_shared<const QuasiHopf>(kc2_hopf());
  return p;
}
inline std::shared_ptr<const QuasiHopf> h2_base() {
  static auto p = std::make_shared<const QuasiHopf>(h2());
  return p;
}

// --- simple Yetter-Drinfeld modules ----------------------------------------------

/// M_k over the quasi-Hopf base: one-dimensional, g acts by (-1)^k, the
/// coaction is (p+ + i^k p-) x m with i the fourth root of unity.
inline YDModule simple_over_h2(int k) {
  YDModule M;
  M.base = h2_base();
  M.name = "M" + std::to_string(((k % 4) + 4) % 4);
  M.dim = 1;
  M.labels = {"m"};
  M.action = Tensor(std::vector<int>{2, 1, 1});
  M.coaction = Tensor(std::vector<int>{2, 1, 1});
  M.action.at({0, 0, 0}) = Cyc::one();
  M.action.at({1, 0, 0}) = k % 2 == 0 ? Cyc::one() : Cyc(-1);
  Cyc q = Cyc::root_of_unity(4, k);
  M.coaction.at({0, 0, 0}) = (Cyc::one() + q) * Cyc(1, 2);  // coefficient of 1
  M.coaction.at({1, 0, 0}) = (Cyc::one() - q) * Cyc(1, 2);  // coefficient of g
  return M;
}

/// M[i,j] over the Hopf base: g acts by (-1)^j, coaction g^i x m.
inline YDModule simple_over_kc2(int i, int j) {
  YDModule M;
  M.base = kc2_base();
  M.name = "M[" + std::to_string(i) + "," + std::to_string(j) + "]";
  M.dim = 1;
  M.labels = {"m"};
  M.action = Tensor(std::vector<int>{2, 1, 1});
  M.coaction = Tensor(std::vector<int>{2, 1, 1});
  M.action.at({0, 0, 0}) = Cyc::one();
  M.action.at({1, 0, 0}) = j % 2 == 0 ? Cyc::one() : Cyc(-1);
  M.coaction.at({i % 2, 0, 0}) = Cyc::one();
  return M;
}

// --- rank-3 braided Hopf algebras --------------------------------------------------

namespace fixture_detail {

/// Carrier k[C3] = span{1, x, x^2} with a choice of action/coaction.
inline YDModule c3_module(std::shared_ptr<const QuasiHopf> base, const std::string& name, bool twist_action,
                          bool star_coaction) {
  YDModule M;
  M.base = std::move(base);
  M.name = name;
  M.dim = 3;
  M.labels = {"1", "x", "x2"};
  M.action = Tensor(std::vector<int>{2, 3, 3});
  M.coaction = Tensor(std::vector<int>{2, 3, 3});
  for (int i = 0; i < 3; ++i) {
    M.action.at({0, i, i}) = Cyc::one();
    int gi = twist_action ? (2 * i) % 3 : i;
    M.action.at({1, gi, i}) = Cyc::one();
    if (star_coaction) {
      // p+ x x^i + p- x x^(2i)'
      int ti = (2 * i) % 3;
      M.coaction.at({0, i, i}) += Cyc(1, 2);
      M.coaction.at({1, i, i}) += Cyc(1, 2);
      M.coaction.at({0, ti, i}) += Cyc(1, 2);
      M.coaction.at({1, ti, i}) -= Cyc(1, 2);
    } else {
      M.coaction.at({0, i, i}) = Cyc::one();
    }
  }
  return M;
}

inline BraidedBialgebra c3_group_bialgebra(YDModule M) {
  BraidedBialgebra B;
  B.module = std::move(M);
  B.unit = basis_vector(3, 0);
  B.mult = Tensor(std::vector<int>{3, 3, 3});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) B.mult.at({i, j, (i + j) % 3}) = Cyc::one();
  B.comult = Tensor(std::vector<int>{3, 3, 3});
  for (int i = 0; i < 3; ++i) B.comult.at({i, i, i}) = Cyc::one();
  B.counit = Tensor(std::vector<int>{3});
  for (int i = 0; i < 3; ++i) B.counit.at({i}) = Cyc::one();
  Tensor S(std::vector<int>{3, 3});
  for (int i = 0; i < 3; ++i) S.at({(3 - i) % 3, i}) = Cyc::one();
  B.antipode = S;
  return B;
}

}  // namespace fixture_detail

/// The three rank-3 braided Hopf algebras over the order-two Hopf base:
/// trivial structure, the action-twisted copy, and the coaction-twisted
/// copy.  Over the quasi-Hopf base only the first and third are Hopf.
inline BraidedBialgebra b_c6(std::shared_ptr<const QuasiHopf> base) {
  return fixture_detail::c3_group_bialgebra(fixture_detail::c3_module(std::move(base), "B_C6", false, false));
}
inline BraidedBialgebra b_s3(std::shared_ptr<const QuasiHopf> base) {
  return fixture_detail::c3_group_bialgebra(fixture_detail::c3_module(std::move(base), "B_S3", true, false));
}
inline BraidedBialgebra b_star(std::shared_ptr<const QuasiHopf> base) {
  return fixture_detail::c3_group_bialgebra(fixture_detail::c3_module(std::move(base), "B_star", false, true));
}

// --- rank-3 Yetter-Drinfeld algebras over the quasi-Hopf base ----------------------

namespace fixture_detail {

/// Module 1 + x-line + y-line over the quasi-Hopf base; the x-line is M_{2i}
/// (i = 0 or 1), the y-line is M_{2j+1}.
inline YDModule oddline_module(const std::string& name, int i, int j) {
  YDModule M;
  M.base = h2_base();
  M.name = name;
  M.dim = 3;
  M.labels = {"1", "x", "y"};
  M.action = Tensor(std::vector<int>{2, 3, 3});
  M.coaction = Tensor(std::vector<int>{2, 3, 3});
  auto line = [&](int idx, int k) {  // copy of M_k on basis line idx
    M.action.at({0, idx, idx}) = Cyc::one();
    M.action.at({1, idx, idx}) = k % 2 == 0 ? Cyc::one() : Cyc(-1);
    Cyc q = Cyc::root_of_unity(4, k);
    M.coaction.at({0, idx, idx}) = (Cyc::one() + q) * Cyc(1, 2);
    M.coaction.at({1, idx, idx}) = (Cyc::one() - q) * Cyc(1, 2);
  };
  line(0, 0);
  line(1, 2 * i);
  line(2, 2 * j + 1);
  return M;
}

inline BraidedBialgebra oddline_algebra(const std::string& name, int i, int j,
                                        const std::function<void(Tensor&)>& fill_mult) {
  BraidedBialgebra B;
  B.module = oddline_module(name, i, j);
  B.unit = basis_vector(3, 0);
  B.mult = Tensor(std::vector<int>{3, 3, 3});
  for (int t = 0; t < 3; ++t) {
    B.mult.at({0, t, t}) = Cyc::one();
    if (t != 0) B.mult.at({t, 0, t}) = Cyc::one();
  }
  fill_mult(B.mult);
  B.comult = Tensor(std::vector<int>{3, 3, 3});
  B.counit = Tensor(std::vector<int>{3});
  return B;
}

}  // namespace fixture_detail

/// The five rank-3 Yetter-Drinfeld algebras on 1, x, y with the y-line of
/// type M_{2j+1}.  Names follow the x-line type and the (x^2, y^2) data.
inline BraidedBialgebra yd_algebra_fixture(const std::string& which, int j) {
  using fixture_detail::oddline_algebra;
  if (which == "B_2o_00")  // x-line M_2; all products of x, y vanish
    return oddline_algebra("B_2o_00[j=" + std::to_string(j) + "]", 1, j, [](Tensor&) {});
  if (which == "B_0o_10")  // x^2 = 1, y^2 = 0, xy = y, yx = -y
    return oddline_algebra("B_0o_10[j=" + std::to_string(j) + "]", 0, j, [](Tensor& m) {
      m.at({1, 1, 0}) = Cyc::one();
      m.at({1, 2, 2}) = Cyc::one();
      m.at({2, 1, 2}) = Cyc(-1);
    });
  if (which == "B_0o_0")  // x^2 = 0, y^2 = x, xy = yx = 0
    return oddline_algebra("B_0o_0[j=" + std::to_string(j) + "]", 0, j,
                           [](Tensor& m) { m.at({2, 2, 1}) = Cyc::one(); });
  if (which == "B_0o_00")  // all products of x, y vanish (x-line M_0)
    return oddline_algebra("B_0o_00[j=" + std::to_string(j) + "]", 0, j, [](Tensor&) {});
  if (which == "B_0o_10c")  // x^2 = 1, y^2 = 0, xy = yx = y
    return oddline_algebra("B_0o_10c[j=" + std::to_string(j) + "]", 0, j, [](Tensor& m) {
      m.at({1, 1, 0}) = Cyc::one();
      m.at({1, 2, 2}) = Cyc::one();
      m.at({2, 1, 2}) = Cyc::one();
    });
  throw std::invalid_argument("unknown yd algebra fixture " + which);
}

/// The printed form of the all-vanishing fixture on the M_0 + M_0 + M_{2j+1}
/// grading carries xy = yx = y; that contradicts even plain associativity
/// ((xx)y = 0 vs x(xy) = y) and the verifier rejects it.  Kept for the
/// pinned negative test; the corrected entry has xy = yx = 0.
inline BraidedBialgebra yd_algebra_b0o00_printed(int j) {
  return fixture_detail::oddline_algebra("B_0o_00-printed[j=" + std::to_string(j) + "]", 0, j,
                                         [](Tensor& m) {
                                           m.at({1, 2, 2}) = Cyc::one();
                                           m.at({2, 1, 2}) = Cyc::one();
                                         });
}

/// The three braided bialgebras on the x^2 = 1 fixtures.
inline BraidedBialgebra braided_bialgebra_fixture(const std::string& which, int j) {
  BraidedBialgebra B;
  Cyc h(1, 2);
  if (which == "bb_i") {
    B = yd_algebra_fixture("B_0o_10", j);
    B.module.name = "bb_i[j=" + std::to_string(j) + "]";
    // Delta(x) = -1/2 (1x1 - 1xx - xx1 - xxx), eps(x) = 1
    B.comult.at({0, 0, 0}) = Cyc::one();
    B.comult.at({0, 0, 1}) = -h;
    B.comult.at({0, 1, 1}) = h;
    B.comult.at({1, 0, 1}) = h;
    B.comult.at({1, 1, 1}) = h;
    // Delta(y) = 1/2 (1xy + yx1 + xxy + yxx), eps(y) = 0
    B.comult.at({0, 2, 2}) = h;
    B.comult.at({2, 0, 2}) = h;
    B.comult.at({1, 2, 2}) = h;
    B.comult.at({2, 1, 2}) = h;
    B.counit.at({0}) = Cyc::one();
    B.counit.at({1}) = Cyc::one();
    return B;
  }
  if (which == "bb_ii" || which == "bb_iii") {
    B = yd_algebra_fixture(which == "bb_ii" ? "B_0o_10" : "B_0o_10c", j);
    B.module.name = which + "[j=" + std::to_string(j) + "]";
    // Delta(x) = 1/2 (1x1 + 1xx + xx1 - xxx), eps(x) = -1
    B.comult.at({0, 0, 1}) = h;
    B.comult.at({0, 1, 1}) = h;
    B.comult.at({1, 0, 1}) = h;
    B.comult.at({1, 1, 1}) = -h;
    B.comult.at({0, 0, 0}) = Cyc::one();
    // Delta(y) = 1/2 (1xy + yx1 - xxy - yxx), eps(y) = 0
    B.comult.at({0, 2, 2}) = h;
    B.comult.at({2, 0, 2}) = h;
    B.comult.at({1, 2, 2}) = -h;
    B.comult.at({2, 1, 2}) = -h;
    B.counit.at({0}) = Cyc::one();
    B.counit.at({1}) = Cyc(-1);
    return B;
  }
  throw std::invalid_argument("unknown braided bialgebra fixture " + which);
}

/// The idempotent-basis copies of the three braided bialgebras: basis
/// {1, xb, y} with xb = (1 + x)/2 for the first and xb = (1 - x)/2 for the
/// other two; xb is grouplike, y is xb-primitive.
inline BraidedBialgebra remark_bialgebra(const std::string& which, int j) {
  BraidedBialgebra B;
  B.module = fixture_detail::oddline_module(which + "[j=" + std::to_string(j) + "]", 0, j);
  B.module.labels = {"1", "xb", "y"};
  B.unit = basis_vector(3, 0);
  B.mult = Tensor(std::vector<int>{3, 3, 3});
  for (int t = 0; t < 3; ++t) {
    B.mult.at({0, t, t}) = Cyc::one();
    if (t != 0) B.mult.at({t, 0, t}) = Cyc::one();
  }
  B.mult.at({1, 1, 1}) = Cyc::one();  // xb idempotent
  if (which == "Bu") {                // xb y = y, y xb = 0
    B.mult.at({1, 2, 2}) = Cyc::one();
  } else if (which == "Buu") {  // xb y = 0, y xb = y
    B.mult.at({2, 1, 2}) = Cyc::one();
  } else if (which != "Buu_c") {
    throw std::invalid_argument("unknown remark fixture " + which);
  }
  B.comult = Tensor(std::vector<int>{3, 3, 3});
  B.comult.at({0, 0, 0}) = Cyc::one();
  B.comult.at({1, 1, 1}) = Cyc::one();          // xb grouplike
  B.comult.at({1, 2, 2}) = Cyc::one();          // Delta(y) = xb x y + y x xb
  B.comult.at({2, 1, 2}) = Cyc::one();
  B.counit = Tensor(std::vector<int>{3});
  B.counit.at({0}) = Cyc::one();
  B.counit.at({1}) = Cyc::one();
  return B;
}

}  // namespace qha::catalog
