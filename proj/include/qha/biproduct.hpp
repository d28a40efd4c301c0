#pragma once

#include "qha/yd.hpp"

namespace qha {

struct MissingAntipode : std::runtime_error {
  MissingAntipode() : std::runtime_error("braided antipode required for the Hopf biproduct") {}
};

namespace bip_detail {

/// Basis index of b_i x e_h on the product carrier, b-major.
inline int pair_index(int i, int h, int nH) { return i * nH + h; }

/// Bilinear embedding of (B-element, H-element) into the product carrier.
inline Tensor embed(const Tensor& b, const Tensor& h, int m, int nH) {
  Tensor out(std::vector<int>{m * nH});
  for (int i = 0; i < m; ++i) {
    if (b.at({i}).is_zero()) continue;
    for (int a = 0; a < nH; ++a) {
      if (h.at({a}).is_zero()) continue;
      out.at({pair_index(i, a, nH)}) += b.at({i}) * h.at({a});
    }
  }
  return out;
}

}  // namespace bip_detail

/// Smash product algebra on B x H:
/// (b # h)(b' # h') = (x1 . b)(x2 h_1 . b') # x3 h_2 h'.
inline Algebra smash_product_algebra(const BraidedBialgebra& B, const std::string& name = "") {
  using namespace yd_detail;
  const YDModule& M = B.module;
  const QuasiHopf& H = *M.base;
  Algebra BA = algebra_of(B);
  int m = M.dim, nH = H.qb.alg.dim, d = m * nH;
  Algebra out(name.empty() ? M.name + "#" + H.qb.alg.name : name, d);
  for (int i = 0; i < m; ++i)
    for (int h = 0; h < nH; ++h)
      out.basis_labels[bip_detail::pair_index(i, h, nH)] = M.labels[i] + "#" + H.qb.alg.basis_labels[h];
  out.unit = bip_detail::embed(B.unit, H.qb.alg.unit, m, nH);
  for (int i = 0; i < m; ++i)
    for (int h = 0; h < nH; ++h)
      for (int i2 = 0; i2 < m; ++i2)
        for (int h2 = 0; h2 < nH; ++h2) {
          Tensor acc(std::vector<int>{d});
          Tensor D = hdelta(M, h);
          for_nonzero(D, [&](const std::vector<int>& pq, const Cyc& dd) {
            for_nonzero(H.qb.phi_inv, [&](const std::vector<int>& x, const Cyc& fx) {
              Tensor u = act(M, hbasis(M, x[0]), mbasis(M, i));
              Tensor v = act(M, hmul(M, hbasis(M, x[1]), hbasis(M, pq[0])), mbasis(M, i2));
              Tensor prod = bmul(BA, u, v);
              Tensor hpart = hmul(M, hbasis(M, x[2]), hmul(M, hbasis(M, pq[1]), hbasis(M, h2)));
              acc += bip_detail::embed(prod, hpart, m, nH) * (dd * fx);
            });
          });
          int row = bip_detail::pair_index(i, h, nH), col = bip_detail::pair_index(i2, h2, nH);
          for (int t = 0; t < d; ++t) out.mult.at({row, col, t}) = acc.at({t});
        }
  return out;
}

/// Smash coproduct on B x H, through the shared four-reassociator kernel:
/// the coefficient tensors have the same shapes as a quasi-bialgebra
/// comultiplication/counit on the product carrier.
inline std::pair<Tensor, Tensor> smash_coproduct(const BraidedBialgebra& B) {
  using namespace yd_detail;
  const YDModule& M = B.module;
  const QuasiHopf& H = *M.base;
  int m = M.dim, nH = H.qb.alg.dim, d = m * nH;
  Tensor comult(std::vector<int>{d, d, d});
  Tensor counit(std::vector<int>{d});
  std::vector<Tensor> K = moltcon_kernel(M);
  for (int i = 0; i < m; ++i) {
    Tensor di = bdelta(B, mbasis(M, i));
    for (int h = 0; h < nH; ++h) {
      int src = bip_detail::pair_index(i, h, nH);
      counit.at({src}) = B.counit.at({i}) * H.qb.counit.at({h});
      Tensor D = hdelta(M, h);
      for_nonzero(di, [&](const std::vector<int>& b12, const Cyc& s) {
        for_nonzero(K[b12[1]], [&](const std::vector<int>& kk, const Cyc& kc) {
          // kk = (h1, h2, b0, h3): Delta(b#h) gains
          //   (h1.b1 # h2 h_1) x (b0 # h3 h_2)
          Tensor first_b = act(M, hbasis(M, kk[0]), mbasis(M, b12[0]));
          for_nonzero(D, [&](const std::vector<int>& pq, const Cyc& dd) {
            Tensor first_h = hmul(M, hbasis(M, kk[1]), hbasis(M, pq[0]));
            Tensor second_h = hmul(M, hbasis(M, kk[3]), hbasis(M, pq[1]));
            Cyc coeff = s * kc * dd;
            for (int bi = 0; bi < m; ++bi) {
              if (first_b.at({bi}).is_zero()) continue;
              for (int ha = 0; ha < nH; ++ha) {
                if (first_h.at({ha}).is_zero()) continue;
                for (int hb = 0; hb < nH; ++hb) {
                  if (second_h.at({hb}).is_zero()) continue;
                  comult.at({bip_detail::pair_index(bi, ha, nH),
                             bip_detail::pair_index(kk[2], hb, nH), src}) +=
                      coeff * first_b.at({bi}) * first_h.at({ha}) * second_h.at({hb});
                }
              }
            }
          });
        });
      });
    }
  }
  return {comult, counit};
}

/// Biproduct quasi-bialgebra B x H with the lifted reassociator
/// 1_B x X1 x 1_B x X2 x 1_B x X3; verified at construction.
inline QuasiBialgebra assemble_biproduct(const BraidedBialgebra& B, const std::string& name = "") {
  using namespace yd_detail;
  const YDModule& M = B.module;
  const QuasiHopf& H = *M.base;
  int m = M.dim, nH = H.qb.alg.dim;
  Algebra A = smash_product_algebra(B, name);
  auto [comult, counit] = smash_coproduct(B);
  Tensor phi(std::vector<int>{A.dim, A.dim, A.dim}), phi_inv(std::vector<int>{A.dim, A.dim, A.dim});
  for_nonzero(H.qb.phi, [&](const std::vector<int>& X, const Cyc& f) {
    Tensor t = bip_detail::embed(B.unit, hbasis(M, X[0]), m, nH)
                   .kron(bip_detail::embed(B.unit, hbasis(M, X[1]), m, nH))
                   .kron(bip_detail::embed(B.unit, hbasis(M, X[2]), m, nH));
    phi += t * f;
  });
  for_nonzero(H.qb.phi_inv, [&](const std::vector<int>& X, const Cyc& f) {
    Tensor t = bip_detail::embed(B.unit, hbasis(M, X[0]), m, nH)
                   .kron(bip_detail::embed(B.unit, hbasis(M, X[1]), m, nH))
                   .kron(bip_detail::embed(B.unit, hbasis(M, X[2]), m, nH));
    phi_inv += t * f;
  });
  QuasiBialgebra out = make_quasi_bialgebra(std::move(A), comult, counit, phi, phi_inv);
  Report rep = verify_quasi_bialgebra(out);
  if (!rep.all_pass())
    throw CertificateFailure("biproduct assembly failed verification: " + rep.summary());
  return out;
}

/// Biproduct quasi-Hopf algebra: the quasi-bialgebra above with antipode
/// S(b x h) = (1_B x S(X1 x1_1 b_(-1) h) alpha)(X2 x1_2 . S_B(b_(0)) x X3 x2 beta S(x3))
/// and distinguished elements 1_B x alpha, 1_B x beta; verified at
/// construction.
inline QuasiHopf assemble_biproduct_hopf(const BraidedBialgebra& B, const std::string& name = "") {
  using namespace yd_detail;
  if (!B.antipode) throw MissingAntipode();
  const YDModule& M = B.module;
  const QuasiHopf& H = *M.base;
  int m = M.dim, nH = H.qb.alg.dim;
  QuasiHopf out;
  out.qb = assemble_biproduct(B, name);
  const Algebra& A = out.qb.alg;
  int d = A.dim;
  out.alpha = bip_detail::embed(B.unit, H.alpha, m, nH);
  out.beta = bip_detail::embed(B.unit, H.beta, m, nH);
  out.antipode = Tensor(std::vector<int>{d, d});
  auto helem = [&](int i) { return hbasis(M, i); };
  for (int i = 0; i < m; ++i)
    for (int h = 0; h < nH; ++h) {
      Tensor acc(std::vector<int>{d});
      Tensor Ci = coact(M, mbasis(M, i));
      for_nonzero(H.qb.phi, [&](const std::vector<int>& X, const Cyc& fX) {
        for_nonzero(H.qb.phi_inv, [&](const std::vector<int>& x, const Cyc& fx) {
          Tensor Dx1 = hdelta(M, x[0]);
          for_nonzero(Dx1, [&](const std::vector<int>& x1s, const Cyc& dx) {
            for_nonzero(Ci, [&](const std::vector<int>& ci, const Cyc& cc) {
              // 1_B x S(X1 x1_1 b_(-1) h) alpha
              Tensor h1 = hmul(M, helem(X[0]), helem(x1s[0]));
              h1 = hmul(M, h1, helem(ci[0]));
              h1 = hmul(M, h1, helem(h));
              h1 = tensor_element_mul(H.qb.alg, 1, h1.apply_to_leg(H.antipode, 0), H.alpha);
              Tensor first = bip_detail::embed(B.unit, h1, m, nH);
              // X2 x1_2 . S_B(b_(0)) x X3 x2 beta S(x3)
              Tensor sb = mbasis(M, ci[1]).apply_to_leg(*B.antipode, 0);
              Tensor w = act(M, hmul(M, helem(X[1]), helem(x1s[1])), sb);
              Tensor h2 = chain_product(H.qb.alg, {helem(X[2]), helem(x[1]), H.beta,
                                                   helem(x[2]).apply_to_leg(H.antipode, 0)});
              Tensor second = bip_detail::embed(w, h2, m, nH);
              acc += tensor_element_mul(A, 1, first, second) * (fX * fx * dx * cc);
            });
          });
        });
      });
      int src = bip_detail::pair_index(i, h, nH);
      for (int t = 0; t < d; ++t) out.antipode.at({t, src}) = acc.at({t});
    }
  Report rep = verify_quasi_hopf(out);
  if (!rep.all_pass())
    throw CertificateFailure("biproduct Hopf assembly failed verification: " + rep.summary());
  return out;
}

}  // namespace qha
