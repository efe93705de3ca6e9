#pragma once

#include "mixvol/covers.hpp"
#include "mixvol/mixed_volume.hpp"
#include "mixvol/polytope.hpp"
#include "mixvol/rational.hpp"
#include "mixvol/report.hpp"

#include <vector>

namespace mixvol {

// vol(K-K) <= C(2n,n) vol(K); equality iff K is a simplex with interior.
VerificationReport check_rogers_shephard(const VPolytope& k_body, VolumeCache* cache = nullptr);

// V(-K[k], K[n-k]) <= C(n,k) vol(K).
VerificationReport check_godbersen(const VPolytope& k_body, int k, VolumeCache* cache = nullptr);

// vol_{pn}(D_pK) <= C(pn+n, n) vol(K)^p. Witnesses: the k = 0..n terms of
// the binomial expansion, plus a summary report asserting the expansion sums
// back to the lhs exactly.
VerificationReport check_schneider(const VPolytope& k_body, int p, VolumeCache* cache = nullptr,
                                   bool with_witnesses = true);

// V(-Delta_p K[k], K^p[pn-k]) <= C(n,k) vol(K)^p. Witnesses: the
// multinomial expansion into per-(k_1,...,k_p) terms plus its sum check.
VerificationReport check_conjecture1(const VPolytope& k_body, int p, int k,
                                     VolumeCache* cache = nullptr, bool with_witnesses = true);

// V(-Delta_p K[k], i_1 K[n-k_1], ..., i_p K[n-k_p])
//   <= C(n,k) multinomial(k; k_1..k_p) (n!)^p/(pn)! vol(K)^p.
// For anti-blocking bodies, witnesses carry the per-cover closed forms,
// their direct mixed-volume cross-checks, and the cover-sum identity.
VerificationReport check_conjecture2(const VPolytope& k_body, int p, const std::vector<int>& kvec,
                                     VolumeCache* cache = nullptr, bool with_witnesses = true);

// With a zero slot (or k = n after a diagonal/factor swap), the lhs equals
// 1/C(pn,n) * vol(K) times the (p-1)-instance lhs, exactly.
VerificationReport check_conjecture2_reduction(const VPolytope& k_body, int p,
                                               const std::vector<int>& kvec,
                                               VolumeCache* cache = nullptr);

// Dual sections-product lower bound for the symmetrization: claims
// (prod |s_i|!)/(n!)^p * prod 2^{|s_i|} vol(K cap E_{s_i}) <= vol(Khat)^p,
// with equality iff Khat is the hull of its sections over the induced
// 1-uniform cover.
VerificationReport check_dual_bt(const VPolytope& k_body, const UniformCover& cover,
                                 VolumeCache* cache = nullptr);

// vol_{pn}(-Delta_p K + sum_i i_i L_i) equals the sum of the piece volumes
// over all p-uniform covers, exactly; one witness per cover.
VerificationReport check_decomposition(const VPolytope& k_body,
                                       const std::vector<VPolytope>& l_bodies,
                                       VolumeCache* cache = nullptr);

// multinomial(pn; k, n-k_1, ..., n-k_p)^{-1} vol_k(K_{s_0})
//   * prod vol_{n-k_i}(K_{s_i}) for a cover with matching block sizes.
Rational per_cover_closed_form(const VPolytope& k_body, int p, const std::vector<int>& kvec,
                               const UniformCover& cover, VolumeCache* cache = nullptr);

// Scalar c with phi_0 ... phi_p = c vol_n for the mixed-volume valuations of
// the partition (k_0,...,k_p); claims c <= vol(K)^p.
VerificationReport alesker_coefficient(const VPolytope& k_body, int p,
                                       const std::vector<int>& partition,
                                       VolumeCache* cache = nullptr);

}  // namespace mixvol
