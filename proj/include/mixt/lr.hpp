#pragma once

#include <map>
#include <vector>

#include "mixt/partition.hpp"

namespace mixt {

struct HighestWeight;  // diagram.hpp

// Littlewood-Richardson coefficient c^{lambda}_{mu,nu}, counted by
// backtracking over skew semistandard tableaux of shape lambda/mu with
// content nu whose reverse reading word is a lattice word. Memoized for the
// whole session.
Integer lr_coeff(const Partition& lambda, const Partition& mu,
                 const Partition& nu);

// All nu with c^{lambda}_{mu,nu} != 0, i.e. the expansion of the skew Schur
// function s_{lambda/mu}.
std::map<Partition, Integer> lr_expand_skew(const Partition& lambda,
                                            const Partition& mu);

// Expansion of s_alpha * s_beta.
std::map<Partition, Integer> lr_product(const Partition& alpha,
                                        const Partition& beta);

// Number of semistandard tableaux of shape mu with entries <= d
// (Weyl dimension formula for Gl(d)); 0 when l(mu) > d.
Integer schur_dim(const Partition& mu, int d);

// Weyl dimension of the rational Gl(d) weight wt (weakly decreasing ints).
Integer weyl_dim(const std::vector<int>& wt);

// Schur polynomial s_mu(x_1..x_nvars) as a map exponent-vector -> coefficient.
std::map<std::vector<int>, Integer> schur_polynomial(const Partition& mu,
                                                     int nvars);

// Highest weight of the covariant module S_lambda(k^{m|n}); throws NotHook.
HighestWeight covariant_weight(const Partition& lambda, int m, int n);

// Number of (m|n)-hook semistandard tableaux of shape lambda; 0 iff not hook.
Integer covariant_dim(const Partition& lambda, int m, int n);

}  // namespace mixt
