#ifndef SDOA_EXTENDED_COVARIANCE_HPP
#define SDOA_EXTENDED_COVARIANCE_HPP

#include "sdoa/covariance_lags.hpp"

namespace sdoa {

// (L2+1) x (L2+1) Hermitian matrix assembled from the averaged lag vectors.
// With c = (L1+1)/2, e = L2+1-c, D(l) the difference entry at lag l and S(l)
// the sum entry at lag l (1-based block indices):
//
//   [ R1  R2  ]   R1[m,n] = D(m-n)             c x c Toeplitz
//   [ R2^H R3 ]   R2[m,n] = S(delta_p+m+n-2)   c x e Hankel, all L2 sum lags
//                 R3[m,n] = D(n-m)             e x e Toeplitz
//
// For a strictly noncircular source the whole matrix is the rank-1 outer
// product of extended_steering below, which is what makes the layout usable
// by a MUSIC-type estimator.
struct ExtendedCovariance {
    Eigen::MatrixXcd matrix;
    int top_size = 0;     // c
    int bottom_size = 0;  // e
    CoarrayProfile profile;
};

ExtendedCovariance build_extended(const LagVectors& lags);

// Rank-1 direction of a strictly noncircular source in the extended model:
// top block exp(-j 2 pi (m-1) (d/lambda) sin theta), m = 1..c, bottom block
// nc_coeff * exp(+j 2 pi (delta_p+n-1) (d/lambda) sin theta), n = 1..e.
// nc_coeff is the conjugate-branch weight: a source whose pseudo covariance
// carries rho e^{j psi} matches nc_coeff = rho e^{-j psi}.
Eigen::VectorXcd extended_steering(double theta_deg, std::complex<double> nc_coeff,
                                   const CoarrayProfile& profile);

// Population-level matrix straight from the closed forms
//   D(l) = sum_k eta_k e^{-j 2 pi l (d/lambda) sin theta_k} + sigma^2 [l = 0]
//   S(l) = sum_k rho_k e^{j psi_k} eta_k e^{-j 2 pi l (d/lambda) sin theta_k}
// with no sampling noise; serves as the analytic oracle for the sampled path.
ExtendedCovariance oracle_extended(const Scenario& scenario,
                                   const CoarrayProfile& profile);

}  // namespace sdoa

#endif
