#pragma once

#include <vector>

#include <Eigen/Dense>

namespace lingo {

/// Thin SVD restricted to the numerical rank r.
struct SvdFactors {
    Eigen::MatrixXd u;     // t x r
    Eigen::VectorXd sigma; // r, nonincreasing, positive
    Eigen::MatrixXd v;     // d x r
    int rank = 0;
};

struct TruncationChoice {
    int k = 0;
    double quality = 0.0;
};

inline constexpr double kRankTolerance = 1e-10;

/// Singular values below kRankTolerance * sigma_1 are dropped. The first
/// nonzero entry of every U column is made positive (V flipped to match).
SvdFactors svd(const Eigen::MatrixXd& a);

// (sigma_1 + ... + sigma_k) / (sigma_1 + ... + sigma_r); exactly 1 at k = r.
double truncation_quality(const SvdFactors& f, int k);

// U_k Sigma_k V_k^T.
Eigen::MatrixXd reconstruct_rank_k(const SvdFactors& f, int k);

// Sigma_k^-1 U_k^T q.
Eigen::VectorXd fold_document(const SvdFactors& f, int k, const Eigen::VectorXd& q);

// 0 if either vector has zero norm.
double cosine_similarity(const Eigen::Ref<const Eigen::VectorXd>& x, const Eigen::Ref<const Eigen::VectorXd>& y);

} // namespace lingo
