#include "lingo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lingo/error.hpp"

namespace lingo {

SvdFactors svd(const Eigen::MatrixXd& a)
{
    if (a.size() == 0) {
        throw Error("svd: empty matrix");
    }
    if (!a.allFinite()) {
        throw Error("svd: matrix has non-finite entries");
    }
    Eigen::JacobiSVD<Eigen::MatrixXd, Eigen::ColPivHouseholderQRPreconditioner> solver(
        a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& s = solver.singularValues();

    int rank = 0;
    if (s.size() > 0 && s(0) > 0.0) {
        const double cutoff = kRankTolerance * s(0);
        while (rank < s.size() && s(rank) > cutoff) {
            ++rank;
        }
    }

    SvdFactors f;
    f.rank = rank;
    f.sigma = s.head(rank);
    f.u = solver.matrixU().leftCols(rank);
    f.v = solver.matrixV().leftCols(rank);
    for (int c = 0; c < rank; ++c) {
        for (Eigen::Index i = 0; i < f.u.rows(); ++i) {
            const double x = f.u(i, c);
            if (std::abs(x) > 1e-12) {
                if (x < 0.0) {
                    f.u.col(c) *= -1.0;
                    f.v.col(c) *= -1.0;
                }
                break;
            }
        }
    }
    return f;
}

namespace {

void check_k(const SvdFactors& f, int k)
{
    if (k < 1 || k > f.rank) {
        throw Error("rank k=" + std::to_string(k) + " outside [1," + std::to_string(f.rank) + "]");
    }
}

} // namespace

double truncation_quality(const SvdFactors& f, int k)
{
    check_k(f, k);
    double head = 0.0;
    double total = 0.0;
    for (int i = 0; i < f.rank; ++i) {
        total += f.sigma(i);
        if (i + 1 == k) {
            head = total;
        }
    }
    return head / total;
}

Eigen::MatrixXd reconstruct_rank_k(const SvdFactors& f, int k)
{
    check_k(f, k);
    return f.u.leftCols(k) * f.sigma.head(k).asDiagonal() * f.v.leftCols(k).transpose();
}

Eigen::VectorXd fold_document(const SvdFactors& f, int k, const Eigen::VectorXd& q)
{
    check_k(f, k);
    if (q.size() != f.u.rows()) {
        throw Error("fold_document: vector length " + std::to_string(q.size()) + " != " +
                    std::to_string(f.u.rows()));
    }
    return (f.u.leftCols(k).transpose() * q).cwiseQuotient(f.sigma.head(k));
}

double cosine_similarity(const Eigen::Ref<const Eigen::VectorXd>& x, const Eigen::Ref<const Eigen::VectorXd>& y)
{
    if (x.size() != y.size()) {
        throw Error("cosine_similarity: length mismatch " + std::to_string(x.size()) + " vs " +
                    std::to_string(y.size()));
    }
    const double nx = x.norm();
    const double ny = y.norm();
    if (nx == 0.0 || ny == 0.0) {
        return 0.0;
    }
    return std::clamp(x.dot(y) / (nx * ny), -1.0, 1.0);
}

} // namespace lingo
