#ifndef GEGWP_WPT_HPP
#define GEGWP_WPT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gegwp/filters.hpp"

namespace gegwp {

/// Node (j,p) of the packet binary tree; p is sequency-ordered so the
/// nominal band is I_j^p = [p/2^(j+1), (p+1)/2^(j+1)].
struct WpNode {
    int j = 0;
    int p = 0;
    friend bool operator==(const WpNode&, const WpNode&) = default;
};

/// Lower band edge of (j,p) in units of 2^-(J+1).
inline std::int64_t band_lo_units(WpNode n, int J) {
    return static_cast<std::int64_t>(n.p) << (J - n.j);
}

/// A binary packet tree given by its leaf set.  Leaves must tile [0, 1/2]
/// disjointly (equivalently: pairwise non-ancestral and sum 2^-j = 1);
/// construction validates this and orders leaves by band lower edge.
class WpTree {
public:
    WpTree(int J, std::vector<WpNode> leaves);

    static WpTree root_only(int J);
    static WpTree uniform(int J, int depth);

    int max_depth() const { return J_; }
    const std::vector<WpNode>& leaves() const { return leaves_; }
    int leaf_count() const { return static_cast<int>(leaves_.size()); }

    friend bool operator==(const WpTree& a, const WpTree& b) {
        return a.J_ == b.J_ && a.leaves_ == b.leaves_;
    }

private:
    int J_;
    std::vector<WpNode> leaves_;
};

/// Packet coefficients of a length-2^J series: one vector of length 2^(J-j)
/// per leaf, stored in the tree's leaf order.
struct WpCoefficients {
    WpTree tree;
    std::vector<std::vector<double>> packets;

    std::size_t total_size() const;
};

/// Forward periodic DWPT onto the given tree: recursive circular
/// filter-and-downsample with the low/high assignment Gray-code-swapped so
/// packet index p is sequency-ordered.  Energy preserving.
WpCoefficients analyze(std::span<const double> signal, const WpTree& tree,
                       const QmfPair& filter);

/// Adjoint (= inverse) periodic filter bank.
std::vector<double> synthesize(const WpCoefficients& coeffs, const QmfPair& filter);

/// N x N matrix whose columns are the discrete basis vectors, column k being
/// synthesize of the unit coefficient vector e_k in canonical order (leaves
/// by band lower edge, positions ascending within a leaf).
Eigen::MatrixXd transform_matrix(const WpTree& tree, const QmfPair& filter, int N);

/// Sequency -> natural (Paley) packet index map at depth j: p ^ (p >> 1).
std::vector<int> gray_permutation(int j);

/// {"J": j, "leaves": [[j,p], ...]} with leaves sorted by band lower edge.
std::string tree_to_json(const WpTree& tree);
WpTree tree_from_json(std::string_view text);

} // namespace gegwp

#endif
