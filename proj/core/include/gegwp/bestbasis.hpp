#ifndef GEGWP_BESTBASIS_HPP
#define GEGWP_BESTBASIS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "gegwp/filters.hpp"
#include "gegwp/frequency.hpp"
#include "gegwp/gegenbauer.hpp"
#include "gegwp/wpt.hpp"

namespace gegwp {

/// Binary marks Tree(j,p) over the full packet table, j = 0..J.
class TreeIndicator {
public:
    explicit TreeIndicator(int J);

    int J() const { return J_; }
    bool marked(int j, int p) const { return flags_[static_cast<size_t>(j)][static_cast<size_t>(p)] != 0; }
    void set(int j, int p, bool v = true) { flags_[static_cast<size_t>(j)][static_cast<size_t>(p)] = v ? 1 : 0; }
    void or_with(const TreeIndicator& other);

    /// Unmarks every marked node that has a marked strict descendant.
    void prune_covered();

    /// Collects marked nodes as leaves; throws InvalidTree if they do not
    /// form a disjoint complete tiling.
    WpTree to_tree() const;

private:
    int J_;
    std::vector<std::vector<std::uint8_t>> flags_;
};

/// Marks produced by the 1-factor search: at every depth, the sibling of the
/// packet whose closed band contains nu, plus the depth-J packet(s) covering
/// nu so the leaves tile [0, 1/2].  Boundary frequencies (nu on a dyadic
/// edge) trigger both flanking packets.
TreeIndicator indicator_1factor(const Frequency& nu, int J);

/// Singularity-driven basis for one factor.  The result depends only on nu
/// and J, never on a wavelet or memory parameter.
WpTree best_basis_1factor(const Frequency& nu, int J);

/// k-factor basis: logical OR of the per-factor indicators followed by the
/// covered-ancestor pruning.
WpTree best_basis_kfactor(std::span<const Frequency> nus, int J);

enum class CostKind {
    variance_comparison,     // split when one child's variance dominates
    threshold_functional,    // E[W] = beta^2 * 1(beta^2 >= delta)
    singularity_indicator,   // E[W] = beta^2 * 1(some nu_l in I_j^p)
};

struct CostSpec {
    CostKind kind = CostKind::singularity_indicator;
    double delta = 0.0;      // threshold_functional only, must be > 0
};

/// Bottom-up best-basis sweep driven by band-pass variances under the given
/// cost.  With the singularity indicator cost the result equals
/// best_basis_kfactor on the model's frequencies.
WpTree cw_best_basis(const GegenbauerModel& model, int J, const CostSpec& cost,
                     double rel_tol = 1e-8);

/// Gain-threshold construction: a node is safe when the cascade squared gain
/// of its filter path is below `threshold` at every nu; the basis is the
/// shallowest safe cover, descending to depth J elsewhere (deepest-level
/// packets complete the partition).  Not defined for the truncated spline
/// family, which has no workable threshold; throws BasisNotFound there.
WpTree whitcher_basis(std::span<const Frequency> nus, const QmfPair& filter, int J,
                      double threshold = 0.01);

int leaf_count(const WpTree& tree);

} // namespace gegwp

#endif
