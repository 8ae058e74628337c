#include "gegwp/bestbasis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "gegwp/errors.hpp"

namespace gegwp {

TreeIndicator::TreeIndicator(int J) : J_(J) {
    if (J < 1 || J > 24) throw InvalidTree("indicator depth out of range");
    flags_.resize(static_cast<size_t>(J) + 1);
    for (int j = 0; j <= J; ++j)
        flags_[static_cast<size_t>(j)].assign(std::size_t{1} << j, 0);
}

void TreeIndicator::or_with(const TreeIndicator& other) {
    if (other.J_ != J_) throw DimensionMismatch("indicator depth mismatch");
    for (int j = 0; j <= J_; ++j)
        for (int p = 0; p < (1 << j); ++p)
            if (other.marked(j, p)) set(j, p);
}

void TreeIndicator::prune_covered() {
    // bottom-up "has marked strict descendant" sweep
    std::vector<std::vector<std::uint8_t>> desc(static_cast<size_t>(J_) + 1);
    for (int j = 0; j <= J_; ++j) desc[static_cast<size_t>(j)].assign(std::size_t{1} << j, 0);
    for (int j = J_ - 1; j >= 0; --j) {
        for (int p = 0; p < (1 << j); ++p) {
            bool d = marked(j + 1, 2 * p) || marked(j + 1, 2 * p + 1) ||
                     desc[static_cast<size_t>(j) + 1][static_cast<size_t>(2 * p)] ||
                     desc[static_cast<size_t>(j) + 1][static_cast<size_t>(2 * p + 1)];
            desc[static_cast<size_t>(j)][static_cast<size_t>(p)] = d ? 1 : 0;
        }
    }
    for (int j = 0; j <= J_; ++j)
        for (int p = 0; p < (1 << j); ++p)
            if (marked(j, p) && desc[static_cast<size_t>(j)][static_cast<size_t>(p)])
                set(j, p, false);
}

WpTree TreeIndicator::to_tree() const {
    std::vector<WpNode> leaves;
    for (int j = 0; j <= J_; ++j)
        for (int p = 0; p < (1 << j); ++p)
            if (marked(j, p)) leaves.push_back({j, p});
    return WpTree(J_, std::move(leaves));
}

namespace {

void check_frequency(const Frequency& nu) {
    if (nu.value < 0.0 || nu.value > 0.5)
        throw InvalidFrequency("frequency outside [0, 1/2]");
}

} // namespace

TreeIndicator indicator_1factor(const Frequency& nu, int J) {
    check_frequency(nu);
    TreeIndicator ind(J);
    // main loop: mark the sibling of every packet whose band contains nu
    for (int j = 1; j <= J; ++j) {
        for (int p = 0; p < (1 << j); p += 2) {
            if (in_dyadic(nu, p, p + 1, j + 1)) ind.set(j, p + 1);
            if (in_dyadic(nu, p + 1, p + 2, j + 1)) ind.set(j, p);
        }
    }
    // completion: the depth-J packet(s) covering nu close the partition
    for (int p = 0; p < (1 << J); ++p)
        if (in_dyadic(nu, p, p + 1, J + 1)) ind.set(J, p);
    ind.prune_covered();
    return ind;
}

WpTree best_basis_1factor(const Frequency& nu, int J) {
    return indicator_1factor(nu, J).to_tree();
}

WpTree best_basis_kfactor(std::span<const Frequency> nus, int J) {
    if (nus.empty()) throw InvalidFrequency("at least one frequency required");
    for (const auto& nu : nus) check_frequency(nu);
    for (std::size_t i = 0; i < nus.size(); ++i)
        for (std::size_t j = i + 1; j < nus.size(); ++j)
            if (std::fabs(nus[i].value - nus[j].value) < 1e-14)
                throw DuplicateFrequency("frequencies must be distinct");
    TreeIndicator acc = indicator_1factor(nus[0], J);
    for (std::size_t i = 1; i < nus.size(); ++i)
        acc.or_with(indicator_1factor(nus[i], J));
    acc.prune_covered();
    return acc.to_tree();
}

namespace {

class CostTable {
public:
    CostTable(const GegenbauerModel& model, int J, const CostSpec& spec, double rel_tol)
        : model_(model), J_(J), spec_(spec), rel_tol_(rel_tol) {}

    double beta2(int j, int p) {
        auto key = std::make_pair(j, p);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, band_pass_variance(model_, j, p, rel_tol_)).first;
        return it->second;
    }

    bool contains_nu(int j, int p) const {
        for (const auto& f : model_.factors())
            if (in_dyadic(f.nu, p, p + 1, j + 1)) return true;
        return false;
    }

    double cost(int j, int p) {
        switch (spec_.kind) {
        case CostKind::threshold_functional: {
            double b = beta2(j, p);
            return b >= spec_.delta ? b : 0.0;
        }
        case CostKind::singularity_indicator:
            return contains_nu(j, p) ? beta2(j, p) : 0.0;
        case CostKind::variance_comparison:
            break;
        }
        return 0.0;
    }

private:
    const GegenbauerModel& model_;
    int J_;
    CostSpec spec_;
    double rel_tol_;
    std::map<std::pair<int, int>, double> cache_;
};

// Eq.-style local rule: split a node when either child's variance is
// dominated by its sibling's, with A0 taken from the sharpest factor.
void variance_split_rec(CostTable& tab, double a0, int j, int p, int J,
                        TreeIndicator& out) {
    if (j == J) {
        out.set(j, p);
        return;
    }
    double l = tab.beta2(j + 1, 2 * p);
    double r = tab.beta2(j + 1, 2 * p + 1);
    bool split = std::min(l, r) <= a0 * std::max(l, r);
    if (!split) {
        out.set(j, p);
        return;
    }
    variance_split_rec(tab, a0, j + 1, 2 * p, J, out);
    variance_split_rec(tab, a0, j + 1, 2 * p + 1, J, out);
}

} // namespace

WpTree cw_best_basis(const GegenbauerModel& model, int J, const CostSpec& cost,
                     double rel_tol) {
    if (cost.kind == CostKind::threshold_functional && !(cost.delta > 0.0))
        throw Error("threshold functional requires delta > 0");
    CostTable tab(model, J, cost, rel_tol);
    TreeIndicator out(J);

    if (cost.kind == CostKind::variance_comparison) {
        double dmax = 0.0;
        for (const auto& f : model.factors()) dmax = std::max(dmax, f.d);
        double a0 = 1.0 / (1.0 + 2.0 * dmax);
        variance_split_rec(tab, a0, 0, 0, J, out);
        return out.to_tree();
    }

    // bottom-up minimization; ties at positive cost resolve toward splitting,
    // which keeps exact additivity (delta -> 0) descending to depth J
    std::vector<std::vector<double>> best(static_cast<size_t>(J) + 1);
    std::vector<std::vector<std::uint8_t>> split(static_cast<size_t>(J) + 1);
    for (int j = 0; j <= J; ++j) {
        best[static_cast<size_t>(j)].assign(std::size_t{1} << j, 0.0);
        split[static_cast<size_t>(j)].assign(std::size_t{1} << j, 0);
    }
    for (int p = 0; p < (1 << J); ++p)
        best[static_cast<size_t>(J)][static_cast<size_t>(p)] = tab.cost(J, p);
    for (int j = J - 1; j >= 0; --j) {
        for (int p = 0; p < (1 << j); ++p) {
            double own = tab.cost(j, p);
            double sum = best[static_cast<size_t>(j) + 1][static_cast<size_t>(2 * p)] +
                         best[static_cast<size_t>(j) + 1][static_cast<size_t>(2 * p + 1)];
            bool take_children = sum < own || (own > 0.0 && sum <= own * (1.0 + 1e-6));
            split[static_cast<size_t>(j)][static_cast<size_t>(p)] = take_children ? 1 : 0;
            best[static_cast<size_t>(j)][static_cast<size_t>(p)] = take_children ? sum : own;
        }
    }
    std::function<void(int, int)> collect = [&](int j, int p) {
        if (j < J && split[static_cast<size_t>(j)][static_cast<size_t>(p)]) {
            collect(j + 1, 2 * p);
            collect(j + 1, 2 * p + 1);
        } else {
            out.set(j, p);
        }
    };
    collect(0, 0);
    return out.to_tree();
}

WpTree whitcher_basis(std::span<const Frequency> nus, const QmfPair& filter, int J,
                      double threshold) {
    if (nus.empty()) throw InvalidFrequency("at least one frequency required");
    for (const auto& nu : nus) check_frequency(nu);
    if (!(threshold > 0.0)) throw Error("threshold must be positive");
    if (filter.family == FilterFamily::battle_lemarie)
        throw BasisNotFound(
            "gain-threshold search finds no valid cover for truncated spline filters");

    // the published procedure evaluates, node by node, the squared gain of
    // that node's own filter cascade at every singular frequency
    TreeIndicator safe(J);
    safe.set(0, 0, 1.0 < threshold);   // empty cascade has unit gain
    for (int j = 1; j <= J; ++j) {
        for (int p = 0; p < (1 << j); ++p) {
            bool ok = true;
            for (const auto& nu : nus) {
                if (!(packet_gain(filter, j, p, nu.value) < threshold)) {
                    ok = false;
                    break;
                }
            }
            safe.set(j, p, ok);
        }
    }

    // shallowest safe cover; the deepest level completes the partition
    TreeIndicator leaves(J);
    std::function<void(int, int)> cover = [&](int j, int p) {
        if (safe.marked(j, p) || j == J) {
            leaves.set(j, p);
            return;
        }
        cover(j + 1, 2 * p);
        cover(j + 1, 2 * p + 1);
    };
    cover(0, 0);
    return leaves.to_tree();
}

int leaf_count(const WpTree& tree) { return tree.leaf_count(); }

} // namespace gegwp
