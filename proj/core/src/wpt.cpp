#include "gegwp/wpt.hpp"

#include <algorithm>
#include <cmath>

#include "gegwp/errors.hpp"

namespace gegwp {

WpTree::WpTree(int J, std::vector<WpNode> leaves) : J_(J), leaves_(std::move(leaves)) {
    if (J < 0 || J > 30) throw InvalidTree("depth J out of range");
    if (leaves_.empty()) throw InvalidTree("empty leaf set");
    for (const auto& n : leaves_) {
        if (n.j < 0 || n.j > J_) throw InvalidTree("leaf depth out of range");
        if (n.p < 0 || n.p >= (1 << n.j)) throw InvalidTree("leaf index out of range");
    }
    std::sort(leaves_.begin(), leaves_.end(), [&](const WpNode& a, const WpNode& b) {
        return band_lo_units(a, J_) < band_lo_units(b, J_);
    });
    // contiguous tiling of [0, 2^J] in units of 2^-(J+1) implies disjointness,
    // completeness and that no leaf is an ancestor of another
    std::int64_t cursor = 0;
    for (const auto& n : leaves_) {
        if (band_lo_units(n, J_) != cursor)
            throw InvalidTree("leaves do not tile [0, 1/2]");
        cursor += std::int64_t{1} << (J_ - n.j);
    }
    if (cursor != (std::int64_t{1} << J_))
        throw InvalidTree("leaves do not tile [0, 1/2]");
}

WpTree WpTree::root_only(int J) { return WpTree(J, {WpNode{0, 0}}); }

WpTree WpTree::uniform(int J, int depth) {
    std::vector<WpNode> ls;
    for (int p = 0; p < (1 << depth); ++p) ls.push_back({depth, p});
    return WpTree(J, std::move(ls));
}

std::size_t WpCoefficients::total_size() const {
    std::size_t n = 0;
    for (const auto& v : packets) n += v.size();
    return n;
}

namespace {

// One analysis stage: circular correlation with the taps, keeping even phase.
// out[m] = sum_n c(n) x((2m + n) mod len)
std::vector<double> filter_down(std::span<const double> x, std::span<const double> c,
                                int lo) {
    const int len = static_cast<int>(x.size());
    const int half = len / 2;
    std::vector<double> out(static_cast<size_t>(half), 0.0);
    for (int m = 0; m < half; ++m) {
        double acc = 0.0;
        for (int i = 0; i < static_cast<int>(c.size()); ++i) {
            int idx = (2 * m + lo + i) % len;
            if (idx < 0) idx += len;
            acc += c[static_cast<size_t>(i)] * x[static_cast<size_t>(idx)];
        }
        out[static_cast<size_t>(m)] = acc;
    }
    return out;
}

// Adjoint of filter_down: x((2m + n) mod len) += c(n) y(m)
void filter_up_add(std::span<double> x, std::span<const double> y,
                   std::span<const double> c, int lo) {
    const int len = static_cast<int>(x.size());
    for (int m = 0; m < static_cast<int>(y.size()); ++m) {
        double v = y[static_cast<size_t>(m)];
        for (int i = 0; i < static_cast<int>(c.size()); ++i) {
            int idx = (2 * m + lo + i) % len;
            if (idx < 0) idx += len;
            x[static_cast<size_t>(idx)] += c[static_cast<size_t>(i)] * v;
        }
    }
}

struct LeafSlot {
    WpNode node;
    std::size_t index;
};

void analyze_rec(const WpNode node, std::vector<double> vec, const QmfPair& f,
                 const std::vector<LeafSlot>& slots, std::vector<std::vector<double>>& out) {
    auto it = std::find_if(slots.begin(), slots.end(),
                           [&](const LeafSlot& s) { return s.node == node; });
    if (it != slots.end()) {
        out[it->index] = std::move(vec);
        return;
    }
    auto low = filter_down(vec, f.h, f.n1);
    auto high = filter_down(vec, f.g, f.g_lo());
    // sequency ordering: children of an odd-index packet swap low/high
    if (node.p % 2 == 0) {
        analyze_rec({node.j + 1, 2 * node.p}, std::move(low), f, slots, out);
        analyze_rec({node.j + 1, 2 * node.p + 1}, std::move(high), f, slots, out);
    } else {
        analyze_rec({node.j + 1, 2 * node.p}, std::move(high), f, slots, out);
        analyze_rec({node.j + 1, 2 * node.p + 1}, std::move(low), f, slots, out);
    }
}

std::vector<double> synthesize_rec(const WpNode node, int J, const QmfPair& f,
                                   const std::vector<LeafSlot>& slots,
                                   const std::vector<std::vector<double>>& packets) {
    auto it = std::find_if(slots.begin(), slots.end(),
                           [&](const LeafSlot& s) { return s.node == node; });
    if (it != slots.end()) return packets[it->index];
    auto a = synthesize_rec({node.j + 1, 2 * node.p}, J, f, slots, packets);
    auto b = synthesize_rec({node.j + 1, 2 * node.p + 1}, J, f, slots, packets);
    const auto& low = node.p % 2 == 0 ? a : b;
    const auto& high = node.p % 2 == 0 ? b : a;
    std::vector<double> x(static_cast<size_t>(2) * low.size(), 0.0);
    filter_up_add(x, low, f.h, f.n1);
    filter_up_add(x, high, f.g, f.g_lo());
    return x;
}

std::vector<LeafSlot> leaf_slots(const WpTree& tree) {
    std::vector<LeafSlot> slots;
    slots.reserve(tree.leaves().size());
    for (std::size_t i = 0; i < tree.leaves().size(); ++i)
        slots.push_back({tree.leaves()[i], i});
    return slots;
}

} // namespace

WpCoefficients analyze(std::span<const double> signal, const WpTree& tree,
                       const QmfPair& filter) {
    const int J = tree.max_depth();
    if (static_cast<std::int64_t>(signal.size()) != (std::int64_t{1} << J))
        throw LengthMismatch("signal length " + std::to_string(signal.size()) +
                             " does not match 2^" + std::to_string(J));
    auto slots = leaf_slots(tree);
    WpCoefficients coeffs{tree, std::vector<std::vector<double>>(slots.size())};
    analyze_rec({0, 0}, std::vector<double>(signal.begin(), signal.end()), filter,
                slots, coeffs.packets);
    return coeffs;
}

std::vector<double> synthesize(const WpCoefficients& coeffs, const QmfPair& filter) {
    const auto& tree = coeffs.tree;
    if (coeffs.packets.size() != tree.leaves().size())
        throw DimensionMismatch("packet count does not match leaf count");
    for (std::size_t i = 0; i < coeffs.packets.size(); ++i) {
        auto want = std::size_t{1} << (tree.max_depth() - tree.leaves()[i].j);
        if (coeffs.packets[i].size() != want)
            throw DimensionMismatch("packet length mismatch at leaf index " +
                                    std::to_string(i));
    }
    auto slots = leaf_slots(tree);
    return synthesize_rec({0, 0}, tree.max_depth(), filter, slots, coeffs.packets);
}

Eigen::MatrixXd transform_matrix(const WpTree& tree, const QmfPair& filter, int N) {
    if (N != (1 << tree.max_depth()))
        throw DimensionMismatch("N must equal 2^J");
    Eigen::MatrixXd W(N, N);
    WpCoefficients unit{tree, {}};
    unit.packets.resize(tree.leaves().size());
    for (std::size_t i = 0; i < tree.leaves().size(); ++i)
        unit.packets[i].assign(std::size_t{1} << (tree.max_depth() - tree.leaves()[i].j), 0.0);
    int col = 0;
    for (std::size_t i = 0; i < unit.packets.size(); ++i) {
        for (std::size_t n = 0; n < unit.packets[i].size(); ++n, ++col) {
            unit.packets[i][n] = 1.0;
            auto v = synthesize(unit, filter);
            unit.packets[i][n] = 0.0;
            for (int r = 0; r < N; ++r) W(r, col) = v[static_cast<size_t>(r)];
        }
    }
    return W;
}

std::vector<int> gray_permutation(int j) {
    std::vector<int> perm(static_cast<size_t>(1) << j);
    for (int p = 0; p < (1 << j); ++p) perm[static_cast<size_t>(p)] = p ^ (p >> 1);
    return perm;
}

} // namespace gegwp
