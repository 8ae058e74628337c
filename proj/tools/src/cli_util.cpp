#include "cli_util.hpp"

#include <cstdio>

#include <json.hpp>

namespace gegwp::cli {

void write_manifest(const Output& out, const std::string& subcommand,
                    const std::vector<std::string>& argv, std::uint64_t seed) {
    if (out.is_stdout()) return;
    nlohmann::json m;
    m["subcommand"] = subcommand;
    m["argv"] = argv;
    m["seed"] = seed;
    m["version"] = kVersion;
    m["outputs"] = {out.path()};
    std::ofstream f(out.path() + ".manifest.json");
    f << m.dump(2) << "\n";
}

std::string render_bands(const WpTree& tree, int width) {
    // one row per depth; a leaf (j,p) paints its band [p,p+1]/2^(j+1),
    // rescaled so [0,1/2] spans the full width
    std::ostringstream os;
    for (int j = 0; j <= tree.max_depth(); ++j) {
        bool any = false;
        std::string row(static_cast<size_t>(width), ' ');
        for (const auto& n : tree.leaves()) {
            if (n.j != j) continue;
            any = true;
            int c0 = static_cast<int>(static_cast<long long>(n.p) * width >> j);
            int c1 = static_cast<int>(static_cast<long long>(n.p + 1) * width >> j);
            for (int c = c0; c < std::max(c1, c0 + 1) && c < width; ++c)
                row[static_cast<size_t>(c)] = '#';
        }
        if (any || j == 0)
            os << "j=" << j << (j < 10 ? " " : "") << " |" << row << "|\n";
    }
    os << "     0" << std::string(static_cast<size_t>(width) - 4, ' ') << "1/2\n";
    return os.str();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace gegwp::cli
