#ifndef GEGWP_CLI_UTIL_HPP
#define GEGWP_CLI_UTIL_HPP

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gegwp/bestbasis.hpp"
#include "gegwp/errors.hpp"
#include "gegwp/gegenbauer.hpp"

namespace gegwp::cli {

inline constexpr const char* kVersion = "0.1.0";

// One row of the score experiment grid (the four reference processes).
struct Process {
    std::string label;
    std::vector<GegenbauerFactor> factors;
};

inline std::vector<Process> reference_processes() {
    return {
        {"d=0.4,nu=1/12", {{0.4, Frequency::rational(1, 12)}}},
        {"d=0.2,nu=1/12", {{0.2, Frequency::rational(1, 12)}}},
        {"d=0.3,nu=0.016", {{0.3, Frequency::of(0.016)}}},
        {"d1=d2=0.3,nu1=1/40,nu2=1/5",
         {{0.3, Frequency::rational(1, 40)}, {0.3, Frequency::rational(1, 5)}}},
    };
}

inline std::vector<std::string> filter_grid() {
    return {"db2",  "db4",  "db6",  "db8",  "db10", "sym4",  "sym6", "sym8",
            "sym10", "coif1", "coif2", "coif3", "coif4", "coif5", "bl2", "bl4", "bl6"};
}

inline std::vector<Frequency> model_frequencies(const GegenbauerModel& m) {
    std::vector<Frequency> nus;
    for (const auto& f : m.factors()) nus.push_back(f.nu);
    return nus;
}

// "d,nu" with nu decimal or rational
inline GegenbauerFactor parse_factor(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw InvalidFrequency("--factor expects 'd,nu', got '" + text + "'");
    double d = std::stod(text.substr(0, comma));
    return {d, Frequency::parse(text.substr(comma + 1))};
}

class Output {
public:
    explicit Output(const std::string& path) : path_(path) {
        if (!is_stdout()) {
            file_.open(path_);
            if (!file_) throw Error("cannot open output file '" + path_ + "'");
        }
    }
    std::ostream& stream() { return is_stdout() ? std::cout : file_; }
    bool is_stdout() const { return path_.empty() || path_ == "-"; }
    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ofstream file_;
};

void write_manifest(const Output& out, const std::string& subcommand,
                    const std::vector<std::string>& argv, std::uint64_t seed);

std::string render_bands(const WpTree& tree, int width = 64);

std::string fmt(double v);

} // namespace gegwp::cli

#endif
