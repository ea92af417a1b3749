// Shared fixture-loading helpers for the unit tests.
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotcab/pd.hpp"

namespace testutil {

inline std::string fixtures_dir() { return KNOTCAB_FIXTURES_DIR; }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<knotcab::PDCode> load_knots() {
    return knotcab::parse_pd_file(slurp(fixtures_dir() + "/knots.pd"));
}

inline std::vector<knotcab::PDCode> load_synthetic() {
    return knotcab::parse_pd_file(slurp(fixtures_dir() + "/synthetic.pd"));
}

inline const knotcab::PDCode& by_name(const std::vector<knotcab::PDCode>& v,
                                      const std::string& name) {
    for (const auto& d : v)
        if (d.name() == name) return d;
    throw std::runtime_error("no fixture named " + name);
}

} // namespace testutil
