#include "knotcab/cache.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace knotcab {

namespace {

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xf);
    return os.str();
}

} // namespace

std::string PolyCache::key(const PDCode& d, unsigned color,
                           const std::string& engine) {
    return fnv1a_hex(d.canonical_text() + "|n=" + std::to_string(color) +
                     "|engine=" + engine);
}

std::optional<LaurentPoly> PolyCache::load(const PDCode& d, unsigned color,
                                           const std::string& engine) const {
    const auto path = dir_ / (key(d, color, engine) + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("pd") != d.canonical_text() || j.at("color") != color ||
            j.at("engine") != engine)
            return std::nullopt; // hash collision or stale entry
        return LaurentPoly::from_json(j.at("poly").dump());
    } catch (const std::exception&) {
        return std::nullopt; // unreadable entries are treated as misses
    }
}

void PolyCache::store(const PDCode& d, unsigned color,
                      const std::string& engine,
                      const LaurentPoly& poly) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw Error("cannot create cache directory " + dir_.string());

    nlohmann::json j;
    j["pd"] = d.canonical_text();
    j["color"] = color;
    j["engine"] = engine;
    j["poly"] = nlohmann::json::parse(poly.to_json());

    const auto path = dir_ / (key(d, color, engine) + ".json");
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Error("cannot write cache entry " + tmp);
        out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error("cannot finalize cache entry " + path.string());
}

} // namespace knotcab
