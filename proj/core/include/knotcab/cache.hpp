// Content-addressed on-disk cache for computed polynomials, keyed by the
// diagram's canonical text, the color, and the engine that produced them.
#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "knotcab/laurent.hpp"
#include "knotcab/pd.hpp"

namespace knotcab {

class PolyCache {
public:
    explicit PolyCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const { return dir_; }

    // 16-hex-digit FNV-1a key of (canonical PD text, color, engine).
    static std::string key(const PDCode& d, unsigned color,
                           const std::string& engine);

    // Returns the cached polynomial when the entry exists and its stored
    // inputs match exactly (guards against hash collisions); nullopt otherwise.
    std::optional<LaurentPoly> load(const PDCode& d, unsigned color,
                                    const std::string& engine) const;

    // Writes the entry, creating the directory when needed.  Best-effort:
    // IO failures surface as Error.
    void store(const PDCode& d, unsigned color, const std::string& engine,
               const LaurentPoly& poly) const;

private:
    std::filesystem::path dir_;
};

} // namespace knotcab
