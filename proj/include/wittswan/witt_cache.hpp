#ifndef WITTSWAN_WITT_CACHE_HPP
#define WITTSWAN_WITT_CACHE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "wittswan/witt.hpp"

namespace wittswan {

struct CacheError : std::runtime_error {
    explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};

std::uint64_t fnv1a64(const std::string& data);

// cache directory resolution: explicit override > WITTSWAN_CACHE_DIR >
// ~/.cache/wittswan
std::string default_cache_dir();
std::string resolve_cache_dir(const std::string& override_dir);

std::string cache_file_path(const std::string& dir, int p, int m);

std::string serialize_context(const WittContext& ctx);
WittCtx parse_context(const std::string& text); // throws CacheError

void save_context(const WittContext& ctx, const std::string& dir);
WittCtx load_context(int p, int m, const std::string& dir); // throws CacheError
bool cache_file_exists(int p, int m, const std::string& dir);

// load when present, otherwise build and persist; corrupt files propagate
WittCtx load_or_build(int p, int m, const std::string& dir,
                      int cap = kDefaultWittCap);

} // namespace wittswan

#endif
