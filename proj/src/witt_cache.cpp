#include "wittswan/witt_cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace wittswan {

namespace {

constexpr const char* kMagic = "wittswan-witt-cache v1";

std::string poly_line(const ZPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (!first) os << ";";
        first = false;
        for (size_t k = 0; k < e.size(); ++k) {
            if (k) os << ",";
            os << e[k];
        }
        os << ":" << c.get_str();
    }
    return os.str();
}

ZPoly parse_poly_line(const std::string& s, int nvars) {
    ZPoly f(nvars);
    if (s == "0") return f;
    std::istringstream is(s);
    std::string entry;
    while (std::getline(is, entry, ';')) {
        auto colon = entry.find(':');
        if (colon == std::string::npos)
            throw CacheError("cache: malformed term '" + entry + "'");
        ExpVec e;
        std::istringstream es(entry.substr(0, colon));
        std::string num;
        while (std::getline(es, num, ','))
            e.push_back(std::stoi(num));
        if (static_cast<int>(e.size()) != nvars)
            throw CacheError("cache: term arity mismatch");
        mpz_class c;
        if (c.set_str(entry.substr(colon + 1), 10) != 0)
            throw CacheError("cache: malformed coefficient");
        f.add_term(e, c);
    }
    return f;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

} // namespace

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("WITTSWAN_CACHE_DIR"))
        if (*env) return env;
    if (const char* home = std::getenv("HOME"))
        if (*home) return std::string(home) + "/.cache/wittswan";
    return ".wittswan-cache";
}

std::string resolve_cache_dir(const std::string& override_dir) {
    return override_dir.empty() ? default_cache_dir() : override_dir;
}

std::string cache_file_path(const std::string& dir, int p, int m) {
    return dir + "/w_p" + std::to_string(p) + "_m" + std::to_string(m) + ".txt";
}

std::string serialize_context(const WittContext& ctx) {
    std::ostringstream os;
    os << kMagic << "\n";
    os << "p " << ctx.p << "\n";
    os << "m " << (ctx.len - 1) << "\n";
    for (int n = 0; n < ctx.len; ++n) os << "S " << n << " " << poly_line(ctx.sum[n]) << "\n";
    for (int n = 0; n < ctx.len; ++n) os << "P " << n << " " << poly_line(ctx.prod[n]) << "\n";
    for (int n = 0; n < ctx.len; ++n) os << "N " << n << " " << poly_line(ctx.neg[n]) << "\n";
    std::string body = os.str();
    return body + "checksum " + hex64(fnv1a64(body)) + "\n";
}

WittCtx parse_context(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(is, line)) lines.push_back(line);
    if (lines.size() < 4 || lines[0] != kMagic)
        throw CacheError("cache: unrecognized header; rebuild with 'cache build'");
    if (lines.back().rfind("checksum ", 0) != 0)
        throw CacheError("cache: missing checksum line; rebuild with 'cache build'");
    std::string body;
    for (size_t i = 0; i + 1 < lines.size(); ++i) body += lines[i] + "\n";
    std::string want = lines.back().substr(9);
    if (hex64(fnv1a64(body)) != want)
        throw CacheError("cache: checksum mismatch; rebuild with 'cache build'");

    int p = 0, m = -1;
    if (sscanf(lines[1].c_str(), "p %d", &p) != 1 ||
        sscanf(lines[2].c_str(), "m %d", &m) != 1)
        throw CacheError("cache: malformed parameter lines");
    int len = m + 1;
    std::vector<ZPoly> sum, prod, neg;
    size_t at = 3;
    auto read_block = [&](char tag, int nvars, std::vector<ZPoly>& out) {
        for (int n = 0; n < len; ++n, ++at) {
            if (at + 1 >= lines.size())
                throw CacheError("cache: truncated file");
            std::istringstream ls(lines[at]);
            std::string t;
            int idx;
            ls >> t >> idx;
            if (t.size() != 1 || t[0] != tag || idx != n)
                throw CacheError("cache: unexpected polynomial line");
            std::string rest;
            std::getline(ls, rest);
            if (!rest.empty() && rest[0] == ' ') rest = rest.substr(1);
            out.push_back(parse_poly_line(rest, nvars));
        }
    };
    read_block('S', 2 * len, sum);
    read_block('P', 2 * len, prod);
    read_block('N', len, neg);
    try {
        return WittContext::assemble(p, len, std::move(sum), std::move(prod),
                                     std::move(neg));
    } catch (const std::exception& e) {
        throw CacheError(std::string("cache: ") + e.what() +
                         "; rebuild with 'cache build'");
    }
}

void save_context(const WittContext& ctx, const std::string& dir) {
    std::filesystem::create_directories(dir);
    std::string path = cache_file_path(dir, ctx.p, ctx.len - 1);
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw CacheError("cache: cannot write " + path);
    os << serialize_context(ctx);
}

bool cache_file_exists(int p, int m, const std::string& dir) {
    return std::filesystem::exists(cache_file_path(dir, p, m));
}

WittCtx load_context(int p, int m, const std::string& dir) {
    std::string path = cache_file_path(dir, p, m);
    std::ifstream is(path);
    if (!is) throw CacheError("cache: missing file " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    WittCtx ctx = parse_context(buf.str());
    if (ctx->p != p || ctx->len != m + 1)
        throw CacheError("cache: file " + path + " holds other parameters");
    return ctx;
}

WittCtx load_or_build(int p, int m, const std::string& dir, int cap) {
    if (cache_file_exists(p, m, dir)) return load_context(p, m, dir);
    WittCtx ctx = WittContext::build(p, m, cap);
    save_context(*ctx, dir);
    return ctx;
}

} // namespace wittswan
