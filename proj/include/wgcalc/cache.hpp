#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <optional>
#include <string>
#include <vector>

#include "wgcalc/io.hpp"

namespace wgcalc {

inline constexpr const char* kEngineVersion = "1";

// FNV-1a, 64 bit: stable across runs and platforms, which std::hash is not.
inline uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

// Run-wide configuration. Precedence: explicit flags, then the key=value file
// pointed to by WGCALC_CONFIG, then defaults.
struct RunConfig {
    int k_max = 4;        // Weingarten level bound
    int mu_max = 10;      // largest |mu| accepted by hurwitz commands
    int r_max = 12;       // largest transposition count in enumerations
    int jack_bound = 8;   // Jack degree bound
    int h_order = -1;     // hbar order for the Jack oracle; -1 means 2 k_max
    std::string cache_dir;
    std::string format = "text"; // text | json | csv
    bool expensive = false;      // enables the k = 5 Jucys-Murphy suite

    void validate() const {
        if (k_max < 1 || mu_max < 1 || r_max < 0 || jack_bound < 1)
            throw ParameterOutOfRange("config: bounds must be positive");
        if (format != "text" && format != "json" && format != "csv")
            throw ParseError("config: unknown format " + format);
    }
};

inline std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            while (!s.empty() && isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
            while (!s.empty() && isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
            return s;
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

// Defaults overlaid with WGCALC_CONFIG and WGCALC_CACHE_DIR; flag values are
// applied on top by the CLI.
inline RunConfig load_config_from_env() {
    RunConfig cfg;
    if (const char* path = std::getenv("WGCALC_CONFIG")) {
        auto kv = read_config_file(path);
        auto geti = [&](const char* key, int& out) {
            auto it = kv.find(key);
            if (it != kv.end()) out = std::stoi(it->second);
        };
        geti("k_max", cfg.k_max);
        geti("mu_max", cfg.mu_max);
        geti("r_max", cfg.r_max);
        geti("jack_bound", cfg.jack_bound);
        geti("h_order", cfg.h_order);
        if (kv.count("cache_dir")) cfg.cache_dir = kv["cache_dir"];
        if (kv.count("format")) cfg.format = kv["format"];
        if (kv.count("expensive")) cfg.expensive = kv["expensive"] == "1" || kv["expensive"] == "true";
    }
    if (const char* dir = std::getenv("WGCALC_CACHE_DIR")) cfg.cache_dir = dir;
    if (cfg.cache_dir.empty()) cfg.cache_dir = ".wgcalc-cache";
    return cfg;
}

// Content-addressed store of serialized results. A record is valid when its
// engine version matches and the payload digest checks out; anything else is
// treated as a miss (and removed by gc).
class ResultCache {
public:
    explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}

    const std::string& dir() const { return dir_; }

    std::optional<Json> load(const std::string& key) const {
        std::ifstream in(path_for(key));
        if (!in) return std::nullopt;
        Json record;
        try {
            std::stringstream buf;
            buf << in.rdbuf();
            record = Json::parse(buf.str()); // rejects trailing bytes
            if (record.at("key").get<std::string>() != key) return std::nullopt;
            if (record.at("version").get<std::string>() != kEngineVersion) return std::nullopt;
            std::string payload = record.at("value").dump();
            if (record.at("digest").get<std::string>() != hex64(fnv1a64(payload)))
                return std::nullopt;
            return record.at("value");
        } catch (...) {
            return std::nullopt;
        }
    }

    void store(const std::string& key, const Json& value) const {
        namespace fs = std::filesystem;
        fs::create_directories(dir_);
        Json record{{"key", key},
                    {"version", kEngineVersion},
                    {"digest", hex64(fnv1a64(value.dump()))},
                    {"value", value}};
        fs::path final = path_for(key);
        fs::path tmp = final;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            out << record.dump(1);
        }
        fs::rename(tmp, final); // atomic publish
    }

    std::vector<std::string> list() const {
        std::vector<std::string> keys;
        namespace fs = std::filesystem;
        if (!fs::exists(dir_)) return keys;
        for (const auto& entry : fs::directory_iterator(dir_)) {
            if (entry.path().extension() != ".json") continue;
            std::ifstream in(entry.path());
            Json record;
            try {
                std::stringstream buf;
                buf << in.rdbuf();
                record = Json::parse(buf.str());
                keys.push_back(record.at("key").get<std::string>());
            } catch (...) {
            }
        }
        std::sort(keys.begin(), keys.end());
        return keys;
    }

    // Removes records that fail validation (wrong version, corrupt payload).
    int gc() const {
        namespace fs = std::filesystem;
        if (!fs::exists(dir_)) return 0;
        int removed = 0;
        for (const auto& entry : fs::directory_iterator(dir_)) {
            auto p = entry.path();
            if (p.extension() == ".tmp") {
                fs::remove(p);
                ++removed;
                continue;
            }
            if (p.extension() != ".json") continue;
            std::ifstream in(p);
            Json record;
            bool ok = false;
            try {
                std::stringstream buf;
                buf << in.rdbuf();
                record = Json::parse(buf.str());
                std::string key = record.at("key").get<std::string>();
                ok = record.at("version").get<std::string>() == kEngineVersion &&
                     record.at("digest").get<std::string>() ==
                         hex64(fnv1a64(record.at("value").dump())) &&
                     p.filename() == filename_for(key);
            } catch (...) {
            }
            if (!ok) {
                fs::remove(p);
                ++removed;
            }
        }
        return removed;
    }

private:
    std::string filename_for(const std::string& key) const {
        return hex64(fnv1a64(key)) + ".json";
    }
    std::filesystem::path path_for(const std::string& key) const {
        return std::filesystem::path(dir_) / filename_for(key);
    }

    std::string dir_;
};

} // namespace wgcalc
