#pragma once

#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hstar/hash.hpp"
#include "hstar/parse.hpp"

namespace hstar {

/// Process-wide Groebner basis store: an in-memory memo plus an optional
/// on-disk directory keyed by (ideal hash, order). The disk layer is only
/// active once a directory is configured.
class GbCache {
    std::unordered_map<std::string, std::vector<QPoly>> memo_;
    std::optional<std::filesystem::path> dir_;
    std::mutex mu_;

    GbCache() = default;

  public:
    static GbCache& instance() {
        static GbCache c;
        return c;
    }

    void set_directory(std::optional<std::filesystem::path> dir) {
        std::lock_guard<std::mutex> lk(mu_);
        dir_ = std::move(dir);
        if (dir_) std::filesystem::create_directories(*dir_);
    }

    void clear_memory() {
        std::lock_guard<std::mutex> lk(mu_);
        memo_.clear();
    }

    std::optional<std::vector<QPoly>> lookup(const std::string& key, const RingPtr& ring) {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        if (!dir_) return std::nullopt;
        auto path = *dir_ / (key + ".gb");
        std::ifstream in(path);
        if (!in) return std::nullopt;
        std::string line;
        if (!std::getline(in, line) || line != "# gb-cache v1") return std::nullopt;
        if (!std::getline(in, line)) return std::nullopt;
        std::string names;
        for (std::size_t i = 0; i < ring->nvars(); ++i) {
            if (i) names += ",";
            names += ring->names[i];
        }
        if (line != "vars " + names) return std::nullopt;
        std::vector<QPoly> basis;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            basis.push_back(parse_polynomial(line, ring));
        }
        memo_.emplace(key, basis);
        return basis;
    }

    void store(const std::string& key, const RingPtr& ring, const std::vector<QPoly>& basis) {
        std::lock_guard<std::mutex> lk(mu_);
        memo_[key] = basis;
        if (!dir_) return;
        auto path = *dir_ / (key + ".gb");
        std::ofstream out(path);
        out << "# gb-cache v1\n";
        out << "vars ";
        for (std::size_t i = 0; i < ring->nvars(); ++i) {
            if (i) out << ",";
            out << ring->names[i];
        }
        out << "\n";
        for (const auto& p : basis) out << to_string(p) << "\n";
    }
};

}  // namespace hstar
