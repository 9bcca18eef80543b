#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hstar/errors.hpp"

namespace hstar {

/// A polynomial ring descriptor: an ordered list of variable names.
struct Ring {
    std::vector<std::string> names;

    std::size_t nvars() const { return names.size(); }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const Ring& o) const { return names == o.names; }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names) {
    return std::make_shared<const Ring>(Ring{std::move(names)});
}

/// Coordinate ring of P^N: variables x0..xN.
inline RingPtr projective_ring(int N) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) names.push_back("x" + std::to_string(i));
    return make_ring(std::move(names));
}

/// Parameter ring with variables t0..t(k-1).
inline RingPtr param_ring(int k) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) names.push_back("t" + std::to_string(i));
    return make_ring(std::move(names));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw RingMismatch();
}

}  // namespace hstar
