#pragma once

#include <compare>
#include <string>

#include "hstar/monomial.hpp"

namespace hstar {

/// Monomial order: graded reverse lexicographic, lexicographic, or a block
/// elimination order (first `split` variables dominate; graded reverse lex
/// inside each block). Block orders have the elimination property for the
/// leading variable block.
class MonomialOrder {
  public:
    enum class Kind { Grevlex, Lex, Block };

  private:
    Kind kind_ = Kind::Grevlex;
    std::size_t split_ = 0;

    static std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b,
                                              std::size_t lo, std::size_t hi) {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da <=> db;
        for (std::size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return b[i] <=> a[i];  // smaller last exponent wins
        }
        return std::strong_ordering::equal;
    }

    MonomialOrder(Kind k, std::size_t s) : kind_(k), split_(s) {}

  public:
    MonomialOrder() = default;

    static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    /// Eliminates variables [0, split).
    static MonomialOrder block(std::size_t split) { return {Kind::Block, split}; }

    Kind kind() const { return kind_; }
    std::size_t split() const { return split_; }

    std::strong_ordering cmp(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::Grevlex:
                return grevlex_range(a, b, 0, a.nvars());
            case Kind::Lex:
                for (std::size_t i = 0; i < a.nvars(); ++i)
                    if (a[i] != b[i]) return a[i] <=> b[i];
                return std::strong_ordering::equal;
            case Kind::Block: {
                auto first = grevlex_range(a, b, 0, split_);
                if (first != std::strong_ordering::equal) return first;
                return grevlex_range(a, b, split_, a.nvars());
            }
        }
        return std::strong_ordering::equal;
    }

    bool greater(const Monomial& a, const Monomial& b) const {
        return cmp(a, b) == std::strong_ordering::greater;
    }

    std::string tag() const {
        switch (kind_) {
            case Kind::Grevlex:
                return "grevlex";
            case Kind::Lex:
                return "lex";
            case Kind::Block:
                return "block" + std::to_string(split_);
        }
        return "?";
    }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && split_ == o.split_;
    }
};

}  // namespace hstar
