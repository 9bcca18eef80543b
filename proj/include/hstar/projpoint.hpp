#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hstar/algnum.hpp"
#include "hstar/parse.hpp"
#include "hstar/polynomial.hpp"

namespace hstar {

/// Projective point with exact coordinates (rational or algebraic). At least
/// one coordinate is nonzero; equality is up to a global nonzero scale.
class ProjPoint {
    std::vector<AlgNum> c_;

  public:
    explicit ProjPoint(std::vector<AlgNum> coords) : c_(std::move(coords)) {
        bool any = false;
        for (const auto& v : c_)
            if (!is_zero(v)) {
                any = true;
                break;
            }
        if (!any) throw Error("projective point must have a nonzero coordinate");
    }

    static ProjPoint rational(std::vector<Rat> coords) {
        std::vector<AlgNum> v;
        v.reserve(coords.size());
        for (auto& q : coords) v.emplace_back(q);
        return ProjPoint(std::move(v));
    }

    static ProjPoint ones(std::size_t n) {
        return rational(std::vector<Rat>(n, Rat(1)));
    }

    /// Parses "a0:a1:...:aN" with rational entries.
    static ProjPoint parse(const std::string& text) {
        std::vector<Rat> coords;
        std::size_t start = 0;
        for (;;) {
            std::size_t colon = text.find(':', start);
            std::string piece = text.substr(start, colon == std::string::npos
                                                       ? std::string::npos
                                                       : colon - start);
            // strip spaces
            while (!piece.empty() && piece.front() == ' ') piece.erase(piece.begin());
            while (!piece.empty() && piece.back() == ' ') piece.pop_back();
            if (piece.empty()) throw ParseError("empty coordinate", start);
            bool neg = false;
            std::size_t p = 0;
            if (piece[0] == '-') {
                neg = true;
                p = 1;
            } else if (piece[0] == '+') {
                p = 1;
            }
            std::size_t slash = piece.find('/', p);
            try {
                Rat v;
                if (slash == std::string::npos)
                    v = Rat(Int(piece.substr(p)));
                else
                    v = Rat(Int(piece.substr(p, slash - p)), Int(piece.substr(slash + 1)));
                coords.push_back(neg ? Rat(-v) : v);
            } catch (const std::exception&) {
                throw ParseError("bad rational coordinate '" + piece + "'", start);
            }
            if (colon == std::string::npos) break;
            start = colon + 1;
        }
        return rational(std::move(coords));
    }

    std::size_t size() const { return c_.size(); }
    const AlgNum& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<AlgNum>& coords() const { return c_; }

    std::size_t zero_count() const {
        std::size_t z = 0;
        for (const auto& v : c_)
            if (is_zero(v)) ++z;
        return z;
    }

    std::vector<std::size_t> zero_set() const {
        std::vector<std::size_t> z;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (is_zero(c_[i])) z.push_back(i);
        return z;
    }

    bool all_rational() const {
        for (auto& v : c_)
            if (!const_cast<AlgNum&>(v).try_rationalize()) return false;
        return true;
    }

    std::optional<std::vector<Rat>> rational_coords() const {
        if (!all_rational()) return std::nullopt;
        std::vector<Rat> out;
        out.reserve(c_.size());
        for (const auto& v : c_) out.push_back(v.rational_value());
        return out;
    }

    /// Scales so the first nonzero coordinate equals 1.
    ProjPoint canonical() const {
        std::size_t i = 0;
        while (is_zero(c_[i])) ++i;
        AlgNum inv = c_[i].inverse();
        std::vector<AlgNum> out;
        out.reserve(c_.size());
        for (const auto& v : c_) out.push_back(v * inv);
        return ProjPoint(std::move(out));
    }

    std::string str() const {
        // All-rational points print with denominators cleared.
        auto rc = rational_coords();
        std::string out = "(";
        if (rc) {
            Int den_lcm = 1;
            for (const auto& q : *rc) den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(q));
            for (std::size_t i = 0; i < rc->size(); ++i) {
                if (i) out += ":";
                out += rat_to_string((*rc)[i] * Rat(den_lcm));
            }
        } else {
            for (std::size_t i = 0; i < c_.size(); ++i) {
                if (i) out += ":";
                out += c_[i].str();
            }
        }
        return out + ")";
    }

    /// Deterministic sort key (stable within a run; used to pick canonical
    /// witnesses among finitely many candidates).
    std::string sort_key() const {
        ProjPoint c = canonical();
        std::string key;
        for (const auto& v : c.c_) {
            if (v.rational_repr()) {
                key += "r" + rat_to_string(v.rational_value()) + ";";
            } else {
                CBox e = v.enclosure(Rat(1, 1 << 20));
                key += "a" + v.residue().str() + "|" + rat_to_string(e.re.lo) + "|" +
                       rat_to_string(e.im.lo) + ";";
            }
        }
        return key;
    }
};

/// Coordinate-wise product of projective points; undefined when every
/// coordinate product vanishes.
inline ProjPoint hadamard_point(const ProjPoint& p, const ProjPoint& q) {
    if (p.size() != q.size()) throw RingMismatch("points in different ambient spaces");
    std::vector<AlgNum> out;
    out.reserve(p.size());
    bool any = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        AlgNum v = p[i] * q[i];
        if (!is_zero(v)) any = true;
        out.push_back(std::move(v));
    }
    if (!any) throw AllZeroProduct();
    return ProjPoint(std::move(out));
}

inline ProjPoint hadamard_product(const std::vector<ProjPoint>& factors) {
    if (factors.empty()) throw Error("empty hadamard product");
    ProjPoint acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = hadamard_point(acc, factors[i]);
    return acc;
}

/// Coordinate-wise reciprocal; requires all coordinates nonzero.
inline ProjPoint hadamard_inverse(const ProjPoint& p) {
    std::vector<AlgNum> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (is_zero(p[i])) throw ZeroCoordinate();
        out.push_back(p[i].inverse());
    }
    return ProjPoint(std::move(out));
}

/// Equality up to global nonzero scaling: all 2x2 cross products vanish.
inline bool proj_equal(const ProjPoint& p, const ProjPoint& q) {
    if (p.size() != q.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (!is_zero(p[i] * q[j] - p[j] * q[i])) return false;
    return true;
}

/// Exact evaluation of a rational-coefficient polynomial at the point.
inline AlgNum evaluate(const QPoly& f, const ProjPoint& p) {
    if (f.ring()->nvars() != p.size()) throw RingMismatch("point/ring arity mismatch");
    return f.evaluate(p.coords());
}

inline bool vanishes_at(const std::vector<QPoly>& gens, const ProjPoint& p) {
    for (const auto& g : gens)
        if (!is_zero(evaluate(g, p))) return false;
    return true;
}

}  // namespace hstar
