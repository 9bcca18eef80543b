#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hstar/ideal.hpp"
#include "hstar/param.hpp"

namespace hstar {

/// Ideal file format: comment lines start with '#'; the first payload line is
/// "ring N" declaring P^N with variables x0..xN; every further line is one
/// polynomial over that ring.
inline Ideal read_ideal(std::istream& in) {
    std::string line;
    RingPtr ring;
    std::vector<QPoly> gens;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = line;
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
        std::size_t start = s.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        s = s.substr(start);
        if (s[0] == '#') continue;
        if (!ring) {
            if (s.rfind("ring ", 0) != 0)
                throw IoError("ideal file must start with 'ring N' (line " +
                              std::to_string(lineno) + ")");
            int N = std::stoi(s.substr(5));
            if (N < 0) throw IoError("ring dimension must be nonnegative");
            ring = projective_ring(N);
            continue;
        }
        QPoly p = parse_polynomial(s, ring);
        if (p.is_zero_poly())
            throw IoError("zero polynomial rejected as ideal generator (line " +
                          std::to_string(lineno) + ")");
        gens.push_back(std::move(p));
    }
    if (!ring) throw IoError("ideal file has no 'ring N' header");
    return Ideal::make(ring, std::move(gens));
}

inline Ideal read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open ideal file: " + path);
    return read_ideal(in);
}

inline void write_ideal(std::ostream& out, const Ideal& I,
                        const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "ring " << I.ring->nvars() - 1 << "\n";
    for (const auto& g : I.gens) out << to_string(g) << "\n";
}

inline void write_ideal_file(const std::string& path, const Ideal& I,
                             const std::vector<std::string>& comments = {}) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write ideal file: " + path);
    write_ideal(out, I, comments);
}

/// Parametrization file format: comments as above; "params k" declares the
/// parameter ring t0..t(k-1); each further line is one coordinate map.
inline Parametrization read_param(std::istream& in) {
    std::string line;
    RingPtr ring;
    std::vector<QPoly> coords;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = line;
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
        std::size_t start = s.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        s = s.substr(start);
        if (s[0] == '#') continue;
        if (!ring) {
            if (s.rfind("params ", 0) != 0)
                throw IoError("parametrization file must start with 'params k' (line " +
                              std::to_string(lineno) + ")");
            int k = std::stoi(s.substr(7));
            if (k < 1) throw IoError("parameter count must be positive");
            ring = param_ring(k);
            continue;
        }
        coords.push_back(parse_polynomial(s, ring));
    }
    if (!ring) throw IoError("parametrization file has no 'params k' header");
    return Parametrization::make(ring, std::move(coords));
}

inline Parametrization read_param_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open parametrization file: " + path);
    return read_param(in);
}

inline void write_param(std::ostream& out, const Parametrization& P,
                        const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "params " << P.param_count() << "\n";
    for (const auto& f : P.coords) out << to_string(f) << "\n";
}

inline void write_param_file(const std::string& path, const Parametrization& P,
                             const std::vector<std::string>& comments = {}) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write parametrization file: " + path);
    write_param(out, P, comments);
}

}  // namespace hstar
