#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace k3lab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool isInteger(const Rat& r) { return denominator(r) == 1; }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// Canonical "p" / "p/q" rendering; boost keeps q > 0 and gcd(p,q) = 1.
inline std::string ratToString(const Rat& r) {
    if (isInteger(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat ratFromString(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw Error("zero denominator in rational literal '" + s + "'");
        return Rat(p, q);
    } catch (const std::exception& e) {
        throw Error("bad rational literal '" + s + "': " + e.what());
    }
}

inline double toDouble(const Rat& r) { return static_cast<double>(r); }

} // namespace k3lab
