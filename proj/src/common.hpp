#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace fmdel {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

inline std::string to_string(const Rational& r) {
    return r.numerator().str() + "/" + r.denominator().str();
}

enum class ErrorKind {
    parse,         // malformed input text
    invalid,       // argument violates a precondition
    precondition,  // algorithmic precondition (e.g. treewidth bound) not met
    cap,           // instance exceeds a brute-force cap
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

/// Brute-force size caps. All algorithms that enumerate subsets or models
/// check against these and raise Error(cap) instead of running forever.
struct Caps {
    int tw_exact = 25;        // treewidth_exact vertex cap
    int minor_pattern = 6;    // has_minor pattern vertex cap
    int folio_host = 16;      // folio host vertex cap
    int folio_h = 6;          // folio detail cap
    int exact_solver = 20;    // solve_exact vertex cap
    int modulator_enum = 12;  // all_modulators vertex cap
    int exhaustive = 16;      // exhaustive_family protrusion cap
    int threads = 1;          // worker threads for repetition loops
};

Caps& default_caps();

// --- seeded randomness ------------------------------------------------------
// std::mt19937_64 output is pinned by the standard; the std distributions are
// not, so index draws go through explicit rejection sampling.

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 1));
}

inline std::uint64_t uniform_u64(Rng& rng) { return rng(); }

/// Uniform draw from [0, n) without modulo bias.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    if (n == 0) fail(ErrorKind::invalid, "uniform_index: empty range");
    std::uint64_t bound = std::uint64_t(-1) - (std::uint64_t(-1) % n);
    std::uint64_t draw = rng();
    while (draw >= bound) draw = rng();
    return static_cast<std::size_t>(draw % n);
}

}  // namespace fmdel
