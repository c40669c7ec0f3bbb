#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringlab {

// Hard resource limits. Exceeding a bound raises BoundExceeded; nothing is
// ever silently truncated.
struct Bounds {
    long long max_field_size = 256;
    long long max_gl_matrices = 6561;  // 3^8, matrices scanned by gl_enumerate
    long long max_ring_size = 512;
    long long max_module_size = 512;
    long long max_submodules = 20000;
    long long max_hom_candidates = 1000000;
    long long sample_triples = 100000;  // sampled law checks on large carriers
    std::uint64_t seed = 0;
    int threads = 1;
};

struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SemanticError : std::runtime_error {
    explicit SemanticError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

}  // namespace ringlab
