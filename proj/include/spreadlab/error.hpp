#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace spreadlab {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes: parse/usage errors -> 1, domain errors -> 2.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class invalid_argument : public error {
public:
    using error::error;
};

// Raised for inputs outside an operation's mathematical domain.
class domain_error : public error {
public:
    using error::error;
};

class connectivity_error : public domain_error {
public:
    connectivity_error(int u, int v)
        : domain_error("graph is disconnected: no path between vertex " + std::to_string(u + 1) +
                       " and vertex " + std::to_string(v + 1)),
          u_(u), v_(v) {}
    int u() const noexcept { return u_; }
    int v() const noexcept { return v_; }

private:
    int u_, v_;
};

class not_bipartite_error : public domain_error {
public:
    explicit not_bipartite_error(std::vector<int> odd_walk)
        : domain_error("graph is not bipartite (odd closed walk of length " +
                       std::to_string(odd_walk.empty() ? 0 : odd_walk.size() - 1) + ")"),
          odd_walk_(std::move(odd_walk)) {}
    const std::vector<int>& odd_walk() const noexcept { return odd_walk_; }

private:
    std::vector<int> odd_walk_;
};

class not_cactus_error : public domain_error {
public:
    using domain_error::domain_error;
};

class acyclic_error : public domain_error {
public:
    using domain_error::domain_error;
};

// Partition has an empty complement block, so the two-block quotient is undefined.
class degenerate_error : public domain_error {
public:
    using domain_error::domain_error;
};

class numeric_error : public error {
public:
    using error::error;
};

}  // namespace spreadlab
