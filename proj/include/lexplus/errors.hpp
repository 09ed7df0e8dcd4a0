#ifndef LEXPLUS_ERRORS_HPP
#define LEXPLUS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexplus {

/// Base class for all domain errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed monomial/ideal text. Carries the byte offset of the first
/// offending character.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A Hilbert function rejected by the growth criterion. Carries the first
/// violating degree d, i.e. H(d+1) > H(d)^<d>.
class inadmissible_error : public error {
public:
    inadmissible_error(const std::string& what, int degree)
        : error(what + " (violating degree " + std::to_string(degree) + ")"), degree_(degree) {}

    int degree() const { return degree_; }

private:
    int degree_;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
    if (!cond)
        throw error(what);
}

}  // namespace detail

}  // namespace lexplus

#endif
