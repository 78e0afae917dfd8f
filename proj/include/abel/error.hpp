#ifndef ABEL_ERROR_HPP
#define ABEL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace abel {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Operands live in different variable regimes (q vs p,q vs u,q) or have
// incompatible shapes.
class regime_error : public error {
public:
    explicit regime_error(const std::string& what) : error(what) {}
};

// A window-truncated Laurent value was used outside its trusted region,
// or a product left no trusted region at all.
class window_error : public error {
public:
    explicit window_error(const std::string& what) : error(what) {}
};

// An operation precondition was violated (non-unit constant term, wrong
// parity, out-of-range index, ...).
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& what) : error(what) {}
};

// A combinatorial enumeration exceeded its configured size bound.
class bound_error : public error {
public:
    explicit bound_error(const std::string& what) : error(what) {}
};

// An exact computation produced a non-integer where an integer was
// required; signals an implementation bug, never a rounding problem.
class integrality_error : public error {
public:
    explicit integrality_error(const std::string& what) : error(what) {}
};

}  // namespace abel

#endif
