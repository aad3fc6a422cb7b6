#pragma once

#include "bek/poly.hpp"

namespace bek {

// Both sides of an identity instance, each an exact polynomial in x.
struct Sides {
    Poly lhs;
    Poly rhs;

    Poly difference() const { return lhs - rhs; }
    bool equal() const { return lhs == rhs; }
};

}  // namespace bek
