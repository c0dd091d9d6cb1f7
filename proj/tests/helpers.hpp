#pragma once

#include <doctest.h>

#include "congruent/errors.hpp"
#include "congruent/rational.hpp"

namespace testing {

inline congruent::Rational q(const char* s) { return congruent::Rational::parse(s); }

// Kind of the MathError thrown by f; fails the test when nothing is thrown.
template <class F>
congruent::ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const congruent::MathError& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return congruent::ErrorKind::InvalidArgument;
}

} // namespace testing
