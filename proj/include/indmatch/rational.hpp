#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace indmatch {

// Exact rational arithmetic; argmax tie-breaking over vertex potentials
// must not depend on floating point.
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

inline double rational_to_double(const Rational& r) {
    return r.convert_to<double>();
}

}  // namespace indmatch
