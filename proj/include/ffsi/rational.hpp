/*
   Copyright 2026 the ffsi authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFSI_RATIONAL_HPP
#define FFSI_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ffsi {

// All statistics are exact; floats appear only in presentation columns.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int ipow(Int base, unsigned exp) {
    Int acc = 1;
    while (exp) {
        if (exp & 1u) acc *= base;
        base *= base;
        exp >>= 1u;
    }
    return acc;
}

inline Int factorial(unsigned n) {
    Int acc = 1;
    for (unsigned i = 2; i <= n; ++i) acc *= i;
    return acc;
}

inline std::string to_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace ffsi

#endif  // FFSI_RATIONAL_HPP
