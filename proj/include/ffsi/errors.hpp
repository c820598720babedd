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

#ifndef FFSI_ERRORS_HPP
#define FFSI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffsi {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
    explicit NotPrime(long long p) : Error("not a prime: " + std::to_string(p)) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct LevelMismatch : Error {
    explicit LevelMismatch(const std::string& what = "operands live at different field levels")
        : Error(what) {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("zero polynomial not allowed here") {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what = "enumeration budget exceeded")
        : Error(what) {}
};

struct ExtensionTooSmall : Error {
    explicit ExtensionTooSmall(const std::string& what = "some factor degree does not divide d")
        : Error(what) {}
};

struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& what = "sizes do not match") : Error(what) {}
};

struct NotOnVariety : Error {
    NotOnVariety() : Error("point does not satisfy the cone equations") {}
};

struct IndexOutOfRange : Error {
    IndexOutOfRange() : Error("index out of range") {}
};

struct InvalidConfig : Error {
    using Error::Error;
};

}  // namespace ffsi

#endif  // FFSI_ERRORS_HPP
