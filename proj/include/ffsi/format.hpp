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

#ifndef FFSI_FORMAT_HPP
#define FFSI_FORMAT_HPP

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "ffsi/errors.hpp"
#include "ffsi/poly.hpp"

namespace ffsi {

// Textual polynomial grammar (documented in the README):
//   poly  := term ('+' term)*
//   term  := coeff | coeff '*' 'x' | coeff '*' 'x' '^' k
//   coeff := integer                      (base level with r = 1)
//          | '[' integer (',' integer)* ']'   (r > 1, low-degree first)
// Omitted powers are zero; repeated powers accumulate. Whitespace ignored.

inline std::string format_coeff(const BaseField& K, const BaseElem& a) {
    if (K.degree() == 1) return std::to_string(a[0]);
    std::string s = "[";
    for (int i = 0; i < K.degree(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + "]";
}

inline std::string format_poly(const BaseField& K, const Poly<BaseField>& f) {
    if (f.is_zero()) return K.degree() == 1 ? "0" : format_coeff(K, K.zero());
    std::string s;
    for (int i = 0; i <= f.deg(); ++i) {
        if (K.is_zero(f.c[i]) && f.deg() > 0) continue;
        if (!s.empty()) s += "+";
        s += format_coeff(K, f.c[i]);
        if (i == 1) s += "*x";
        if (i > 1) s += "*x^" + std::to_string(i);
    }
    return s;
}

namespace detail {

struct PolyLexer {
    std::string s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    std::int64_t integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw InvalidConfig("expected integer in polynomial at offset " + std::to_string(i));
        std::int64_t v = std::stoll(s.substr(start, i - start));
        return neg ? -v : v;
    }
};

}  // namespace detail

inline Poly<BaseField> parse_poly(const BaseField& K, const std::string& text) {
    detail::PolyLexer lx{text};
    std::vector<BaseElem> coeffs;
    auto ensure = [&](std::size_t k) {
        while (coeffs.size() <= k) coeffs.push_back(K.zero());
    };
    do {
        BaseElem c = K.zero();
        if (lx.eat('[')) {
            for (int j = 0;; ++j) {
                std::int64_t v = lx.integer();
                if (j >= K.degree()) throw InvalidConfig("coefficient tuple longer than extension degree");
                c[j] = K.subfield.from_int(v);
                if (lx.eat(']')) break;
                if (!lx.eat(',')) throw InvalidConfig("expected ',' or ']' in coefficient tuple");
            }
        } else {
            if (K.degree() != 1)
                throw InvalidConfig("bare integer coefficient requires r = 1; use [..] tuples");
            c[0] = K.subfield.from_int(lx.integer());
        }
        std::size_t power = 0;
        if (lx.eat('*')) {
            if (!lx.eat('x')) throw InvalidConfig("expected 'x' after '*'");
            power = 1;
            if (lx.eat('^')) {
                std::int64_t e = lx.integer();
                if (e < 0) throw InvalidConfig("negative exponent");
                power = static_cast<std::size_t>(e);
            }
        }
        ensure(power);
        coeffs[power] = K.add(coeffs[power], c);
    } while (lx.eat('+'));
    if (!lx.done()) throw InvalidConfig("trailing junk in polynomial text");
    return poly_from_coeffs(K, std::move(coeffs));
}

}  // namespace ffsi

#endif  // FFSI_FORMAT_HPP
