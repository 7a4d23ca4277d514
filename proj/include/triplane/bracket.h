#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "triplane/word.h"

namespace triplane {

// Integer Laurent polynomial in one variable A.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(std::int64_t coeff, int exponent);

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    bool operator==(const LaurentPoly&) const = default;

    bool is_zero() const { return coeffs_.empty(); }
    std::string to_string() const;  // "-A^-2 + 3 + A^6"

private:
    std::map<int, std::int64_t> coeffs_;  // exponent -> coefficient, no zeros
};

// delta = -A^2 - A^-2 raised to the given power (power >= 0).
LaurentPoly loop_value_power(int power);

// State-sum bracket with the empty diagram mapped to 1, so a crossingless
// c-component unlink evaluates to delta^c. Cost is 2^crossings; words above
// max_crossings are rejected with Error.
LaurentPoly kauffman_bracket(const LinkWord& word, int max_crossings = 20);

// Whether (-A^3)^(-writhe) * bracket equals delta^components.
bool bracket_matches_unlink(const LinkWord& word, int max_crossings = 20);

}  // namespace triplane
