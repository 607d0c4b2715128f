#include "hexid/rational.hpp"

namespace hexid {

std::string Rational::to_fraction_string() const {
    return num_.str() + "/" + den_.str();
}

std::string Rational::to_decimal_string(int places) const {
    if (places < 0) throw std::invalid_argument("to_decimal_string: places must be >= 0");
    Int scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;

    const bool negative = num_ < 0;
    const Int mag = negative ? Int(-num_) : num_;
    Int q = (mag * scale) / den_;
    const Int rem = (mag * scale) % den_;

    // Round half to even on the scaled magnitude.
    const Int twice = 2 * rem;
    if (twice > den_ || (twice == den_ && (q & 1) != 0)) ++q;

    std::string digits = q.str();
    if (static_cast<int>(digits.size()) <= places)
        digits.insert(0, places + 1 - digits.size(), '0');
    std::string out;
    if (negative && q != 0) out += '-';
    out += digits.substr(0, digits.size() - places);
    if (places > 0) {
        out += '.';
        out += digits.substr(digits.size() - places);
    }
    return out;
}

}  // namespace hexid
