#include "angle_literal.hpp"

#include <charconv>
#include <stdexcept>
#include <string_view>

#include "qpulse/bloch.hpp"

namespace qpulse::cli {

namespace {

bool parse_full_double(std::string_view text, double& out) {
    if (text.empty()) return false;
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace

double parse_angle(const std::string& text) {
    const auto fail = [&text] {
        return std::invalid_argument("cannot parse angle '" + text +
                                     "' (expected a number or a pi literal like "
                                     "pi, 2pi, pi/2)");
    };

    const std::string_view sv(text);
    const auto pos = sv.find("pi");
    if (pos == std::string_view::npos) {
        double value = 0.0;
        if (!parse_full_double(sv, value)) throw fail();
        return value;
    }

    double coeff = 1.0;
    if (pos > 0) {
        const std::string_view prefix = sv.substr(0, pos);
        if (prefix == "-") {
            coeff = -1.0;
        } else if (prefix == "+") {
            coeff = 1.0;
        } else if (!parse_full_double(prefix, coeff)) {
            throw fail();
        }
    }

    double divisor = 1.0;
    const std::string_view rest = sv.substr(pos + 2);
    if (!rest.empty()) {
        if (rest.front() != '/' || !parse_full_double(rest.substr(1), divisor) ||
            divisor == 0.0) {
            throw fail();
        }
    }
    return coeff * kPi / divisor;
}

}  // namespace qpulse::cli
