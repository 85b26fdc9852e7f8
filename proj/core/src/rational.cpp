#include "strichartz/rational.hpp"

#include <cctype>

namespace strichartz {

bool parse_rational(std::string_view text, Rational& out) {
    if (text.empty()) return false;
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    std::size_t num_digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
        ++num_digits;
    }
    if (num_digits == 0) return false;
    if (i < text.size()) {
        if (text[i] != '/') return false;
        ++i;
        std::size_t den_digits = 0;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
            ++den_digits;
        }
        if (den_digits == 0 || i != text.size()) return false;
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0)
        return false;
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) return false;
    q.canonicalize();
    out = q;
    return true;
}

}  // namespace strichartz
