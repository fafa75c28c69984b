#include "dra/rational.hpp"

namespace dra {

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(BigInt(std::string(s)));
    }
    BigInt num{std::string(s.substr(0, slash))};
    BigInt den{std::string(s.substr(slash + 1))};
    return Rational(num, den);
}

std::string Rational::str() const {
    std::string out = num().str();
    if (den() != 1) {
        out += "/";
        out += den().str();
    }
    return out;
}

} // namespace dra
