#include "dra/scalar.hpp"

namespace dra {

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (!re_.is_zero()) out = re_.str();
    if (!cc_.is_zero()) {
        if (!out.empty()) out += cc_.sign() < 0 ? " - " : " + ";
        else if (cc_.sign() < 0) out += "-";
        Rational mag = cc_.sign() < 0 ? -cc_ : cc_;
        if (mag == Rational(1)) out += "c";
        else out += mag.str() + "*c";
    }
    return out;
}

} // namespace dra
