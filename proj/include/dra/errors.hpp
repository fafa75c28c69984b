#pragma once

#include "dra/scalar.hpp"

#include <stdexcept>
#include <string>

namespace dra {

/// Rational-function evaluation hit a root of the denominator.
/// component_degree >= 0 when the pole surfaced while acting on a graded
/// component of the polynomial module.
class pole_error : public std::runtime_error {
public:
    pole_error(Scalar point, int component_degree = -1)
        : std::runtime_error(make_message(point, component_degree)),
          point_(std::move(point)),
          component_degree_(component_degree) {}

    const Scalar& point() const { return point_; }
    int component_degree() const { return component_degree_; }

private:
    static std::string make_message(const Scalar& point, int component_degree) {
        std::string msg = "pole at H = " + point.str();
        if (component_degree >= 0) {
            msg += " (module component of degree " + std::to_string(component_degree) + ")";
        }
        return msg;
    }

    Scalar point_;
    int component_degree_;
};

/// Two elements from incompatible algebra contexts (different n or metric).
class context_mismatch : public std::logic_error {
public:
    explicit context_mismatch(const std::string& what) : std::logic_error(what) {}
};

} // namespace dra
