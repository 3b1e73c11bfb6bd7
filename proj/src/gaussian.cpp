#include "consim/gaussian.hpp"

#include "consim/errors.hpp"

namespace consim {

GaussianRational GaussianRational::inverse() const {
    const Rational n = norm();
    if (n == 0) throw SingularError("division by zero scalar");
    return GaussianRational(re / n, -im / n);
}

std::string GaussianRational::str() const {
    if (im == 0) return rational_to_string(re);
    std::string s;
    if (re != 0) s += rational_to_string(re);
    if (im > 0 && !s.empty()) s += "+";
    s += rational_to_string(im) + "i";
    return s;
}

GaussianRational conj(const GaussianRational& z) { return z.conj(); }

}  // namespace consim
