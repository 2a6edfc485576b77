#include "kstab/qform.hpp"

namespace kstab {

Rational QForm3::eval(const Vec3& v) const {
    Rational acc = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            acc += v[i] * m_[i][j] * v[j];
    return acc;
}

Rational QForm3::bilinear(const Vec3& u, const Vec3& v) const {
    Rational acc = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            acc += u[i] * m_[i][j] * v[j];
    return acc;
}

const QForm3& delta_form() {
    static const QForm3 q{{{{Rational(0), Rational(0), Rational(-1)},
                            {Rational(0), Rational(1), Rational(0)},
                            {Rational(-1), Rational(0), Rational(0)}}}};
    return q;
}

}  // namespace kstab
