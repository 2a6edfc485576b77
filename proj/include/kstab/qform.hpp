#pragma once

#include "kstab/rational.hpp"

#include <array>

namespace kstab {

using Vec3 = std::array<Rational, 3>;

// Symmetric rational 3x3 matrix; Q(v) = v^T M v.
class QForm3 {
public:
    explicit QForm3(std::array<std::array<Rational, 3>, 3> m) : m_(std::move(m)) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (m_[i][j] != m_[j][i])
                    throw std::invalid_argument("QForm3: matrix not symmetric");
    }

    const Rational& at(int i, int j) const { return m_[i][j]; }

    Rational eval(const Vec3& v) const;
    // Polarization: B(u,v) = (Q(u+v) - Q(u) - Q(v)) / 2.
    Rational bilinear(const Vec3& u, const Vec3& v) const;

private:
    std::array<std::array<Rational, 3>, 3> m_;
};

// The discriminant form e1^2 - 2 e0 e2 on (e0, e1, e2).
const QForm3& delta_form();

}  // namespace kstab
