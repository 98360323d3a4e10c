#include "liouville/moebius.hpp"

#include <cmath>

#include "liouville/errors.hpp"

namespace liouville {

namespace {
constexpr double kPoleTol = 1e-12;
}

MoebiusMap::MoebiusMap(double alpha, double beta, double gamma, double delta) {
    const double det = alpha * delta - beta * gamma;
    if (!(det > 0.0)) {
        throw DomainError("MoebiusMap: determinant must be positive");
    }
    const double s = std::sqrt(det);
    alpha_ = alpha / s;
    beta_ = beta / s;
    gamma_ = gamma / s;
    delta_ = delta / s;
}

double MoebiusMap::apply(double x) const {
    const double den = gamma_ * x + delta_;
    if (std::abs(den) < kPoleTol) {
        throw SingularityError("MoebiusMap::apply: pole crossing");
    }
    return (alpha_ * x + beta_) / den;
}

double MoebiusMap::deriv(double x) const {
    const double den = gamma_ * x + delta_;
    if (std::abs(den) < kPoleTol) {
        throw SingularityError("MoebiusMap::deriv: pole crossing");
    }
    return 1.0 / (den * den);
}

MoebiusMap compose(const MoebiusMap& a, const MoebiusMap& b) {
    return {a.alpha() * b.alpha() + a.beta() * b.gamma(),
            a.alpha() * b.beta() + a.beta() * b.delta(),
            a.gamma() * b.alpha() + a.delta() * b.gamma(),
            a.gamma() * b.beta() + a.delta() * b.delta()};
}

}  // namespace liouville
