#pragma once

namespace liouville {

/// Fractional-linear map x -> (alpha x + beta)/(gamma x + delta), stored with
/// determinant normalized to 1. Inputs with non-positive determinant are
/// rejected: the group acting here is SL(2,R), orientation included.
class MoebiusMap {
public:
    MoebiusMap(double alpha, double beta, double gamma, double delta);

    static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }
    double delta() const { return delta_; }

    /// (alpha x + beta)/(gamma x + delta); throws SingularityError within
    /// 1e-12 of the pole.
    double apply(double x) const;

    /// d/dx of apply: 1/(gamma x + delta)^2 for a determinant-1 map.
    double deriv(double x) const;

    MoebiusMap inverse() const { return {delta_, -beta_, -gamma_, alpha_}; }

private:
    double alpha_, beta_, gamma_, delta_;
};

/// Map equal to applying `b` first, then `a` (matrix product a*b).
MoebiusMap compose(const MoebiusMap& a, const MoebiusMap& b);

}  // namespace liouville
