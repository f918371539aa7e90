#pragma once

#include "modrad/module_space.hpp"

namespace modrad {

inline constexpr double kUnitModulusTol = 1e-12;
inline constexpr double kProductIdentityTol = 1e-11;

// Element of the block algebra sitting over a module shape: an
// (n+m) x (n+m) matrix split into the four corners
//   [ block_a  block_l ]
//   [ block_r  block_k ]
// with block_a n x n, block_l n x m, block_r m x n, block_k m x m.
class LinkingElement {
public:
    LinkingElement(const ModuleShape& shape, CMatrix block_a, CMatrix block_l, CMatrix block_r,
                   CMatrix block_k);
    static LinkingElement zero(const ModuleShape& shape);

    const ModuleShape& shape() const { return shape_; }
    const CMatrix& block_a() const { return block_a_; }
    const CMatrix& block_l() const { return block_l_; }
    const CMatrix& block_r() const { return block_r_; }
    const CMatrix& block_k() const { return block_k_; }

    friend LinkingElement operator+(const LinkingElement& a, const LinkingElement& b);
    friend LinkingElement operator*(Complex alpha, const LinkingElement& e);

private:
    ModuleShape shape_;
    CMatrix block_a_;
    CMatrix block_l_;
    CMatrix block_r_;
    CMatrix block_k_;
};

// a acting by left multiplication, upper-left corner.
LinkingElement embed_T(const AlgebraElement& a);

// b -> xb, lower-left corner.
LinkingElement embed_r(const ModuleElement& x);

// y -> <x,y>, upper-right corner; the adjoint of embed_r(x).
LinkingElement embed_l(const ModuleElement& x);

// z -> x<y,z>, lower-right corner.
LinkingElement embed_theta(const ModuleElement& x, const ModuleElement& y);

// Conjugate transpose: corners swap and conjugate so that
// assemble(adjoint_linking(e)) = adjoint(assemble(e)).
LinkingElement adjoint_linking(const LinkingElement& e);

// The full (n+m) x (n+m) matrix.
CMatrix assemble(const LinkingElement& e);

// Operator norm of the assembled matrix.
double linking_norm(const LinkingElement& e);

// The off-diagonal element [[0, conj(lambda) l_x],[lambda r_x, 0]] whose
// norm, maximized over unit lambda and halved, is the module numerical
// radius. Self-adjoint for every unit lambda.
LinkingElement omega_element(Complex lambda, const ModuleElement& x);

// Largest entrywise deviation, over assembled matrices, among the four
// identities
//   l_x r_y = T_<x,y>,  r_x l_y = theta_{x,y},
//   r_(xa) = r_x T_a,   l_(xa) = T_(a*) l_x.
double product_identities_deviation(const ModuleElement& x, const ModuleElement& y,
                                    const AlgebraElement& a);

// True when the deviation above is within kProductIdentityTol.
bool check_product_identities(const ModuleElement& x, const ModuleElement& y,
                              const AlgebraElement& a);

}  // namespace modrad
