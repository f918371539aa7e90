#pragma once

#include "modrad/errors.hpp"
#include "modrad/matrix.hpp"

namespace modrad {

// Ambient sizes: the scalar algebra is n x n matrices, module elements are
// m x n matrices over it.
struct ModuleShape {
    std::size_t n = 1;
    std::size_t m = 1;

    friend bool operator==(const ModuleShape&, const ModuleShape&) = default;
};

void validate_shape(const ModuleShape& shape);

// Element of the coefficient algebra (an n x n matrix).
class AlgebraElement {
public:
    AlgebraElement(const ModuleShape& shape, CMatrix mat);
    static AlgebraElement zero(const ModuleShape& shape);
    static AlgebraElement identity(const ModuleShape& shape);

    const ModuleShape& shape() const { return shape_; }
    const CMatrix& mat() const { return mat_; }

private:
    ModuleShape shape_;
    CMatrix mat_;
};

// Module element (an m x n matrix acted on by the algebra from the right).
class ModuleElement {
public:
    ModuleElement(const ModuleShape& shape, CMatrix mat);
    static ModuleElement zero(const ModuleShape& shape);

    const ModuleShape& shape() const { return shape_; }
    const CMatrix& mat() const { return mat_; }

    friend ModuleElement operator+(const ModuleElement& a, const ModuleElement& b);
    friend ModuleElement operator-(const ModuleElement& a, const ModuleElement& b);
    friend ModuleElement operator*(Complex alpha, const ModuleElement& x);

private:
    ModuleShape shape_;
    CMatrix mat_;
};

// Algebra-valued pairing x* y; conjugate-symmetric and positive on the
// diagonal by construction.
AlgebraElement inner_product(const ModuleElement& x, const ModuleElement& y);

// Right action x a.
ModuleElement module_action(const ModuleElement& x, const AlgebraElement& a);

// ||x|| = ||<x,x>||^(1/2), the module norm.
double module_norm(const ModuleElement& x);

// The compact operator z -> x <y, z>, realized as the m x m matrix x y*.
CMatrix theta(const ModuleElement& x, const ModuleElement& y);

}  // namespace modrad
