#include "modrad/module_space.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "modrad/linalg.hpp"

namespace modrad {

namespace {

void require_equal_shapes(const ModuleElement& x, const ModuleElement& y, const char* op) {
    if (!(x.shape() == y.shape())) {
        throw ShapeMismatchError(std::string(op) + ": module elements have different shapes");
    }
}

}  // namespace

void validate_shape(const ModuleShape& shape) {
    if (shape.n == 0 || shape.m == 0) {
        throw ZeroDimensionError("module shape requires n >= 1 and m >= 1");
    }
}

AlgebraElement::AlgebraElement(const ModuleShape& shape, CMatrix mat)
    : shape_(shape), mat_(std::move(mat)) {
    validate_shape(shape_);
    if (mat_.rows() != shape_.n || mat_.cols() != shape_.n) {
        throw ShapeMismatchError("algebra element must be " + std::to_string(shape_.n) + "x" +
                                 std::to_string(shape_.n) + ", got " + std::to_string(mat_.rows()) +
                                 "x" + std::to_string(mat_.cols()));
    }
}

AlgebraElement AlgebraElement::zero(const ModuleShape& shape) {
    return AlgebraElement(shape, CMatrix(shape.n, shape.n));
}

AlgebraElement AlgebraElement::identity(const ModuleShape& shape) {
    return AlgebraElement(shape, CMatrix::identity(shape.n));
}

ModuleElement::ModuleElement(const ModuleShape& shape, CMatrix mat)
    : shape_(shape), mat_(std::move(mat)) {
    validate_shape(shape_);
    if (mat_.rows() != shape_.m || mat_.cols() != shape_.n) {
        throw ShapeMismatchError("module element must be " + std::to_string(shape_.m) + "x" +
                                 std::to_string(shape_.n) + ", got " + std::to_string(mat_.rows()) +
                                 "x" + std::to_string(mat_.cols()));
    }
}

ModuleElement ModuleElement::zero(const ModuleShape& shape) {
    return ModuleElement(shape, CMatrix(shape.m, shape.n));
}

ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
    require_equal_shapes(a, b, "operator+");
    return ModuleElement(a.shape(), a.mat() + b.mat());
}

ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
    require_equal_shapes(a, b, "operator-");
    return ModuleElement(a.shape(), a.mat() - b.mat());
}

ModuleElement operator*(Complex alpha, const ModuleElement& x) {
    return ModuleElement(x.shape(), alpha * x.mat());
}

AlgebraElement inner_product(const ModuleElement& x, const ModuleElement& y) {
    require_equal_shapes(x, y, "inner_product");
    return AlgebraElement(x.shape(), adjoint(x.mat()) * y.mat());
}

ModuleElement module_action(const ModuleElement& x, const AlgebraElement& a) {
    if (x.shape().n != a.shape().n) {
        throw ShapeMismatchError("module_action: algebra size does not match module columns");
    }
    return ModuleElement(x.shape(), x.mat() * a.mat());
}

double module_norm(const ModuleElement& x) {
    const AlgebraElement gram = inner_product(x, x);
    return std::sqrt(std::max(0.0, linalg::hermitian_max_eigenvalue(gram.mat())));
}

CMatrix theta(const ModuleElement& x, const ModuleElement& y) {
    require_equal_shapes(x, y, "theta");
    return x.mat() * adjoint(y.mat());
}

}  // namespace modrad
