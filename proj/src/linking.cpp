#include "modrad/linking.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "modrad/linalg.hpp"

namespace modrad {

namespace {

void require_block(const CMatrix& block, std::size_t rows, std::size_t cols, const char* which) {
    if (block.rows() != rows || block.cols() != cols) {
        throw ShapeMismatchError(std::string("linking element ") + which + " corner must be " +
                                 std::to_string(rows) + "x" + std::to_string(cols));
    }
}

}  // namespace

LinkingElement::LinkingElement(const ModuleShape& shape, CMatrix block_a, CMatrix block_l,
                               CMatrix block_r, CMatrix block_k)
    : shape_(shape),
      block_a_(std::move(block_a)),
      block_l_(std::move(block_l)),
      block_r_(std::move(block_r)),
      block_k_(std::move(block_k)) {
    validate_shape(shape_);
    require_block(block_a_, shape_.n, shape_.n, "algebra");
    require_block(block_l_, shape_.n, shape_.m, "left-multiplier");
    require_block(block_r_, shape_.m, shape_.n, "right-multiplier");
    require_block(block_k_, shape_.m, shape_.m, "compact");
}

LinkingElement LinkingElement::zero(const ModuleShape& shape) {
    return LinkingElement(shape, CMatrix(shape.n, shape.n), CMatrix(shape.n, shape.m),
                          CMatrix(shape.m, shape.n), CMatrix(shape.m, shape.m));
}

LinkingElement operator+(const LinkingElement& a, const LinkingElement& b) {
    if (!(a.shape() == b.shape())) {
        throw ShapeMismatchError("operator+: linking elements have different shapes");
    }
    return LinkingElement(a.shape(), a.block_a() + b.block_a(), a.block_l() + b.block_l(),
                          a.block_r() + b.block_r(), a.block_k() + b.block_k());
}

LinkingElement operator*(Complex alpha, const LinkingElement& e) {
    return LinkingElement(e.shape(), alpha * e.block_a(), alpha * e.block_l(),
                          alpha * e.block_r(), alpha * e.block_k());
}

LinkingElement embed_T(const AlgebraElement& a) {
    LinkingElement e = LinkingElement::zero(a.shape());
    return LinkingElement(a.shape(), a.mat(), e.block_l(), e.block_r(), e.block_k());
}

LinkingElement embed_r(const ModuleElement& x) {
    LinkingElement e = LinkingElement::zero(x.shape());
    return LinkingElement(x.shape(), e.block_a(), e.block_l(), x.mat(), e.block_k());
}

LinkingElement embed_l(const ModuleElement& x) {
    LinkingElement e = LinkingElement::zero(x.shape());
    return LinkingElement(x.shape(), e.block_a(), adjoint(x.mat()), e.block_r(), e.block_k());
}

LinkingElement embed_theta(const ModuleElement& x, const ModuleElement& y) {
    LinkingElement e = LinkingElement::zero(x.shape());
    return LinkingElement(x.shape(), e.block_a(), e.block_l(), e.block_r(), theta(x, y));
}

LinkingElement adjoint_linking(const LinkingElement& e) {
    return LinkingElement(e.shape(), adjoint(e.block_a()), adjoint(e.block_r()),
                          adjoint(e.block_l()), adjoint(e.block_k()));
}

CMatrix assemble(const LinkingElement& e) {
    const std::size_t n = e.shape().n;
    const std::size_t m = e.shape().m;
    CMatrix full(n + m, n + m);
    full.set_block(0, 0, e.block_a());
    full.set_block(0, n, e.block_l());
    full.set_block(n, 0, e.block_r());
    full.set_block(n, n, e.block_k());
    return full;
}

double linking_norm(const LinkingElement& e) {
    return linalg::operator_norm(assemble(e));
}

LinkingElement omega_element(Complex lambda, const ModuleElement& x) {
    if (std::abs(std::abs(lambda) - 1.0) > kUnitModulusTol) {
        throw NotUnitModulusError("omega_element requires |lambda| = 1");
    }
    LinkingElement zero = LinkingElement::zero(x.shape());
    return LinkingElement(x.shape(), zero.block_a(), std::conj(lambda) * adjoint(x.mat()),
                          lambda * x.mat(), zero.block_k());
}

double product_identities_deviation(const ModuleElement& x, const ModuleElement& y,
                                    const AlgebraElement& a) {
    if (!(x.shape() == y.shape()) || x.shape().n != a.shape().n) {
        throw ShapeMismatchError("product_identities_deviation: inconsistent shapes");
    }
    const CMatrix lx = assemble(embed_l(x));
    const CMatrix ly = assemble(embed_l(y));
    const CMatrix rx = assemble(embed_r(x));
    const CMatrix ry = assemble(embed_r(y));
    const CMatrix ta = assemble(embed_T(a));
    const ModuleElement xa = module_action(x, a);

    const double d1 = max_abs_diff(lx * ry, assemble(embed_T(inner_product(x, y))));
    const double d2 = max_abs_diff(rx * ly, assemble(embed_theta(x, y)));
    const double d3 = max_abs_diff(assemble(embed_r(xa)), rx * ta);
    const double d4 = max_abs_diff(assemble(embed_l(xa)),
                                   assemble(embed_T(AlgebraElement(a.shape(), adjoint(a.mat())))) * lx);
    return std::max(std::max(d1, d2), std::max(d3, d4));
}

bool check_product_identities(const ModuleElement& x, const ModuleElement& y,
                              const AlgebraElement& a) {
    return product_identities_deviation(x, y, a) <= kProductIdentityTol;
}

}  // namespace modrad
