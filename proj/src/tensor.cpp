#include "tyb/tensor.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tyb/kernels.hpp"

namespace tyb {

namespace {

std::size_t pow_dim(int local_dim, int arity) {
    std::size_t d = 1;
    for (int k = 0; k < arity; ++k) d *= static_cast<std::size_t>(local_dim);
    return d;
}

} // namespace

Operator::Operator(int local_dim, int arity)
    : local_dim_(local_dim), arity_(arity), dim_(pow_dim(local_dim, arity)) {
    if (local_dim < 1 || local_dim > 8)
        throw std::invalid_argument("Operator: local_dim must be in [1,8], got " +
                                    std::to_string(local_dim));
    if (arity < 1 || arity > 3)
        throw std::invalid_argument("Operator: arity must be in {1,2,3}, got " +
                                    std::to_string(arity));
    entries_.assign(dim_ * dim_, cplx(0.0, 0.0));
}

Operator Operator::identity(int local_dim, int arity) {
    Operator op(local_dim, arity);
    for (std::size_t i = 0; i < op.dim_; ++i) op.at(i, i) = 1.0;
    return op;
}

Operator Operator::matrix_unit(int local_dim, int i, int j) {
    Operator op(local_dim, 1);
    if (i < 0 || i >= local_dim || j < 0 || j >= local_dim)
        throw std::out_of_range("matrix_unit: index out of range");
    op.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1.0;
    return op;
}

bool Operator::is_finite() const {
    for (const cplx& z : entries_)
        if (!tyb::is_finite(z)) return false;
    return true;
}

double Operator::frobenius() const {
    return std::sqrt(kernels::active_table().sqnorm(entries_.size(), entries_.data()));
}

Operator Operator::adjoint() const {
    Operator out(local_dim_, arity_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out.at(c, r) = std::conj(at(r, c));
    return out;
}

cplx Operator::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

void Operator::require_same_shape(const Operator& rhs) const {
    if (local_dim_ != rhs.local_dim_ || arity_ != rhs.arity_)
        throw std::invalid_argument("Operator: shape mismatch (" + std::to_string(local_dim_) +
                                    "^" + std::to_string(arity_) + " vs " +
                                    std::to_string(rhs.local_dim_) + "^" +
                                    std::to_string(rhs.arity_) + ")");
}

Operator Operator::operator*(const Operator& rhs) const {
    require_same_shape(rhs);
    Operator out(local_dim_, arity_);
    kernels::active_table().matmul(dim_, data(), rhs.data(), out.data());
    return out;
}

Operator Operator::operator+(const Operator& rhs) const { return linear_comb(1.0, *this, 1.0, rhs); }

Operator Operator::operator-(const Operator& rhs) const { return linear_comb(1.0, *this, -1.0, rhs); }

Operator& Operator::operator+=(const Operator& rhs) {
    require_same_shape(rhs);
    kernels::active_table().axpby(size(), 1.0, data(), 1.0, rhs.data(), data());
    return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
    require_same_shape(rhs);
    kernels::active_table().axpby(size(), 1.0, data(), -1.0, rhs.data(), data());
    return *this;
}

Operator& Operator::operator*=(cplx s) {
    kernels::active_table().axpby(size(), s, data(), 0.0, data(), data());
    return *this;
}

Operator operator*(cplx s, const Operator& op) {
    Operator out = op;
    out *= s;
    return out;
}

Operator linear_comb(cplx alpha, const Operator& a, cplx beta, const Operator& b) {
    a.require_same_shape(b);
    Operator out(a.local_dim(), a.arity());
    kernels::active_table().axpby(a.size(), alpha, a.data(), beta, b.data(), out.data());
    return out;
}

Operator kron(const Operator& a, const Operator& b) {
    if (a.local_dim() != b.local_dim())
        throw std::invalid_argument("kron: local dimension mismatch");
    if (a.arity() + b.arity() > 3) throw std::invalid_argument("kron: arity overflow");
    Operator out(a.local_dim(), a.arity() + b.arity());
    const std::size_t da = a.dim(), db = b.dim();
    for (std::size_t ra = 0; ra < da; ++ra)
        for (std::size_t ca = 0; ca < da; ++ca) {
            const cplx av = a.at(ra, ca);
            if (av.real() == 0.0 && av.imag() == 0.0) continue;
            for (std::size_t rb = 0; rb < db; ++rb)
                for (std::size_t cb = 0; cb < db; ++cb)
                    out.at(ra * db + rb, ca * db + cb) = av * b.at(rb, cb);
        }
    return out;
}

Operator permutation(int local_dim) {
    const std::size_t n = static_cast<std::size_t>(local_dim);
    Operator out(local_dim, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i * n + j, j * n + i) = 1.0;
    return out;
}

Operator embed(const Operator& a, Slot slot, int local_dim) {
    if (a.local_dim() != local_dim) throw std::invalid_argument("embed: dimension mismatch");
    if (a.arity() != 2) throw std::invalid_argument("embed: operand must have arity 2");
    const Operator id = Operator::identity(local_dim, 1);
    return slot == Slot::s12 ? kron(a, id) : kron(id, a);
}

Residual residual(const Operator& a, const Operator& b) {
    if (a.local_dim() != b.local_dim() || a.arity() != b.arity())
        throw std::invalid_argument("residual: shape mismatch");
    const double abs2 = kernels::active_table().diff_sqnorm(a.size(), a.data(), b.data());
    Residual r;
    r.absolute = std::sqrt(abs2);
    const double scale = std::max(a.frobenius(), b.frobenius());
    r.relative = scale < DBL_EPSILON ? r.absolute : r.absolute / scale;
    return r;
}

} // namespace tyb
