#pragma once

#include <cstddef>
#include <vector>

#include "tyb/scalar.hpp"

namespace tyb {

// Frobenius distance between two operators of equal shape. The relative
// value divides by the larger operand norm, falling back to the absolute
// value when both operands are numerically zero.
struct Residual {
    double absolute = 0.0;
    double relative = 0.0;
};

/// Dense complex operator on (C^N)^{⊗k}, k in {1,2,3}. Rows and columns are
/// composite indices (i_1,...,i_k) -> sum i_m N^{k-m} (first factor most
/// significant). Supported envelope is N <= 8, so the largest matrix is
/// 512 x 512; everything stays dense.
class Operator {
public:
    Operator(int local_dim, int arity); // zero operator

    static Operator identity(int local_dim, int arity);
    static Operator matrix_unit(int local_dim, int i, int j); // arity-1 E_ij

    int local_dim() const { return local_dim_; }
    int arity() const { return arity_; }
    std::size_t dim() const { return dim_; }

    cplx at(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
    cplx& at(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
    const cplx* data() const { return entries_.data(); }
    cplx* data() { return entries_.data(); }
    std::size_t size() const { return entries_.size(); }

    bool is_finite() const;
    double frobenius() const;
    Operator adjoint() const;
    cplx trace() const;

    Operator operator*(const Operator& rhs) const;
    Operator operator+(const Operator& rhs) const;
    Operator operator-(const Operator& rhs) const;
    Operator& operator+=(const Operator& rhs);
    Operator& operator-=(const Operator& rhs);
    Operator& operator*=(cplx s);
    friend Operator operator*(cplx s, const Operator& op);
    friend Operator linear_comb(cplx alpha, const Operator& a, cplx beta, const Operator& b);

private:
    int local_dim_;
    int arity_;
    std::size_t dim_;
    std::vector<cplx> entries_;

    void require_same_shape(const Operator& rhs) const;
};

// out = alpha*a + beta*b, shapes must agree.
Operator linear_comb(cplx alpha, const Operator& a, cplx beta, const Operator& b);

// Tensor product; composite indices follow the convention above.
Operator kron(const Operator& a, const Operator& b);

// Flip operator P on C^N ⊗ C^N: P[(i,j),(k,l)] = delta_il delta_jk.
Operator permutation(int local_dim);

enum class Slot { s12, s23 };

// Embed an arity-2 operator into the three-fold product, acting on the
// named pair of factors and as identity on the third.
Operator embed(const Operator& a, Slot slot, int local_dim);

Residual residual(const Operator& a, const Operator& b);

} // namespace tyb
