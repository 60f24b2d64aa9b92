// Exact integer matrices, Smith normal form and coinvariant lattices.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "extq/errors.hpp"

namespace extq {

using VecZ = std::vector<mpz_class>;
using VecQ = std::vector<mpq_class>;

class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    VecZ apply(const VecZ& v) const;   // matrix * column vector
    VecQ apply(const VecQ& v) const;

    mpz_class det() const;             // square only, exact (fraction-free elimination)
    // Inverse of a matrix with det = ±1; throws otherwise.
    IntMatrix inverse_unimodular() const;

    bool is_zero() const;
    std::string str() const;

  private:
    int rows_, cols_;
    std::vector<mpz_class> a_;
};

struct SnfResult {
    IntMatrix U, V, D;                 // U*M*V = D, U and V unimodular, D diagonal
    std::vector<mpz_class> invariant_factors;  // nonzero factors first, zeros for rank deficiency
    int rank = 0;
};

SnfResult smith_normal_form(const IntMatrix& m);

struct CoinvariantDecomposition {
    int free_rank = 0;
    std::vector<mpz_class> torsion;    // invariant factors > 1
    std::vector<VecQ> torsion_lifts;   // one generator in Q^n per torsion factor
};

// Structure of Z^n / M Z^n for square M.
CoinvariantDecomposition coinvariant_decomposition(const IntMatrix& m);

// Kernel of M acting on Z^cols: a basis of the (saturated) lattice ker(M).
std::vector<VecZ> kernel_basis(const IntMatrix& m);

mpq_class mod1(const mpq_class& q);    // representative in [0,1)
bool is_integral(const mpq_class& q);
VecQ mod1(const VecQ& v);

// Exact solution x of [columns] x = target, if one exists.
std::optional<VecQ> solve_linear(const std::vector<VecQ>& columns, const VecQ& target);

}  // namespace extq
