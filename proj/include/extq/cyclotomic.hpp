// Exact arithmetic in cyclotomic fields Q(zeta_N), coordinates in the power basis.
#pragma once

#include <gmpxx.h>

#include <vector>

#include "extq/errors.hpp"

namespace extq {

// An element of Q(zeta_N) stored as rational coordinates on 1, zeta, ...,
// zeta^{phi(N)-1}, i.e. reduced modulo the N-th cyclotomic polynomial.
// Mixed-N arithmetic lifts both operands into Q(zeta_lcm).
class Cyclotomic {
  public:
    Cyclotomic() : n_(1), c_(1, 0) {}
    explicit Cyclotomic(const mpq_class& q) : n_(1), c_(1, q) {}
    Cyclotomic(long n, std::vector<mpq_class> coeffs);  // coeffs reduced mod Phi_n

    static Cyclotomic root_of_unity(long num, long den);  // e^{2*pi*i*num/den}

    long conductor() const { return n_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic operator*(const mpq_class& q) const;
    Cyclotomic operator/(const mpq_class& q) const;

    Cyclotomic conj() const;  // complex conjugation, zeta -> zeta^{-1}

    bool is_zero() const;
    bool is_rational() const;
    mpq_class rational_value() const;  // throws if not rational

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
    // Deterministic total order (for canonical sorting), not a numeric order.
    static int cmp(const Cyclotomic& a, const Cyclotomic& b);

    std::string str() const;

  private:
    long n_;
    std::vector<mpq_class> c_;

    Cyclotomic lifted(long m) const;  // image in Q(zeta_m), n_ | m
    static Cyclotomic from_exponents(long n, const std::vector<mpq_class>& by_exponent);
    void trim();
};

// N-th cyclotomic polynomial, integer coefficients, ascending degree.
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

}  // namespace extq
