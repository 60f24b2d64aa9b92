#include "extq/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace extq {

namespace {

long phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

// Polynomial division of integer polynomials known to divide exactly.
std::vector<mpz_class> exact_div(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    std::vector<mpz_class> q(num.size() - den.size() + 1, 0);
    for (int i = int(q.size()) - 1; i >= 0; --i) {
        mpz_class c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    return q;
}

std::map<long, std::vector<mpz_class>> g_phi_cache;
std::mutex g_phi_mutex;

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
    if (n <= 0) throw Error("cyclotomic polynomial index must be positive");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    // Fill the cache for every divisor of n in increasing order.
    for (long d = 1; d <= n; ++d) {
        if (n % d || g_phi_cache.count(d)) continue;
        std::vector<mpz_class> poly(d + 1, 0);
        poly[0] = -1;
        poly[d] = 1;
        for (long e = 1; e < d; ++e)
            if (d % e == 0) poly = exact_div(poly, g_phi_cache.at(e));
        g_phi_cache.emplace(d, std::move(poly));
    }
    return g_phi_cache.at(n);
}

Cyclotomic::Cyclotomic(long n, std::vector<mpq_class> coeffs) : n_(n), c_(std::move(coeffs)) {
    size_t deg = size_t(phi(n_));
    if (c_.size() > deg) throw Error("cyclotomic coefficient vector too long");
    c_.resize(deg ? deg : 1, 0);
    for (auto& q : c_) q.canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(long num, long den) {
    if (den <= 0) throw Error("root_of_unity: order must be positive");
    long g = std::gcd(((num % den) + den) % den, den);
    long n = den / g;
    long k = (((num % den) + den) % den) / g;
    std::vector<mpq_class> by_exp(n, 0);
    by_exp[k % n] = 1;
    return from_exponents(n, by_exp);
}

// Reduce a vector of coefficients on zeta^0..zeta^{n-1} modulo Phi_n.
Cyclotomic Cyclotomic::from_exponents(long n, const std::vector<mpq_class>& by_exponent) {
    const auto& px = cyclotomic_polynomial(n);
    size_t deg = px.size() - 1;  // phi(n)
    std::vector<mpq_class> work(by_exponent);
    work.resize(std::max(by_exponent.size(), deg), 0);
    for (size_t i = work.size(); i-- > deg;) {
        mpq_class c = work[i];
        if (c == 0) continue;
        work[i] = 0;
        // zeta^i = zeta^{i-deg} * (zeta^deg) with zeta^deg = -sum_{j<deg} px[j] zeta^j.
        for (size_t j = 0; j < deg; ++j) work[i - deg + j] -= c * mpq_class(px[j]);
    }
    work.resize(deg ? deg : 1);
    Cyclotomic r;
    r.n_ = n;
    r.c_ = std::move(work);
    for (auto& q : r.c_) q.canonicalize();
    return r;
}

Cyclotomic Cyclotomic::lifted(long m) const {
    if (m == n_) return *this;
    if (m % n_) throw Error("cyclotomic lift: target conductor not a multiple");
    long k = m / n_;
    std::vector<mpq_class> by_exp(size_t(m), 0);
    for (size_t i = 0; i < c_.size(); ++i) by_exp[i * k] += c_[i];
    return from_exponents(m, by_exp);
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long m = std::lcm(n_, o.n_);
    Cyclotomic a = lifted(m), b = o.lifted(m);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    long m = std::lcm(n_, o.n_);
    Cyclotomic a = lifted(m), b = o.lifted(m);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    long m = std::lcm(n_, o.n_);
    Cyclotomic a = lifted(m), b = o.lifted(m);
    std::vector<mpq_class> prod(a.c_.size() + b.c_.size(), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return from_exponents(m, prod);
}

Cyclotomic Cyclotomic::operator*(const mpq_class& q) const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x *= q;
    return r;
}

Cyclotomic Cyclotomic::operator/(const mpq_class& q) const {
    if (q == 0) throw Error("cyclotomic division by zero");
    Cyclotomic r = *this;
    for (auto& x : r.c_) x /= q;
    return r;
}

Cyclotomic Cyclotomic::conj() const {
    std::vector<mpq_class> by_exp(size_t(n_), 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        by_exp[(n_ - long(i)) % n_] += c_[i];
    }
    return from_exponents(n_, by_exp);
}

bool Cyclotomic::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

mpq_class Cyclotomic::rational_value() const {
    if (!is_rational()) throw Error("cyclotomic value is not rational: " + str());
    return c_[0];
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    long m = std::lcm(n_, o.n_);
    return lifted(m).c_ == o.lifted(m).c_;
}

int Cyclotomic::cmp(const Cyclotomic& a, const Cyclotomic& b) {
    long m = std::lcm(a.n_, b.n_);
    Cyclotomic x = a.lifted(m), y = b.lifted(m);
    for (size_t i = 0; i < x.c_.size(); ++i) {
        int c = ::cmp(x.c_[i], y.c_[i]);
        if (c) return c;
    }
    return 0;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (any) os << " + ";
        os << c_[i].get_str();
        if (i) os << "*z" << n_ << "^" << i;
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

void Cyclotomic::trim() {}

}  // namespace extq
