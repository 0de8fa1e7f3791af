#include "qwa/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qwa {

bool Prime::is_prime(long n) noexcept {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Prime::Prime(int p, int cap) : value_(p) {
    if (!is_prime(p))
        throw InputError("p = " + std::to_string(p) + " is not prime");
    if (p > cap)
        throw InputError("p = " + std::to_string(p) + " exceeds the configured cap " + std::to_string(cap));
}

std::vector<Integer> canonicalize(int p, const std::vector<Integer>& raw) {
    if (p < 2) throw StructuralError("cyclotomic modulus must be a prime >= 2");
    std::vector<Integer> folded(p);
    for (std::size_t k = 0; k < raw.size(); ++k)
        folded[k % p] += raw[k];
    // q^{p-1} = -(1 + q + ... + q^{p-2})
    const Integer top = folded[p - 1];
    folded.pop_back();
    if (top != 0)
        for (auto& c : folded) c -= top;
    return folded;
}

CycInt CycInt::zero(int p) { return CycInt(p, std::vector<Integer>(p - 1)); }

CycInt CycInt::one(int p) { return from_int(p, 1); }

CycInt CycInt::from_int(int p, const Integer& n) {
    std::vector<Integer> c(p - 1);
    c[0] = n;
    return CycInt(p, std::move(c));
}

CycInt CycInt::q_power(int p, long k) {
    long r = k % p;
    if (r < 0) r += p;
    std::vector<Integer> raw(r + 1);
    raw[r] = 1;
    return CycInt(p, canonicalize(p, raw));
}

CycInt CycInt::from_raw(int p, const std::vector<Integer>& raw) { return CycInt(p, canonicalize(p, raw)); }

CycInt CycInt::from_coeffs(int p, std::vector<Integer> coeffs) {
    if (static_cast<int>(coeffs.size()) != p - 1)
        throw StructuralError("expected " + std::to_string(p - 1) + " coefficients, got " +
                              std::to_string(coeffs.size()));
    return CycInt(p, std::move(coeffs));
}

bool CycInt::is_zero() const noexcept {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycInt::is_one() const noexcept {
    if (c_[0] != 1) return false;
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

void CycInt::check_same(const CycInt& b) const {
    if (p_ != b.p_)
        throw StructuralError("cyclotomic integers over different primes: " + std::to_string(p_) + " vs " +
                              std::to_string(b.p_));
}

CycInt CycInt::operator-() const {
    CycInt r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CycInt& CycInt::operator+=(const CycInt& b) {
    check_same(b);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += b.c_[k];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& b) {
    check_same(b);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= b.c_[k];
    return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    a.check_same(b);
    const int p = a.p_;
    // cyclic convolution in Z[q]/(q^p - 1), then drop the q^{p-1} term
    std::vector<Integer> acc(p);
    for (int i = 0; i < p - 1; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < p - 1; ++j) {
            if (b.c_[j] == 0) continue;
            int k = i + j;
            if (k >= p) k -= p;
            mpz_addmul(acc[k].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return CycInt(p, canonicalize(p, acc));
}

CycInt& CycInt::operator*=(const CycInt& b) { return *this = *this * b; }

CycInt& CycInt::operator*=(const Integer& n) {
    for (auto& c : c_) c *= n;
    return *this;
}

CycInt CycInt::pow(unsigned long e) const {
    CycInt result = one(p_);
    CycInt base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

CycInt CycInt::conjugate(int k) const {
    if (k % p_ == 0) throw StructuralError("conjugation exponent must be prime to p");
    long kk = ((k % p_) + p_) % p_;
    std::vector<Integer> raw(p_);
    for (int i = 0; i < p_ - 1; ++i) raw[(i * kk) % p_] += c_[i];
    return CycInt(p_, canonicalize(p_, raw));
}

Integer CycInt::norm() const {
    CycInt prod = *this;
    for (int k = 2; k < p_; ++k) prod *= conjugate(k);
    return prod.c_[0];
}

std::optional<CycInt> CycInt::exact_quotient(const CycInt& b) const {
    check_same(b);
    if (b.is_zero()) throw UnitInversionError("division by zero in R");
    // a/b = a * prod_{k>=2} sigma_k(b) / N(b)
    CycInt num = *this;
    for (int k = 2; k < p_; ++k) num *= b.conjugate(k);
    const Integer n = b.norm();
    for (auto& c : num.c_) {
        if (!mpz_divisible_p(c.get_mpz_t(), n.get_mpz_t())) return std::nullopt;
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), n.get_mpz_t());
    }
    return num;
}

bool CycInt::is_unit() const {
    if (is_zero()) return false;
    const Integer n = norm();
    return n == 1 || n == -1;
}

int CycInt::reduce_mod_J() const {
    Integer s = 0;
    for (const auto& c : c_) s += c;
    Integer r = s % p_;
    if (r < 0) r += p_;
    return static_cast<int>(r.get_si());
}

std::complex<double> CycInt::complex_eval() const {
    std::complex<double> z = 0;
    const double theta = 2.0 * std::numbers::pi / p_;
    for (int k = 0; k < p_ - 1; ++k) {
        if (c_[k] == 0) continue;
        z += c_[k].get_d() * std::polar(1.0, theta * k);
    }
    return z;
}

std::string CycInt::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < p_ - 1; ++k) {
        const Integer& c = c_[k];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "·";
            os << "q";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

CycInt q_int(int p, long n) {
    if (n < 0) throw InputError("q-integer index must be nonnegative");
    // coefficient of q^k counts the j < n with j = k mod p
    std::vector<Integer> raw(p);
    const long full = n / p;
    const long rest = n % p;
    for (int k = 0; k < p; ++k) raw[k] = full + (k < rest ? 1 : 0);
    return CycInt::from_raw(p, raw);
}

CycInt q_factorial(int p, long n) {
    if (n < 0) throw InputError("q-factorial index must be nonnegative");
    CycInt r = CycInt::one(p);
    for (long k = 2; k <= n; ++k) {
        r *= q_int(p, k);
        if (r.is_zero()) break;
    }
    return r;
}

CycInt q_int_inverse(int p, long i) {
    long r = i % p;
    if (r < 0) r += p;
    if (r == 0) throw UnitInversionError("[" + std::to_string(i) + "] is not a unit: p divides i");
    if (i < 0) throw InputError("q-integer index must be nonnegative");
    long j = 1;
    while ((r * j) % p != 1) ++j;
    std::vector<Integer> raw(p);
    for (long k = 0; k < j; ++k) raw[(i % p) * k % p] += 1;
    return CycInt::from_raw(p, raw);
}

CycInt q_factorial_inverse(int p, long n) {
    if (n >= p) throw UnitInversionError("[" + std::to_string(n) + "]! vanishes for n >= p");
    CycInt r = CycInt::one(p);
    for (long k = 2; k <= n; ++k) r *= q_int_inverse(p, k);
    return r;
}

} // namespace qwa
