#include "urd/galois.hpp"

#include "urd/error.hpp"

namespace urd {

std::optional<std::pair<int, int>> prime_power(int q)
{
    if (q < 2)
        return std::nullopt;
    int p = 2;
    while (p * p <= q && q % p != 0)
        ++p;
    if (q % p != 0)
        p = q;
    int k = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1)
        return std::nullopt;
    return std::pair{p, k};
}

namespace {

using Poly = std::vector<int>; // coefficients, constant first

Poly digits(int value, int p, int len)
{
    Poly out(len, 0);
    for (int i = 0; i < len; ++i) {
        out[i] = value % p;
        value /= p;
    }
    return out;
}

int degree(const Poly& a)
{
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0)
            return i;
    return -1;
}

int inverse_mod(int a, int p)
{
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1)
            return x;
    return 0;
}

// Remainder of a modulo b over GF(p).
Poly poly_mod(Poly a, const Poly& b, int p)
{
    int db = degree(b);
    int inv = inverse_mod(b[db], p);
    for (int da = degree(a); da >= db; da = degree(a)) {
        int factor = a[da] * inv % p;
        for (int i = 0; i <= db; ++i)
            a[da - db + i] = ((a[da - db + i] - factor * b[i]) % p + p) % p;
    }
    return a;
}

bool irreducible(const Poly& f, int p)
{
    int n = degree(f);
    // Trial division by every monic polynomial of degree 1..n/2.
    for (int d = 1; d <= n / 2; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i)
            count *= p;
        for (int low = 0; low < count; ++low) {
            Poly g = digits(low, p, d + 1);
            g[d] = 1;
            if (degree(poly_mod(f, g, p)) < 0)
                return false;
        }
    }
    return true;
}

} // namespace

GaloisField::GaloisField(int q)
    : q_(q)
{
    auto pk = prime_power(q);
    if (!pk)
        throw PreconditionError(std::to_string(q) + " is not a prime power");
    if (q > 1024)
        throw PreconditionError("field order " + std::to_string(q) + " too large");
    p_ = pk->first;
    k_ = pk->second;

    if (k_ == 1) {
        modulus_ = {0, 1};
    } else {
        int span = q_; // p^k choices for the lower coefficients
        for (int low = 0; low < span; ++low) {
            Poly f = digits(low, p_, k_ + 1);
            f[k_] = 1;
            if (f[0] != 0 && irreducible(f, p_)) {
                modulus_ = f;
                break;
            }
        }
    }

    add_.assign(static_cast<std::size_t>(q_) * q_, 0);
    mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (int a = 0; a < q_; ++a) {
        Poly pa = digits(a, p_, k_);
        for (int b = 0; b < q_; ++b) {
            Poly pb = digits(b, p_, k_);
            int sum = 0;
            for (int i = k_ - 1; i >= 0; --i)
                sum = sum * p_ + (pa[i] + pb[i]) % p_;
            add_[a * q_ + b] = sum;

            Poly prod(2 * k_, 0);
            for (int i = 0; i < k_; ++i)
                for (int j = 0; j < k_; ++j)
                    prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
            Poly rem = k_ == 1 ? Poly{prod[0]} : poly_mod(prod, modulus_, p_);
            int value = 0;
            for (int i = k_ - 1; i >= 0; --i)
                value = value * p_ + (i < static_cast<int>(rem.size()) ? rem[i] : 0);
            mul_[a * q_ + b] = value;
        }
    }
}

int GaloisField::neg(int a) const
{
    for (int b = 0; b < q_; ++b)
        if (add(a, b) == 0)
            return b;
    return 0;
}

} // namespace urd
