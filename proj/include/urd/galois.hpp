#ifndef URD_GALOIS_HPP
#define URD_GALOIS_HPP

#include <optional>
#include <utility>
#include <vector>

namespace urd {

// (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power(int q);

// GF(q), elements encoded as integers 0..q-1 (base-p digits are the
// polynomial coefficients, constant term least significant). The modulus
// is the first monic irreducible polynomial of degree k in that encoding,
// e.g. x^2+x+1 for GF(4) and x^3+x+1 for GF(8).
class GaloisField {
public:
    explicit GaloisField(int q);

    int order() const { return q_; }
    int characteristic() const { return p_; }
    // Coefficients of the modulus, constant term first (length k+1).
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }

private:
    int q_;
    int p_;
    int k_;
    std::vector<int> modulus_;
    std::vector<int> add_;
    std::vector<int> mul_;
};

} // namespace urd

#endif // URD_GALOIS_HPP
