#ifndef ABEL_LATTICE_HPP
#define ABEL_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace abel {

// Finite abelian group in invariant-factor form d1 | d2 | ... | dn with
// di > 1 (trivial factors are dropped; the empty list is the trivial
// group). The constructor normalizes an arbitrary tuple of positive
// integers via Smith reduction of the diagonal relation matrix.
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(const std::vector<long>& factors);

    const std::vector<long>& factors() const { return factors_; }
    int rank() const { return (int)factors_.size(); }
    long order() const;

    // All elements as residue vectors (mixed-radix enumeration order).
    std::vector<std::vector<long>> elements() const;

    friend bool operator==(const FiniteAbelianGroup& a,
                           const FiniteAbelianGroup& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator<(const FiniteAbelianGroup& a,
                          const FiniteAbelianGroup& b) {
        return a.factors_ < b.factors_;
    }

private:
    std::vector<long> factors_;
};

// Subgroup of a finite abelian group, canonically represented by the
// row-style Hermite normal form of the integer lattice L with
// D*Z^n <= L <= Z^n. Equal canonical keys iff equal subgroups as sets.
struct Subgroup {
    std::vector<long> parent_factors;        // ambient d1..dn (with 1s dropped)
    std::vector<std::vector<long>> basis;    // HNF rows, n x n
    long order = 1;

    std::vector<std::vector<long>> generators() const;  // basis rows mod parent
    FiniteAbelianGroup abstract_type() const;
    std::string canonical_key() const;
};

// The squared group (sum_i Z/di)^2 together with the commutator pairing:
// in terms of standard generators e_1..e_n, f_1..f_n the multiplicative
// form is <e_k, f_l> = exp(2 pi i delta_kl / d_k), stored additively as a
// residue in (1/lcm) Z / Z. The form is alternating and non-degenerate.
class PairingGroup {
public:
    explicit PairingGroup(const std::vector<long>& type);

    // Coordinate layout d_1..d_n, d_1..d_n (e-block then f-block).
    const std::vector<long>& base_factors() const { return base_; }
    int half_rank() const { return (int)(base_.size() / 2); }
    long base_order() const;
    long modulus() const { return lcm_; }

    // Pairing value scaled by the modulus: 0 means the pair commutes.
    long pairing(const std::vector<long>& x, const std::vector<long>& y) const;

private:
    std::vector<long> base_;
    long lcm_ = 1;
};

// Every subgroup exactly once. Throws bound_error when |G| exceeds the
// enumeration bound.
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& G,
                                          long bound = 4096);

// Number of homomorphisms f : K -> K^ = Hom(K, C*) with f(x)(y) = f(y)(x),
// by brute force over generator images.
long hom_sym_count(const FiniteAbelianGroup& K, long bound = 4096);

// nu via the subgroup-weighted sum of symmetric homomorphism counts.
long nu_subgroup_formula(const std::vector<long>& type, long bound = 4096);

// Independent oracle: number of maximal totally isotropic subgroups of
// (sum_i Z/di)^2 under the commutator pairing <e_k, f_l> = delta_kl / d_k.
long nu_isotropic(const std::vector<long>& type, long bound = 65536);

// nu(p^m, p^n) by the prime-power recursion with base nu(1, p^n) = sigma(p^n).
long nu_recursion(long p, int m, int n);

// Closed form: sum over k | gcd(d1,d2), l | d1 d2 / k^2 of k^3 l.
long nu_closed(long d1, long d2);

long divisor_sigma(long d);  // sum of divisors

}  // namespace abel

#endif
