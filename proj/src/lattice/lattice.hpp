#pragma once

#include "algebra/matq.hpp"
#include "algebra/ring.hpp"

#include <memory>
#include <string>
#include <vector>

namespace cypair {

// Named basis with a symmetric rational intersection form.
class GramLattice {
public:
    GramLattice(std::vector<std::string> basis, MatQ gram);

    size_t rank() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    const MatQ& gram() const { return gram_; }
    // Rank-0 ring over the basis names, for parsing class expressions.
    const RingPtr& class_ring() const { return class_ring_; }

    bool structurally_equal(const GramLattice& o) const {
        return basis_ == o.basis_ && gram_ == o.gram_;
    }

private:
    std::vector<std::string> basis_;
    MatQ gram_;
    RingPtr class_ring_;
};

using LatticePtr = std::shared_ptr<const GramLattice>;

struct DivClass {
    LatticePtr lattice;
    VecQ coords;
};

DivClass parse_class(const LatticePtr& lattice, const std::string& expr);
std::string class_to_string(const DivClass& c);

Rational inner(const DivClass& u, const DivClass& v);
Rational sublattice_det(const std::vector<DivClass>& classes);

// Intersection matrix of (r(L'), r(xi)) on the anticanonical K3 of P(E) over
// P^2: (2, c1+3; c1+3, c1^2+3c1-2c2).
MatQ restriction_gram(long c1, long c2);

// Anticanonical class of P(E): (r+1) xi - pi^*(c1(E) + K_Y), in the basis
// (L', xi). For P^2 the base canonical coefficient is -3; over a point it is
// 0 and L' is trivial.
struct BundleAnticanonical {
    Rational l_prime;
    Rational xi;
};
BundleAnticanonical pe_anticanonical(long c1);
BundleAnticanonical pe_anticanonical_general(long bundle_rank, long c1, long base_canonical);

// Chern classes (c1, c2) = (k, 1) of the extension 0 -> O -> E -> I_p(k) -> 0,
// certified by the Koszul identity c_t(I_p(k)) (1+(k-2)t) = (1+(k-1)t)^2 in
// Q[t]/(t^3). The extension is nontrivial only for k <= 2.
std::pair<long, long> chern_from_ideal_sequence(long k);

// Exact nonnegative rational decomposition target = sum lambda_i gen_i, or
// nullopt. When the solution set is positive-dimensional, returns the average
// of the vertices of the solution polytope (deterministic and symmetric).
std::optional<VecQ> cone_decompose(const std::vector<DivClass>& generators,
                                   const DivClass& target);

struct RRCurveData {
    Rational deg_p;
    Rational deg_k;
    Rational genus;
    std::pair<long, long> h0_bounds;
};

// Riemann-Roch bookkeeping for a curve on a K3 surface: P = O_curve(twist *
// polarization), K = O_curve(curve). h0 via chi = degP + 1 - genus, with
// h0(K-P) in {0,1} when deg(K-P) = 0 and h0(K-P) = 0 when deg(K-P) < 0.
RRCurveData rr_on_k3_curve(const DivClass& curve, const DivClass& polarization, long twist);

struct BundleCase {
    int id;            // 1..11 (paper numbering)
    long c1;
    long c2;
    bool fano;         // List 1 vs List 2
    std::string description;
};

// The eleven rank-2 bundle cases on P^2 with c1 in {0,-1} and P(E) Fano or
// strictly weak Fano; stable ranges expanded into individual entries.
std::vector<BundleCase> weak_fano_bundle_table();

}  // namespace cypair
