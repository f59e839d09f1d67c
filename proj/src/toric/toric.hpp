#pragma once

#include "algebra/parse.hpp"
#include "algebra/ratfunc.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cypair {

// A maximal GIT chamber of the secondary fan of a rank <= 2 weight matrix.
struct Chamber {
    std::vector<std::vector<long>> rays;  // primitive; 1 ray (rank 1) or 2 (rank 2)
    std::vector<size_t> positive_vars;    // variables whose columns lie in the closed chamber

    bool same_rays(const Chamber& o) const { return rays == o.rays; }
};

// Ordered counterclockwise; rank-1 fans list the positive chamber first.
std::vector<Chamber> chamber_decomposition(const RingPtr& ring);

class ToricAmbient {
public:
    ToricAmbient(RingPtr ring, Chamber chamber, std::string name);
    // Chamber picked as the first chamber of the decomposition.
    static ToricAmbient standard(RingPtr ring, std::string name);
    // Chamber identified by its ray set.
    static ToricAmbient with_chamber_rays(RingPtr ring,
                                          std::vector<std::vector<long>> rays,
                                          std::string name);

    const RingPtr& ring() const { return ring_; }
    const Chamber& chamber() const { return chamber_; }
    const std::string& name() const { return name_; }
    size_t dim() const { return ring_->num_vars() - ring_->rank(); }

private:
    RingPtr ring_;
    Chamber chamber_;
    std::string name_;
};

struct IrrelevantIdeal {
    // minimal monomial generators, each a sorted list of variable indices
    std::vector<std::vector<size_t>> generators;
    // product-of-coordinate-sets presentation when one exists
    std::optional<std::pair<std::vector<size_t>, std::vector<size_t>>> product;
};

IrrelevantIdeal irrelevant_ideal(const ToricAmbient& ambient);
// Stability taken at an arbitrary (possibly wall) point of the grading space.
IrrelevantIdeal irrelevant_ideal_at(const RingPtr& ring, const std::vector<long>& theta);
std::string irrelevant_ideal_string(const RingPtr& ring, const IrrelevantIdeal& ii);

enum class WallKind { Fibration, DivisorialContraction, SmallModification };

struct WallCrossing {
    WallKind kind;
    std::vector<long> ray;
    std::vector<size_t> far_vars;  // empty / one / several variables
};

// `to` absent classifies the boundary wall of `from` at the support boundary.
WallCrossing classify_wall(const RingPtr& ring, const Chamber& from,
                           const std::optional<Chamber>& to);

// Affine chart where `unit_set` (r variables with unimodular weight
// submatrix) is set to 1.
class Chart {
public:
    Chart(const ToricAmbient& ambient, const std::set<size_t>& unit_set);
    Chart(RingPtr ambient_ring, const std::set<size_t>& unit_set);

    const RingPtr& ambient_ring() const { return ambient_ring_; }
    const RingPtr& chart_ring() const { return chart_ring_; }
    const std::set<size_t>& unit_set() const { return unit_set_; }
    const std::vector<size_t>& coords() const { return coords_; }  // ambient indices
    int orientation_sign() const { return sign_; }

    Poly dehomogenize(const Poly& p) const;
    RatFunc dehomogenize(const RatFunc& f) const;

    // Exponents (over ambient variables) of the degree-0 Laurent monomial
    // representing chart coordinate j.
    const std::vector<long>& coordinate_exponents(size_t j) const { return coord_exps_[j]; }

    std::string describe() const;

private:
    void build();

    RingPtr ambient_ring_;
    std::set<size_t> unit_set_;
    RingPtr chart_ring_;
    std::vector<size_t> coords_;
    std::vector<std::vector<long>> coord_exps_;
    int sign_ = 1;
};

// Finite-quotient data of the torus fixed locus at a non-unimodular unit
// set: group order, cyclicity, and (when cyclic) the residual weights of the
// remaining variables, i.e. the 1/d(w_1,...,w_k) presentation.
struct QuotientChartData {
    long order = 1;
    bool cyclic = true;
    std::vector<size_t> remaining;  // ambient variable indices
    std::vector<long> weights;      // mod `order`, aligned with `remaining`
};

QuotientChartData quotient_chart(const RingPtr& ring, const std::vector<size_t>& unit_set);

}  // namespace cypair
