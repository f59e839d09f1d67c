#include "lattice/lattice.hpp"

#include "algebra/parse.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

namespace cypair {

GramLattice::GramLattice(std::vector<std::string> basis, MatQ gram)
    : basis_(std::move(basis)), gram_(std::move(gram)) {
    if (gram_.size() != basis_.size())
        throw math_error("Gram matrix size does not match basis");
    for (size_t i = 0; i < gram_.size(); ++i) {
        if (gram_[i].size() != basis_.size()) throw math_error("Gram matrix is not square");
        for (size_t j = 0; j < gram_.size(); ++j)
            if (gram_[i][j] != gram_[j][i]) throw math_error("Gram matrix is not symmetric");
    }
    class_ring_ = make_ring(basis_, {});
}

DivClass parse_class(const LatticePtr& lattice, const std::string& expr) {
    Poly p = poly_parse(expr, lattice->class_ring());
    DivClass out;
    out.lattice = lattice;
    out.coords.assign(lattice->rank(), Rational(0));
    for (const auto& [m, c] : p.terms()) {
        if (m.total_degree() == 0) throw math_error("class expression has a constant term");
        if (m.total_degree() > 1) throw math_error("class expression is not linear");
        for (size_t i = 0; i < lattice->rank(); ++i)
            if (m.e[i] == 1) out.coords[i] += c;
    }
    return out;
}

std::string class_to_string(const DivClass& c) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c.coords.size(); ++i) {
        if (c.coords[i].is_zero()) continue;
        Rational a = c.coords[i];
        if (first) {
            if (a.is_negative()) out << "-";
        } else {
            out << (a.is_negative() ? " - " : " + ");
        }
        Rational mag = a.abs();
        if (mag != Rational(1)) out << mag.str() << "*";
        out << c.lattice->basis()[i];
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

Rational inner(const DivClass& u, const DivClass& v) {
    if (!u.lattice || !v.lattice || !u.lattice->structurally_equal(*v.lattice))
        throw math_error("inner product across different lattices");
    const MatQ& g = u.lattice->gram();
    Rational acc(0);
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) acc += u.coords[i] * g[i][j] * v.coords[j];
    return acc;
}

Rational sublattice_det(const std::vector<DivClass>& classes) {
    if (classes.empty()) return Rational(1);
    MatQ m(classes.size(), VecQ(classes.size()));
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = 0; j < classes.size(); ++j) m[i][j] = inner(classes[i], classes[j]);
    return det(m);
}

MatQ restriction_gram(long c1, long c2) {
    MatQ m(2, VecQ(2));
    m[0][0] = Rational(2);
    m[0][1] = m[1][0] = Rational(c1 + 3);
    m[1][1] = Rational(c1 * c1 + 3 * c1 - 2 * c2);
    return m;
}

BundleAnticanonical pe_anticanonical_general(long bundle_rank, long c1, long base_canonical) {
    if (bundle_rank < 1) throw math_error("bundle rank must be positive");
    BundleAnticanonical out;
    out.xi = Rational(bundle_rank);
    out.l_prime = Rational(-(c1 + base_canonical));
    return out;
}

BundleAnticanonical pe_anticanonical(long c1) {
    return pe_anticanonical_general(2, c1, -3);
}

std::pair<long, long> chern_from_ideal_sequence(long k) {
    if (k > 2) throw math_error("the ideal-sheaf extension is trivial for k > 2");
    long c1 = k, c2 = 1;
    // verify (1 + c1 t + c2 t^2)(1 + (k-2) t) = (1 + (k-1) t)^2 mod t^3
    std::array<long, 3> lhs = {1, c1 + (k - 2), c2 + c1 * (k - 2)};
    std::array<long, 3> rhs = {1, 2 * (k - 1), (k - 1) * (k - 1)};
    if (lhs != rhs) throw math_error("Koszul Chern identity failed");
    return {c1, c2};
}

std::optional<VecQ> cone_decompose(const std::vector<DivClass>& generators,
                                   const DivClass& target) {
    if (generators.empty()) return std::nullopt;
    const size_t r = target.coords.size();
    const size_t n = generators.size();
    for (const auto& g : generators)
        if (!g.lattice->structurally_equal(*target.lattice))
            throw math_error("cone generators in a different lattice");

    MatQ a(r, VecQ(n));
    VecQ b(r);
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = generators[j].coords[i];
        b[i] = target.coords[i];
    }

    // Basic feasible solutions: supports are independent column subsets.
    std::vector<VecQ> vertices;
    std::vector<size_t> subset;
    std::function<void(size_t)> enumerate = [&](size_t start) {
        // try solving with the current support
        MatQ sub(r, VecQ(subset.size()));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < subset.size(); ++j) sub[i][j] = a[i][subset[j]];
        if (rank(sub) == subset.size()) {
            auto sol = solve_affine(sub, b);
            if (sol && sol->kernel.empty()) {
                bool ok = true;
                for (const auto& x : sol->particular)
                    if (x.is_negative()) ok = false;
                if (ok) {
                    VecQ full(n, Rational(0));
                    for (size_t j = 0; j < subset.size(); ++j)
                        full[subset[j]] = sol->particular[j];
                    if (std::find(vertices.begin(), vertices.end(), full) == vertices.end())
                        vertices.push_back(std::move(full));
                }
            }
            for (size_t next = start; next < n; ++next) {
                subset.push_back(next);
                enumerate(next + 1);
                subset.pop_back();
            }
        }
    };
    // empty support solves only target = 0
    {
        bool target_zero = true;
        for (const auto& x : b)
            if (!x.is_zero()) target_zero = false;
        if (target_zero) return VecQ(n, Rational(0));
    }
    enumerate(0);
    if (vertices.empty()) return std::nullopt;
    VecQ avg(n, Rational(0));
    for (const auto& v : vertices)
        for (size_t j = 0; j < n; ++j) avg[j] += v[j];
    for (auto& x : avg) x /= Rational(static_cast<long>(vertices.size()));
    return avg;
}

RRCurveData rr_on_k3_curve(const DivClass& curve, const DivClass& polarization, long twist) {
    RRCurveData out;
    out.deg_k = inner(curve, curve);
    if (!out.deg_k.is_integer() || out.deg_k.numerator() % 2 != 0)
        throw math_error("curve self-intersection is not an even integer");
    out.deg_p = Rational(twist) * inner(polarization, curve);
    out.genus = out.deg_k / Rational(2) + Rational(1);
    Rational chi = out.deg_p + Rational(1) - out.genus;
    if (!chi.is_integer() || !out.deg_p.is_integer())
        throw math_error("non-integral Riemann-Roch data");
    long chi_l = static_cast<long>(chi.numerator().get_si());
    Rational residual = out.deg_k - out.deg_p;  // deg(K - P)
    if (residual.is_negative()) {
        out.h0_bounds = {chi_l, chi_l};
    } else if (residual.is_zero()) {
        out.h0_bounds = {chi_l, chi_l + 1};
    } else {
        throw math_error("h^0 bounds undetermined: deg(K - P) > 0");
    }
    return out;
}

std::vector<BundleCase> weak_fano_bundle_table() {
    std::vector<BundleCase> t;
    t.push_back({1, -1, 0, true, "O + O(-1)"});
    t.push_back({2, 0, -1, true, "O(1) + O(-1)"});
    t.push_back({3, 0, 0, true, "O + O"});
    t.push_back({4, -1, 1, true, "T(-2)"});
    t.push_back({5, 0, 1, true, "extension 0 -> O -> E -> I_p -> 0"});
    t.push_back({6, 0, 2, true, "stable, c2 = 2"});
    t.push_back({7, 0, 3, true, "stable, c2 = 3"});
    t.push_back({8, -1, -2, false, "O(1) + O(-2)"});
    t.push_back({9, -1, 1, false, "extension 0 -> O -> E -> I_p(-1) -> 0"});
    for (long c2 = 2; c2 <= 5; ++c2)
        t.push_back({10, -1, c2, false, "stable, c2 = " + std::to_string(c2)});
    for (long c2 = 4; c2 <= 6; ++c2)
        t.push_back({11, 0, c2, false, "stable, c2 = " + std::to_string(c2)});
    return t;
}

}  // namespace cypair
