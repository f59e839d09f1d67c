#include "birmap/singular.hpp"

#include "algebra/matq.hpp"

#include <array>

namespace cypair {

namespace {

Poly recenter(const Poly& chart_poly, const std::vector<Rational>& point) {
    const RingPtr& ring = chart_poly.ring();
    if (point.size() != ring->num_vars()) throw math_error("point has wrong length");
    if (chart_poly.has_atoms())
        throw math_error("singularity probes need concrete coefficients; specialize atoms");
    std::map<size_t, RatFunc> shift;
    for (size_t i = 0; i < ring->num_vars(); ++i)
        shift.emplace(i, RatFunc(Poly::symbol(ring, i) + Poly::constant(ring, point[i])));
    RatFunc moved = substitute(chart_poly, shift);
    return moved.num().scaled(moved.den().constant_value().inverse());
}

// symmetric matrix of a quadratic form in the chart variables
MatQ quadratic_matrix(const Poly& quad, size_t nvars) {
    MatQ m(nvars, VecQ(nvars, Rational(0)));
    for (const auto& [mono, c] : quad.terms()) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < nvars; ++i)
            for (int k = 0; k < mono.e[i]; ++k) idx.push_back(i);
        if (idx.size() != 2) throw math_error("not a quadratic form");
        if (idx[0] == idx[1]) {
            m[idx[0]][idx[0]] += c;
        } else {
            m[idx[0]][idx[1]] += c / Rational(2);
            m[idx[1]][idx[0]] += c / Rational(2);
        }
    }
    return m;
}

}  // namespace

TangentCone tangent_cone(const Poly& p, const Chart& chart, const std::vector<Rational>& point) {
    Poly q = recenter(chart.dehomogenize(p), point);
    std::vector<Rational> origin(q.ring()->num_vars(), Rational(0));
    if (!q.eval(origin).is_zero())
        throw math_error("polynomial does not vanish at the point");
    TangentCone out;
    long mult = -1;
    for (const auto& [m, c] : q.terms()) {
        long d = m.total_degree();
        if (mult < 0 || d < mult) mult = d;
    }
    out.multiplicity = mult;
    out.lowest_form = Poly(q.ring());
    for (const auto& [m, c] : q.terms())
        if (m.total_degree() == mult) out.lowest_form.add_term(m, c);
    if (mult == 2)
        out.quadratic_rank = rank(quadratic_matrix(out.lowest_form, q.ring()->num_vars()));
    return out;
}

namespace {

// Symmetric Gauss: returns invertible C with Q(C y) diagonal, and the number
// of nonzero diagonal entries.
std::pair<MatQ, size_t> diagonalize_quadratic(MatQ q) {
    size_t n = q.size();
    MatQ c(n, VecQ(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) c[i][i] = Rational(1);

    auto add_col = [&](MatQ& m, size_t dst, size_t src, const Rational& f) {
        for (size_t r = 0; r < n; ++r) m[r][dst] += f * m[r][src];
    };
    auto add_row = [&](MatQ& m, size_t dst, size_t src, const Rational& f) {
        for (size_t col = 0; col < n; ++col) m[dst][col] += f * m[src][col];
    };
    auto swap_both = [&](size_t a, size_t b) {
        for (size_t r = 0; r < n; ++r) std::swap(q[r][a], q[r][b]);
        std::swap(q[a], q[b]);
        for (size_t r = 0; r < n; ++r) std::swap(c[r][a], c[r][b]);
    };

    size_t rank_count = 0;
    for (size_t i = 0; i < n; ++i) {
        if (q[i][i].is_zero()) {
            // bring a nonzero diagonal entry to position i
            bool fixed = false;
            for (size_t j = i + 1; j < n && !fixed; ++j) {
                if (!q[j][j].is_zero()) {
                    swap_both(i, j);
                    fixed = true;
                }
            }
            if (!fixed) {
                for (size_t j = i + 1; j < n && !fixed; ++j) {
                    if (!q[i][j].is_zero()) {
                        // col_i += col_j (and row) to create a diagonal entry
                        add_col(q, i, j, Rational(1));
                        add_row(q, i, j, Rational(1));
                        add_col(c, i, j, Rational(1));
                        fixed = true;
                    }
                }
            }
            if (!fixed) continue;  // row/col i identically zero
        }
        ++rank_count;
        for (size_t j = i + 1; j < n; ++j) {
            if (q[i][j].is_zero()) continue;
            Rational f = -q[i][j] / q[i][i];
            add_col(q, j, i, f);
            add_row(q, j, i, f);
            add_col(c, j, i, f);
        }
    }
    return {c, rank_count};
}

}  // namespace

AkResult classify_Ak(const Poly& p, const Chart& chart, const std::vector<Rational>& point,
                     long max_k) {
    if (chart.coords().size() != 3)
        throw math_error("classify_Ak needs a 3-coordinate chart (surface germ in a 3-fold)");
    if (max_k < 1) throw math_error("max_k must be positive");
    const long order = max_k + 2;

    Poly q = recenter(chart.dehomogenize(p), point);
    TruncSeries s = TruncSeries::from_poly(q, order);
    if (s.valuation() != 2) throw math_error("multiplicity at the point is not 2");

    const RingPtr& ring = q.ring();
    Poly quad = s.homogeneous_part(2);
    auto [cmat, qrank] = diagonalize_quadratic(quadratic_matrix(quad, 3));

    // apply the linear change x_i = sum_j C[i][j] y_j
    std::map<size_t, TruncSeries> lin;
    for (size_t i = 0; i < 3; ++i) {
        Poly li(ring);
        for (size_t j = 0; j < 3; ++j) {
            if (cmat[i][j].is_zero()) continue;
            li += Poly::symbol(ring, j).scaled(cmat[i][j]);
        }
        lin.emplace(i, TruncSeries::from_poly(li, order));
    }
    s = s.substitute_vars(lin);

    if (qrank == 3) return {AkClass::Ak, 1};
    if (qrank <= 1) return {AkClass::NotADuValAk, 0};

    // rank 2: diagonal quadratic part a*u^2 + b*v^2 in the first two
    // variables; iteratively absorb every term involving u or v other than
    // the pure squares.
    Mono uu, vv;
    uu.e.assign(ring->num_symbols(), 0);
    vv.e.assign(ring->num_symbols(), 0);
    uu.e[0] = 2;
    vv.e[1] = 2;
    Rational a = s.coeff(uu), b = s.coeff(vv);
    if (a.is_zero() || b.is_zero()) throw math_error("internal: diagonalization failed");

    const long iteration_cap = 64 * order;
    for (long iter = 0; iter < iteration_cap; ++iter) {
        // lowest offending term
        std::optional<Mono> offending;
        Rational oc;
        for (const auto& [m, c] : s.terms()) {
            if (m.e[0] + m.e[1] == 0) continue;
            if (m == uu || m == vv) continue;
            if (!offending || m.total_degree() < offending->total_degree()) {
                offending = m;
                oc = c;
            }
        }
        if (!offending) break;
        Mono m = *offending;
        size_t var = m.e[0] >= 1 ? 0 : 1;
        Rational lead = var == 0 ? a : b;
        // substitute var -> var - (c/(2*lead)) * m / var
        Mono rest = m;
        rest.e[var] -= 1;
        Poly delta = Poly::monomial(ring, rest, -(oc / (Rational(2) * lead)));
        std::map<size_t, TruncSeries> subs;
        subs.emplace(var, TruncSeries::from_poly(Poly::symbol(ring, var) + delta, order));
        s = s.substitute_vars(subs);
    }

    // residual in the third variable only
    long m_w = order;
    for (const auto& [m, c] : s.terms()) {
        if (m == uu || m == vv) continue;
        if (m.e[0] + m.e[1] != 0)
            return {AkClass::Undetermined, 0};  // iteration cap hit
        m_w = std::min(m_w, m.total_degree());
    }
    if (m_w >= order) return {AkClass::Undetermined, 0};
    long k = m_w - 1;
    if (k > max_k) return {AkClass::Undetermined, 0};
    return {AkClass::Ak, k};
}

ReidTai reid_tai(long r, const std::array<long, 3>& weights) {
    if (r < 1) throw math_error("quotient order must be >= 1");
    if (r == 1) return ReidTai::Terminal;
    bool all_above = true, all_at_least = true;
    for (long j = 1; j < r; ++j) {
        Rational age(0);
        for (long w : weights) age += Rational(j * w, r).frac();
        if (age < Rational(1)) all_at_least = false;
        if (age <= Rational(1)) all_above = false;
    }
    if (all_above) return ReidTai::Terminal;
    if (all_at_least) return ReidTai::CanonicalNotTerminal;
    return ReidTai::WorseThanCanonical;
}

ReidTai reid_tai(const QuotientChartData& q) {
    if (!q.cyclic) throw math_error("Reid-Tai helper needs a cyclic quotient");
    if (q.weights.size() != 3) throw math_error("Reid-Tai helper needs a 3-fold chart");
    return reid_tai(q.order, {q.weights[0], q.weights[1], q.weights[2]});
}

std::string to_string(ReidTai rt) {
    switch (rt) {
        case ReidTai::Terminal: return "Terminal";
        case ReidTai::CanonicalNotTerminal: return "CanonicalNotTerminal";
        case ReidTai::WorseThanCanonical: return "WorseThanCanonical";
    }
    return "?";
}

std::string to_string(const AkResult& a) {
    switch (a.kind) {
        case AkClass::Ak: return "A" + std::to_string(a.k);
        case AkClass::NotADuValAk: return "NotADuValAk";
        case AkClass::Undetermined: return "Undetermined";
    }
    return "?";
}

}  // namespace cypair
