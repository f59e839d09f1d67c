#include "toric/toric.hpp"

#include "algebra/matq.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cypair {

namespace {

long cross2(const std::vector<long>& a, const std::vector<long>& b) {
    return a[0] * b[1] - a[1] * b[0];
}

std::vector<long> primitive(std::vector<long> v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, std::abs(x));
    if (g == 0) throw math_error("zero vector has no primitive representative");
    for (long& x : v) x /= g;
    return v;
}

// angle-class sort key for rank-2 rays, counterclockwise from (1,0)
int half_class(const std::vector<long>& v) {
    if (v[1] == 0) return v[0] > 0 ? 0 : 2;
    return v[1] > 0 ? 1 : 3;
}

bool angle_less(const std::vector<long>& a, const std::vector<long>& b) {
    int ha = half_class(a), hb = half_class(b);
    if (ha != hb) return ha < hb;
    return cross2(a, b) > 0;
}

bool in_cone2(const std::vector<long>& ray1, const std::vector<long>& ray2,
              const std::vector<long>& v) {
    // closed cone spanned by two non-proportional rays
    return cross2(ray1, v) >= 0 && cross2(v, ray2) >= 0;
}

}  // namespace

std::vector<Chamber> chamber_decomposition(const RingPtr& ring) {
    const size_t r = ring->rank();
    const size_t n = ring->num_vars();
    if (r == 0 || r > 2) throw math_error("chamber machinery needs grading rank 1 or 2");

    if (r == 1) {
        bool has_pos = false, has_neg = false;
        for (size_t i = 0; i < n; ++i) {
            long w = ring->weights()[0][i];
            if (w > 0) has_pos = true;
            if (w < 0) has_neg = true;
        }
        if (!has_pos && !has_neg) throw math_error("all weight columns are zero");
        std::vector<Chamber> out;
        for (long s : {1L, -1L}) {
            if ((s > 0 && !has_pos) || (s < 0 && !has_neg)) continue;
            Chamber c;
            c.rays = {{s}};
            for (size_t i = 0; i < n; ++i)
                if (s * ring->weights()[0][i] >= 0) c.positive_vars.push_back(i);
            out.push_back(std::move(c));
        }
        return out;
    }

    // rank 2
    std::vector<std::vector<long>> rays;
    for (size_t i = 0; i < n; ++i) {
        auto col = ring->column(i);
        if (col[0] == 0 && col[1] == 0) continue;
        auto p = primitive(col);
        if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(p);
    }
    if (rays.empty()) throw math_error("all weight columns are zero");
    if (rays.size() == 1) throw math_error("weight columns span a single ray; no 2d chamber");
    std::sort(rays.begin(), rays.end(), angle_less);

    // widest angular gap between consecutive rays decides the support shape
    size_t k = rays.size();
    auto gap_reflex = [&](size_t i) {
        // true if the counterclockwise gap from rays[i] to rays[(i+1)%k] is >= pi
        const auto& a = rays[i];
        const auto& b = rays[(i + 1) % k];
        long cr = cross2(a, b);
        if (i + 1 == k) return cr <= 0;  // wrap gap = 2*pi - (ang(a) - ang(b))
        return cr <= 0;
    };
    std::optional<size_t> break_at;
    for (size_t i = 0; i < k; ++i) {
        if (gap_reflex(i)) {
            if (break_at) throw math_error("weight columns do not span a pointed or full fan");
            break_at = i;
        }
    }

    std::vector<Chamber> out;
    auto make_chamber = [&](const std::vector<long>& a, const std::vector<long>& b) {
        Chamber c;
        c.rays = {a, b};
        for (size_t i = 0; i < n; ++i) {
            auto col = ring->column(i);
            if (col[0] == 0 && col[1] == 0) {
                c.positive_vars.push_back(i);
                continue;
            }
            if (in_cone2(a, b, col)) c.positive_vars.push_back(i);
        }
        out.push_back(std::move(c));
    };

    if (break_at) {
        size_t start = (*break_at + 1) % k;
        for (size_t step = 0; step + 1 < k; ++step) {
            size_t i = (start + step) % k;
            size_t j = (start + step + 1) % k;
            make_chamber(rays[i], rays[j]);
        }
    } else {
        for (size_t i = 0; i < k; ++i) make_chamber(rays[i], rays[(i + 1) % k]);
    }
    return out;
}

ToricAmbient::ToricAmbient(RingPtr ring, Chamber chamber, std::string name)
    : ring_(std::move(ring)), chamber_(std::move(chamber)), name_(std::move(name)) {
    if (ring_->rank() < 1) throw math_error("toric ambient needs grading rank >= 1");
    auto all = chamber_decomposition(ring_);
    bool found = false;
    for (const auto& c : all)
        if (c.same_rays(chamber_)) found = true;
    if (!found) throw math_error("chamber is not a maximal chamber of the fan of " + name_);
}

ToricAmbient ToricAmbient::standard(RingPtr ring, std::string name) {
    auto all = chamber_decomposition(ring);
    return ToricAmbient(std::move(ring), all.front(), std::move(name));
}

ToricAmbient ToricAmbient::with_chamber_rays(RingPtr ring,
                                             std::vector<std::vector<long>> rays,
                                             std::string name) {
    Chamber want;
    for (auto& r : rays) want.rays.push_back(primitive(std::move(r)));
    auto all = chamber_decomposition(ring);
    for (const auto& c : all) {
        if (c.same_rays(want) ||
            (want.rays.size() == 2 && c.rays[0] == want.rays[1] && c.rays[1] == want.rays[0]))
            return ToricAmbient(std::move(ring), c, std::move(name));
    }
    throw math_error("declared chamber rays do not match a maximal chamber for " + name);
}

IrrelevantIdeal irrelevant_ideal_at(const RingPtr& ring, const std::vector<long>& theta) {
    const size_t r = ring->rank();
    const size_t n = ring->num_vars();
    if (theta.size() != r) throw math_error("stability point has wrong length");

    auto col_of = [&](size_t i) { return ring->column(i); };

    auto theta_in_cone = [&](const std::vector<size_t>& sigma) {
        if (r == 1) {
            for (size_t v : sigma) {
                long w = col_of(v)[0];
                if (theta[0] > 0 && w > 0) return true;
                if (theta[0] < 0 && w < 0) return true;
            }
            return false;
        }
        // rank 2: theta in cone(cols) iff it is a nonnegative combination of
        // at most two of them
        for (size_t a = 0; a < sigma.size(); ++a) {
            auto u = col_of(sigma[a]);
            long cu = cross2(u, theta);
            if (cu == 0 && (u[0] * theta[0] + u[1] * theta[1]) > 0) return true;
            for (size_t b = a + 1; b < sigma.size(); ++b) {
                auto w = col_of(sigma[b]);
                long d = cross2(u, w);
                if (d == 0) continue;
                // theta = alpha*u + beta*w
                long alpha_num = cross2(theta, w), beta_num = cross2(u, theta);
                if ((d > 0 && alpha_num >= 0 && beta_num >= 0) ||
                    (d < 0 && alpha_num <= 0 && beta_num <= 0))
                    return true;
            }
        }
        return false;
    };

    IrrelevantIdeal out;
    std::vector<size_t> good_singletons;
    for (size_t v = 0; v < n; ++v) {
        if (theta_in_cone({v})) {
            out.generators.push_back({v});
            good_singletons.push_back(v);
        }
    }
    for (size_t v = 0; v < n; ++v) {
        for (size_t w = v + 1; w < n; ++w) {
            if (std::find(good_singletons.begin(), good_singletons.end(), v) !=
                    good_singletons.end() ||
                std::find(good_singletons.begin(), good_singletons.end(), w) !=
                    good_singletons.end())
                continue;
            if (theta_in_cone({v, w})) out.generators.push_back({v, w});
        }
    }
    if (out.generators.empty())
        throw math_error("stability point is outside the support of the fan");

    // product presentation if no column is parallel to theta
    if (r == 1) {
        std::vector<size_t> side;
        for (size_t v = 0; v < n; ++v)
            if (theta[0] * col_of(v)[0] > 0) side.push_back(v);
        out.product = std::make_pair(side, std::vector<size_t>{});
    } else {
        std::vector<size_t> left, right;
        bool clean = true;
        for (size_t v = 0; v < n; ++v) {
            auto c = col_of(v);
            if (c[0] == 0 && c[1] == 0) continue;
            long cr = cross2(c, theta);
            if (cr > 0) left.push_back(v);
            else if (cr < 0) right.push_back(v);
            else clean = false;
        }
        if (clean && !left.empty() && !right.empty()) out.product = std::make_pair(left, right);
    }
    return out;
}

IrrelevantIdeal irrelevant_ideal(const ToricAmbient& ambient) {
    const auto& ch = ambient.chamber();
    std::vector<long> theta;
    if (ambient.ring()->rank() == 1) {
        theta = ch.rays[0];
    } else {
        theta = {ch.rays[0][0] + ch.rays[1][0], ch.rays[0][1] + ch.rays[1][1]};
    }
    return irrelevant_ideal_at(ambient.ring(), theta);
}

std::string irrelevant_ideal_string(const RingPtr& ring, const IrrelevantIdeal& ii) {
    std::ostringstream out;
    if (ii.product) {
        auto print_set = [&](const std::vector<size_t>& s) {
            out << "(";
            for (size_t i = 0; i < s.size(); ++i) {
                if (i) out << ",";
                out << ring->vars()[s[i]];
            }
            out << ")";
        };
        print_set(ii.product->first);
        if (!ii.product->second.empty()) print_set(ii.product->second);
        return out.str();
    }
    out << "(";
    for (size_t g = 0; g < ii.generators.size(); ++g) {
        if (g) out << ", ";
        for (size_t i = 0; i < ii.generators[g].size(); ++i) {
            if (i) out << "*";
            out << ring->vars()[ii.generators[g][i]];
        }
    }
    out << ")";
    return out.str();
}

WallCrossing classify_wall(const RingPtr& ring, const Chamber& from,
                           const std::optional<Chamber>& to) {
    const size_t r = ring->rank();
    const size_t n = ring->num_vars();
    WallCrossing wc;

    if (r == 1) {
        wc.ray = {0};
        long far_sign = -from.rays[0][0];
        if (to) {
            if (to->rays[0][0] != far_sign) throw math_error("chambers are not adjacent");
        }
        for (size_t v = 0; v < n; ++v)
            if (far_sign * ring->weights()[0][v] > 0) wc.far_vars.push_back(v);
    } else {
        std::vector<long> wall;
        long side = 0;
        if (to) {
            for (const auto& ra : from.rays)
                for (const auto& rb : to->rays)
                    if (ra == rb) wall = ra;
            if (wall.empty()) throw math_error("chambers share no wall");
            // far side: side of the `to` chamber's other ray
            for (const auto& rb : to->rays) {
                if (rb == wall) continue;
                long s = cross2(wall, rb);
                if (s == 0) throw math_error("degenerate adjacent chamber");
                side = s > 0 ? 1 : -1;
            }
            // sanity: `from`'s other ray must lie strictly on the opposite side
            for (const auto& ra : from.rays) {
                if (ra == wall) continue;
                if (side * cross2(wall, ra) >= 0)
                    throw math_error("chambers are not adjacent across the named wall");
            }
        } else {
            // boundary wall: the ray of `from` at the support boundary
            auto chams = chamber_decomposition(ring);
            for (const auto& ray : from.rays) {
                size_t count = 0;
                for (const auto& c : chams)
                    for (const auto& cr : c.rays)
                        if (cr == ray) ++count;
                if (count == 1) {
                    wall = ray;
                    for (const auto& ra : from.rays) {
                        if (ra == wall) continue;
                        long s = cross2(wall, ra);
                        side = s > 0 ? -1 : 1;
                    }
                    break;
                }
            }
            if (wall.empty())
                throw math_error("no boundary wall; name the adjacent chamber instead");
        }
        wc.ray = wall;
        for (size_t v = 0; v < n; ++v) {
            auto c = ring->column(v);
            if (c[0] == 0 && c[1] == 0) continue;
            long s = cross2(wall, c);
            if (side * s > 0) wc.far_vars.push_back(v);
        }
    }

    if (wc.far_vars.empty()) wc.kind = WallKind::Fibration;
    else if (wc.far_vars.size() == 1) wc.kind = WallKind::DivisorialContraction;
    else wc.kind = WallKind::SmallModification;
    return wc;
}

Chart::Chart(const ToricAmbient& ambient, const std::set<size_t>& unit_set)
    : ambient_ring_(ambient.ring()), unit_set_(unit_set) {
    build();
}

Chart::Chart(RingPtr ambient_ring, const std::set<size_t>& unit_set)
    : ambient_ring_(std::move(ambient_ring)), unit_set_(unit_set) {
    build();
}

void Chart::build() {
    const size_t r = ambient_ring_->rank();
    const size_t n = ambient_ring_->num_vars();
    if (unit_set_.size() != r) throw math_error("chart unit set must have rank-many variables");
    for (size_t v : unit_set_)
        if (v >= n) throw math_error("chart unit set contains a non-variable");

    std::vector<size_t> us(unit_set_.begin(), unit_set_.end());
    std::vector<std::vector<long>> sub(r, std::vector<long>(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) sub[i][j] = ambient_ring_->weights()[i][us[j]];
    long d = idet(sub);
    if (d != 1 && d != -1)
        throw math_error("chart unit set is not unimodular (determinant " + std::to_string(d) +
                         ")");

    for (size_t v = 0; v < n; ++v)
        if (!unit_set_.count(v)) coords_.push_back(v);

    // chart ring: remaining variables, rank 0, atoms whose arguments survive
    std::vector<std::string> names;
    for (size_t v : coords_) names.push_back(ambient_ring_->vars()[v]);
    std::vector<AtomSpec> atoms;
    for (const auto& a : ambient_ring_->atoms()) {
        bool ok = true;
        for (int arg : a.args)
            if (unit_set_.count(static_cast<size_t>(arg))) ok = false;
        if (!ok) continue;
        AtomSpec spec;
        spec.name = a.name;
        for (int arg : a.args) spec.args.push_back(ambient_ring_->vars()[arg]);
        spec.form_degree = a.form_degree;
        atoms.push_back(std::move(spec));
    }
    chart_ring_ = make_ring(names, {}, atoms);

    // chart coordinate exponents: for v not in S, m_v = v * prod s^(a_s) with
    // W_S * a = -col(v); solve the r x r integer system (unimodular, exact)
    MatQ wq(r, VecQ(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) wq[i][j] = Rational(sub[i][j]);
    for (size_t v : coords_) {
        VecQ rhs(r);
        for (size_t i = 0; i < r; ++i) rhs[i] = Rational(-ambient_ring_->weights()[i][v]);
        auto a = solve(wq, rhs);
        if (!a) throw math_error("internal: chart system unsolvable");
        std::vector<long> exps(n, 0);
        exps[v] = 1;
        for (size_t j = 0; j < r; ++j) {
            if (!(*a)[j].is_integer()) throw math_error("internal: non-integer chart exponent");
            exps[us[j]] = static_cast<long>((*a)[j].numerator().get_si());
        }
        coord_exps_.push_back(std::move(exps));
    }

    // orientation: determinant of [weight rows; chart coordinate exponents]
    std::vector<std::vector<long>> big;
    for (size_t i = 0; i < r; ++i) big.push_back(ambient_ring_->weights()[i]);
    for (const auto& e : coord_exps_) big.push_back(e);
    long dd = idet(big);
    sign_ = dd > 0 ? 1 : -1;
}

Poly Chart::dehomogenize(const Poly& p) const {
    Poly reduced = p.substitute_ones(unit_set_);
    Poly out(chart_ring_);
    const size_t nv = ambient_ring_->num_vars();
    for (const auto& [m, c] : reduced.terms()) {
        Mono mm;
        mm.e.assign(chart_ring_->num_symbols(), 0);
        for (size_t j = 0; j < coords_.size(); ++j) mm.e[j] = m.e[coords_[j]];
        for (size_t i = nv; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            auto idx = chart_ring_->find_symbol(ambient_ring_->symbol_name(i));
            if (!idx) throw math_error("internal: atom missing from chart ring");
            mm.e[*idx] = m.e[i];
        }
        out.add_term(mm, c);
    }
    return out;
}

RatFunc Chart::dehomogenize(const RatFunc& f) const {
    Poly den = dehomogenize(f.den());
    if (den.is_zero()) throw math_error("denominator vanishes identically on chart");
    return RatFunc(dehomogenize(f.num()), den);
}

std::string Chart::describe() const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (size_t v : unit_set_) {
        if (!first) out << ",";
        out << ambient_ring_->vars()[v] << "=1";
        first = false;
    }
    out << "}";
    return out.str();
}

QuotientChartData quotient_chart(const RingPtr& ring, const std::vector<size_t>& unit_set) {
    const size_t r = ring->rank();
    if (unit_set.size() != r) throw math_error("quotient chart needs rank-many variables");
    std::vector<std::vector<long>> sub(r, std::vector<long>(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) sub[i][j] = ring->weights()[i][unit_set[j]];
    long d = std::abs(idet(sub));
    if (d == 0) throw math_error("quotient chart submatrix is singular");

    QuotientChartData out;
    out.order = d;
    auto sf = int_diagonalize(sub);
    size_t big_index = r;
    for (size_t i = 0; i < r; ++i) {
        if (sf.diag[i] > 1) {
            if (big_index != r) out.cyclic = false;
            big_index = i;
        }
    }
    for (size_t v = 0; v < ring->num_vars(); ++v) {
        if (std::find(unit_set.begin(), unit_set.end(), v) != unit_set.end()) continue;
        out.remaining.push_back(v);
    }
    if (out.cyclic && d > 1) {
        for (size_t v : out.remaining) {
            long acc = 0;
            for (size_t j = 0; j < r; ++j) acc += sf.left[big_index][j] * ring->weights()[j][v];
            long w = acc % d;
            if (w < 0) w += d;
            out.weights.push_back(w);
        }
    } else if (d == 1) {
        out.weights.assign(out.remaining.size(), 0);
    }
    return out;
}

}  // namespace cypair
