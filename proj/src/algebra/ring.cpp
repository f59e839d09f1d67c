#include "algebra/ring.hpp"

#include <algorithm>
#include <set>

namespace cypair {

GradedRing::GradedRing(std::vector<std::string> vars,
                       std::vector<std::vector<long>> weights,
                       std::vector<AtomSpec> atoms)
    : vars_(std::move(vars)), weights_(std::move(weights)) {
    if (vars_.empty()) throw math_error("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (!seen.insert(v).second) throw math_error("duplicate variable name: " + v);
    }
    for (const auto& row : weights_) {
        if (row.size() != vars_.size())
            throw math_error("weight row length does not match variable count");
    }
    const size_t r = weights_.size();
    for (const auto& spec : atoms) {
        if (!seen.insert(spec.name).second)
            throw math_error("atom name collides with existing symbol: " + spec.name);
        AtomDecl decl;
        decl.name = spec.name;
        decl.multidegree = spec.multidegree;
        if (decl.multidegree.size() != r)
            throw math_error("atom " + spec.name + " multidegree has wrong length");
        for (const auto& an : spec.args) {
            bool found = false;
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (vars_[i] == an) {
                    decl.args.push_back(static_cast<int>(i));
                    found = true;
                    break;
                }
            }
            if (!found) throw math_error("atom " + spec.name + " argument is not a variable: " + an);
        }
        if (r == 0) {
            decl.form_degree = spec.form_degree;
        } else {
            if (decl.args.empty())
                throw math_error("atom " + spec.name + " needs at least one argument");
            // All arguments must share one weight column so the atom scales
            // like a monomial under the torus; the multidegree must be an
            // integer multiple of that column.
            std::vector<long> col(r);
            for (size_t k = 0; k < r; ++k) col[k] = weights_[k][decl.args[0]];
            for (int a : decl.args)
                for (size_t k = 0; k < r; ++k)
                    if (weights_[k][a] != col[k])
                        throw math_error("atom " + spec.name +
                                         ": argument variables carry different weight columns");
            long delta = 0;
            bool have = false;
            for (size_t k = 0; k < r; ++k) {
                if (col[k] != 0) {
                    if (decl.multidegree[k] % col[k] != 0)
                        throw math_error("atom " + spec.name +
                                         ": multidegree is not a multiple of the argument column");
                    long d = decl.multidegree[k] / col[k];
                    if (have && d != delta)
                        throw math_error("atom " + spec.name + ": inconsistent multidegree");
                    delta = d;
                    have = true;
                } else if (decl.multidegree[k] != 0) {
                    throw math_error("atom " + spec.name + ": inconsistent multidegree");
                }
            }
            if (!have) throw math_error("atom " + spec.name + ": arguments have zero weight column");
            if (delta < 0) throw math_error("atom " + spec.name + ": negative form degree");
            decl.form_degree = delta;
        }
        atoms_.push_back(std::move(decl));
    }
}

std::vector<long> GradedRing::column(size_t i) const {
    std::vector<long> c(rank());
    for (size_t k = 0; k < rank(); ++k) c[k] = weights_[k][i];
    return c;
}

std::vector<long> GradedRing::symbol_degree(size_t i) const {
    if (is_atom_index(i)) return atoms_[i - num_vars()].multidegree;
    return column(i);
}

std::vector<long> GradedRing::sum_of_columns() const {
    std::vector<long> s(rank(), 0);
    for (size_t i = 0; i < num_vars(); ++i)
        for (size_t k = 0; k < rank(); ++k) s[k] += weights_[k][i];
    return s;
}

const std::string& GradedRing::symbol_name(size_t i) const {
    if (is_atom_index(i)) return atoms_[i - num_vars()].name;
    return vars_[i];
}

const AtomDecl& GradedRing::atom_at(size_t symbol_index) const {
    if (!is_atom_index(symbol_index)) throw math_error("symbol is not an atom");
    return atoms_[symbol_index - num_vars()];
}

std::optional<size_t> GradedRing::find_symbol(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    for (size_t i = 0; i < atoms_.size(); ++i)
        if (atoms_[i].name == name) return vars_.size() + i;
    return std::nullopt;
}

std::optional<size_t> GradedRing::find_var(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

bool GradedRing::structurally_equal(const GradedRing& o) const {
    if (vars_ != o.vars_ || weights_ != o.weights_) return false;
    if (atoms_.size() != o.atoms_.size()) return false;
    for (size_t i = 0; i < atoms_.size(); ++i) {
        const auto& a = atoms_[i];
        const auto& b = o.atoms_[i];
        if (a.name != b.name || a.args != b.args || a.multidegree != b.multidegree ||
            a.form_degree != b.form_degree)
            return false;
    }
    return true;
}

RingPtr make_ring(std::vector<std::string> vars,
                  std::vector<std::vector<long>> weights,
                  std::vector<AtomSpec> atoms) {
    return std::make_shared<const GradedRing>(std::move(vars), std::move(weights),
                                              std::move(atoms));
}

}  // namespace cypair
