#pragma once

#include "algebra/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cypair {

// Opaque generic form: a named symbol standing for an arbitrary homogeneous
// form of declared multidegree in a subset of the ring variables.
struct AtomDecl {
    std::string name;
    std::vector<int> args;           // variable indices
    std::vector<long> multidegree;   // length = grading rank
    long form_degree = 0;            // degree as a form in its arguments
};

struct AtomSpec {
    std::string name;
    std::vector<std::string> args;
    std::vector<long> multidegree;
    long form_degree = 0;  // used only when the grading rank is 0
};

// Variable names plus an r x n integer weight matrix (one row per grading),
// plus declared generic-form atoms. Immutable once built; shared by pointer.
class GradedRing {
public:
    GradedRing(std::vector<std::string> vars,
               std::vector<std::vector<long>> weights,
               std::vector<AtomSpec> atoms = {});

    size_t num_vars() const { return vars_.size(); }
    size_t num_atoms() const { return atoms_.size(); }
    size_t num_symbols() const { return vars_.size() + atoms_.size(); }
    size_t rank() const { return weights_.size(); }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<std::vector<long>>& weights() const { return weights_; }
    const std::vector<AtomDecl>& atoms() const { return atoms_; }

    // Weight column of variable i (length = rank()).
    std::vector<long> column(size_t i) const;
    // Multidegree contributed by one power of symbol i (variable or atom).
    std::vector<long> symbol_degree(size_t i) const;
    std::vector<long> sum_of_columns() const;

    const std::string& symbol_name(size_t i) const;
    bool is_atom_index(size_t i) const { return i >= vars_.size(); }
    const AtomDecl& atom_at(size_t symbol_index) const;

    std::optional<size_t> find_symbol(const std::string& name) const;
    std::optional<size_t> find_var(const std::string& name) const;

    bool structurally_equal(const GradedRing& o) const;

private:
    std::vector<std::string> vars_;
    std::vector<std::vector<long>> weights_;  // rank rows, num_vars columns
    std::vector<AtomDecl> atoms_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

RingPtr make_ring(std::vector<std::string> vars,
                  std::vector<std::vector<long>> weights,
                  std::vector<AtomSpec> atoms = {});

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->structurally_equal(*b));
}

}  // namespace cypair
