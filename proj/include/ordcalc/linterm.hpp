#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ordcalc/errors.hpp"
#include "ordcalc/natural.hpp"

namespace ordcalc {

enum class Generator { Omega, OmegaStar, Zeta };

inline std::string to_string(Generator g) {
    switch (g) {
        case Generator::Omega: return "w";
        case Generator::OmegaStar: return "w*";
        case Generator::Zeta: return "z";
    }
    return "?";
}

/// Syntax tree over the generators {0, 1, finite n, w, w*, z} with sum and
/// lexicographic-product constructors. Nodes are immutable and shared; sums
/// are kept flattened and free of zero parts, and products with an empty
/// factor collapse to zero.
class LinTerm {
public:
    enum class Kind { Zero, Fin, Gen, Sum, Prod };

    LinTerm() = default;  // the empty order

    static LinTerm zero() { return LinTerm{}; }

    static LinTerm fin(Nat n) {
        if (n == 0) return zero();
        return LinTerm{std::make_shared<const Node>(Node{Kind::Fin, n, Generator::Omega, {}, true})};
    }

    static LinTerm gen(Generator g) {
        return LinTerm{
            std::make_shared<const Node>(Node{Kind::Gen, 0, g, {}, g == Generator::Omega})};
    }

    static LinTerm sum(std::vector<LinTerm> parts) {
        std::vector<LinTerm> flat;
        flat.reserve(parts.size());
        for (LinTerm& p : parts) {
            if (p.is_zero()) continue;
            if (p.kind() == Kind::Sum) {
                for (const LinTerm& q : p.parts()) flat.push_back(q);
            } else {
                flat.push_back(std::move(p));
            }
        }
        if (flat.empty()) return zero();
        if (flat.size() == 1) return flat.front();
        bool wo = true;
        for (const LinTerm& p : flat) wo = wo && p.is_well_ordered();
        return LinTerm{
            std::make_shared<const Node>(Node{Kind::Sum, 0, Generator::Omega, std::move(flat), wo})};
    }

    static LinTerm prod(LinTerm l, LinTerm r) {
        if (l.is_zero() || r.is_zero()) return zero();
        bool wo = l.is_well_ordered() && r.is_well_ordered();
        std::vector<LinTerm> children;
        children.push_back(std::move(l));
        children.push_back(std::move(r));
        return LinTerm{
            std::make_shared<const Node>(Node{Kind::Prod, 0, Generator::Omega, std::move(children), wo})};
    }

    Kind kind() const { return node_ ? node_->kind : Kind::Zero; }
    bool is_zero() const { return !node_; }

    Nat fin_value() const { return node_->fin; }
    Generator generator() const { return node_->gen; }
    const std::vector<LinTerm>& parts() const { return node_->children; }
    const LinTerm& left() const { return node_->children[0]; }
    const LinTerm& right() const { return node_->children[1]; }

    /// True when the term contains no w* and no z generator.
    bool is_well_ordered() const { return !node_ || node_->well_ordered; }

    bool has_first_element() const {
        switch (kind()) {
            case Kind::Zero: return false;
            case Kind::Fin: return true;
            case Kind::Gen: return node_->gen == Generator::Omega;
            case Kind::Sum: return parts().front().has_first_element();
            case Kind::Prod: return left().has_first_element() && right().has_first_element();
        }
        return false;
    }

    bool has_last_element() const {
        switch (kind()) {
            case Kind::Zero: return false;
            case Kind::Fin: return true;
            case Kind::Gen: return node_->gen == Generator::OmegaStar;
            case Kind::Sum: return parts().back().has_last_element();
            case Kind::Prod: return left().has_last_element() && right().has_last_element();
        }
        return false;
    }

    friend bool operator==(const LinTerm& a, const LinTerm& b) {
        if (a.node_ == b.node_) return true;
        if (a.kind() != b.kind()) return false;
        switch (a.kind()) {
            case Kind::Zero: return true;
            case Kind::Fin: return a.fin_value() == b.fin_value();
            case Kind::Gen: return a.generator() == b.generator();
            case Kind::Sum:
            case Kind::Prod: {
                if (a.parts().size() != b.parts().size()) return false;
                for (std::size_t i = 0; i < a.parts().size(); ++i)
                    if (!(a.parts()[i] == b.parts()[i])) return false;
                return true;
            }
        }
        return false;
    }

private:
    struct Node {
        Kind kind;
        Nat fin;
        Generator gen;
        std::vector<LinTerm> children;  // Sum: n-ary parts; Prod: exactly two
        bool well_ordered;
    };

    explicit LinTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;  // nullptr encodes Zero
};

inline std::string to_string(const LinTerm& t) {
    auto atom = [](const LinTerm& u, const std::string& s) {
        return u.kind() == LinTerm::Kind::Sum ? "(" + s + ")" : s;
    };
    switch (t.kind()) {
        case LinTerm::Kind::Zero: return "0";
        case LinTerm::Kind::Fin: return std::to_string(t.fin_value());
        case LinTerm::Kind::Gen: return to_string(t.generator());
        case LinTerm::Kind::Sum: {
            std::string out;
            for (const LinTerm& p : t.parts()) {
                if (!out.empty()) out += " + ";
                out += to_string(p);
            }
            return out;
        }
        case LinTerm::Kind::Prod:
            return atom(t.left(), to_string(t.left())) + "*" + atom(t.right(), to_string(t.right()));
    }
    return "?";
}

}  // namespace ordcalc
