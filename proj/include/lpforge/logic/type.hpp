#pragma once

#include <memory>
#include <string>

#include "lpforge/errors.hpp"

namespace lpforge::logic {

// Finite types over the two primitives 0 (naturals) and X (space elements),
// closed under arrows. τ(ρ) is notation for ρ→τ, so "X(0)(0)" is 0→0→X.
class FiniteType {
 public:
  enum class Kind { nat, space, arrow };

  FiniteType() : FiniteType(nat()) {}

  static FiniteType nat() {
    static const FiniteType t{std::make_shared<Node>(Node{Kind::nat, {}, {}})};
    return t;
  }

  static FiniteType space() {
    static const FiniteType t{
        std::make_shared<Node>(Node{Kind::space, {}, {}})};
    return t;
  }

  static FiniteType arrow(const FiniteType& domain,
                          const FiniteType& codomain) {
    return FiniteType{std::make_shared<Node>(
        Node{Kind::arrow, domain.node_, codomain.node_})};
  }

  Kind kind() const { return node_->kind; }
  bool is_base() const { return node_->kind != Kind::arrow; }

  FiniteType domain() const {
    if (!node_->dom) throw ParameterError("domain of a base type");
    return FiniteType{node_->dom};
  }

  FiniteType codomain() const {
    if (!node_->cod) throw ParameterError("codomain of a base type");
    return FiniteType{node_->cod};
  }

  bool operator==(const FiniteType& o) const {
    return equal(node_.get(), o.node_.get());
  }
  bool operator!=(const FiniteType& o) const { return !(*this == o); }

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const Node> dom, cod;
  };

  explicit FiniteType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static bool equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    if (a->kind != Kind::arrow) return true;
    return equal(a->dom.get(), b->dom.get()) && equal(a->cod.get(), b->cod.get());
  }

  std::shared_ptr<const Node> node_;
};

// small: ρ(0)...(0) with ρ ∈ {0,X}, i.e. every argument along the spine is 0
bool is_small(const FiniteType& t);

// admissible: ρ(τ_n)...(τ_1) with ρ ∈ {0,X} and every τ_i small
bool is_admissible(const FiniteType& t);

// ρ̂: replace every occurrence of X by 0; idempotent
FiniteType hat_type(const FiniteType& t);

// Concrete syntax: "0", "X", application style "X(0)(0)", arrow style
// "0 -> 0 -> X" (right associative), and "1" as shorthand for 0(0).
FiniteType parse_type(const std::string& text);
std::string print_type(const FiniteType& t);

}  // namespace lpforge::logic
