#pragma once

// Extended crossed pi-algebras over F_2, pi = F_2^k, stored as structure
// constant tables. Every component L_a is two-dimensional: L_0 has basis
// {1, x}, L_a (a != 0) has basis {y_a, z_a}.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "uhqft/label.hpp"

namespace uhqft {

// Largest label dimension for which full structure tables are materialised.
inline constexpr int kMaxAlgebraLabelDim = 10;

enum class Generator : std::uint8_t { One, X, Y, Z };

// 0 for One/Y, 1 for X/Z: the position of the generator inside its component.
constexpr unsigned slot(Generator g) noexcept { return (g == Generator::X || g == Generator::Z) ? 1u : 0u; }
constexpr Generator generator_at(H1Label label, unsigned s) noexcept {
  if (label.is_zero()) return s == 0 ? Generator::One : Generator::X;
  return s == 0 ? Generator::Y : Generator::Z;
}

// q-degree: deg 1 = 1, deg x = -1, deg y = t, deg z = -t.
constexpr int degree(Generator g, int t) noexcept {
  switch (g) {
    case Generator::One: return 1;
    case Generator::X: return -1;
    case Generator::Y: return t;
    case Generator::Z: return -t;
  }
  return 0;
}

using BasisIndex = std::uint32_t;

struct BasisGenerator {
  H1Label label;
  Generator gen;

  // Throws InputError when gen does not belong to the component of label.
  BasisIndex index() const;
  static BasisGenerator from_index(BasisIndex i) noexcept {
    return {H1Label{i >> 1}, generator_at(H1Label{i >> 1}, i & 1u)};
  }
  friend constexpr auto operator<=>(const BasisGenerator&, const BasisGenerator&) = default;
};

std::string to_string(const BasisGenerator& g, int k);

// "1", "x", "y_10", "z_01". Throws InputError on anything else.
BasisGenerator parse_generator(std::string_view name, int k);

// Finite F_2-combination of basis generators; the term set is kept sorted.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(BasisGenerator g) { toggle(g.index()); }  // NOLINT(google-explicit-constructor)
  AlgebraElement(std::initializer_list<BasisGenerator> gens) {
    for (const auto& g : gens) toggle(g.index());
  }
  static AlgebraElement from_indices(std::initializer_list<BasisIndex> idx);

  void toggle(BasisIndex i);
  bool contains(BasisIndex i) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<BasisIndex>& terms() const noexcept { return terms_; }

  AlgebraElement& operator+=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::vector<BasisIndex> terms_;
};

std::string to_string(const AlgebraElement& e, int k);

// Element of L^{(x)n}: a set of basis-index tuples, addition is symmetric difference.
class Tensor {
 public:
  explicit Tensor(std::size_t order = 2) : order_(order) {}

  std::size_t order() const noexcept { return order_; }
  void toggle(const std::vector<BasisIndex>& term);
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::set<std::vector<BasisIndex>>& terms() const noexcept { return terms_; }

  Tensor& operator+=(const Tensor& o);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend bool operator==(const Tensor&, const Tensor&) = default;

  static Tensor product(const std::vector<AlgebraElement>& factors);

 private:
  std::size_t order_;
  std::set<std::vector<BasisIndex>> terms_;
};

std::string to_string(const Tensor& t, int k);

enum class AlgebraName { L, Lprime, Ldoubleprime, Custom };
std::string_view to_string(AlgebraName n);
// Accepts L, Lprime, Ldoubleprime (also L', L''). Throws InputError otherwise.
AlgebraName parse_algebra_name(std::string_view s);

class AlgebraSpec {
 public:
  class Builder;

  // The built-in algebras with theta = 0 and phi, Phi the identity.
  static AlgebraSpec builtin(AlgebraName name, int k);

  int k() const noexcept { return k_; }
  AlgebraName name() const noexcept { return name_; }
  const std::string& display_name() const noexcept { return display_; }
  std::size_t label_count() const noexcept { return std::size_t{1} << k_; }
  std::size_t basis_size() const noexcept { return 2 * label_count(); }

  // Product of two basis generators as a 2-bit mask over the generators of
  // L_{label(a)+label(b)} (bit s = generator_at(label, s)).
  std::uint8_t product_mask(BasisIndex a, BasisIndex b) const { return mult_[a * basis_size() + b]; }
  bool eta_basis(BasisIndex a, BasisIndex b) const;
  // 2-bit mask over {1, x}.
  std::uint8_t theta_mask(H1Label label) const { return theta_[label.bits]; }
  bool has_trivial_phi() const noexcept;
  bool has_trivial_Phi() const noexcept { return Phi_.empty(); }

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  bool eta(const AlgebraElement& a, const AlgebraElement& b) const;
  // epsilon(v) = eta(1 (x) v).
  bool counit(const AlgebraElement& v) const;
  AlgebraElement unit() const { return AlgebraElement(BasisGenerator{H1Label{}, Generator::One}); }
  AlgebraElement theta(H1Label label) const;
  AlgebraElement phi(H1Label beta, const AlgebraElement& v) const;
  AlgebraElement Phi(const AlgebraElement& v) const;

  // Throws InputError if some term does not exist in this algebra.
  void validate(const AlgebraElement& v) const;
  void validate(H1Label label) const;

 private:
  AlgebraSpec(int k, AlgebraName name);

  int k_ = 0;
  AlgebraName name_ = AlgebraName::Custom;
  std::string display_;
  std::vector<std::uint8_t> mult_;   // basis_size^2 entries
  std::vector<std::uint8_t> eta_;    // per label, bit (2*s1 + s2) = eta(g_s1, g_s2)
  std::vector<std::uint8_t> theta_;  // per label
  // Non-identity images only; an absent entry means the generator is fixed.
  std::vector<std::map<BasisIndex, AlgebraElement>> phi_;
  std::map<BasisIndex, AlgebraElement> Phi_;
};

// Construction of custom algebras and mutations of existing ones.
class AlgebraSpec::Builder {
 public:
  // Zero tables, identity phi/Phi, unit law pre-filled so that 1 acts as unit.
  Builder(int k, std::string display_name);
  explicit Builder(AlgebraSpec base);

  // The product must lie in component label(a)+label(b); throws InputError otherwise.
  Builder& set_product(BasisGenerator a, BasisGenerator b, const AlgebraElement& value);
  // Both generators must be in the same component.
  Builder& set_eta(BasisGenerator a, BasisGenerator b, bool value);
  Builder& set_theta(H1Label label, const AlgebraElement& value);
  Builder& set_phi(H1Label beta, BasisGenerator g, const AlgebraElement& image);
  Builder& set_Phi(BasisGenerator g, const AlgebraElement& image);
  Builder& rename(std::string display_name);

  AlgebraSpec build() const { return spec_; }

 private:
  AlgebraSpec spec_;
};

// Delta_{alpha,beta}: L_{alpha+beta} -> L_alpha (x) L_beta.
struct Comultiplication {
  H1Label left;
  H1Label right;
  // images[s]: image of generator s of L_{left+right}, as a 4-bit mask with
  // bit (2*s1 + s2) for generator s1 of L_left tensor generator s2 of L_right.
  std::array<std::uint8_t, 2> images{};

  Tensor apply(const AlgebraElement& v) const;
};

// Solves (id (x) eta)(Delta (x) id) = m on L_{alpha+beta} (x) L_beta for the
// unique Delta_{alpha,beta}. Throws AlgebraInconsistency if the system has no
// solution or more than one.
Comultiplication derive_comultiplication(const AlgebraSpec& alg, H1Label alpha, H1Label beta);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness;  // first counterexample when !passed
};

struct CheckReport {
  std::vector<CheckResult> results;

  bool all_passed() const;
  const CheckResult* find(std::string_view name) const;
};

inline constexpr int kMaxCheckLabelDim = 3;

// Exhaustive verification of the Frobenius, crossed and extended crossed
// pi-algebra axioms, plus the derived Frobenius identities of the
// comultiplication. Throws InputError when k > kMaxCheckLabelDim.
CheckReport check_axioms(const AlgebraSpec& alg);

// Closed sphere and labeled torus values, and the 4-Tu relation for every
// assignment of labels to the four sheets. Throws InputError when
// k > kMaxCheckLabelDim.
CheckReport check_bar_natan_relations(const AlgebraSpec& alg);

// The four tube-attachment composites of the 4-Tu relation applied to the
// unit on four unlabeled discs: tau(W1)+tau(W2) and tau(W3)+tau(W4).
std::pair<Tensor, Tensor> four_tu_unit_instance(const AlgebraSpec& alg);

}  // namespace uhqft
