#include "uhqft/algebra.hpp"

#include <algorithm>

#include "uhqft/errors.hpp"
#include "uhqft/f2linalg.hpp"

namespace uhqft {

std::string to_string(H1Label label, int k) {
  std::string s(static_cast<std::size_t>(k), '0');
  for (int i = 0; i < k; ++i)
    if (label.coord(i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

H1Label label_from_coords(std::span<const int> coords) {
  if (coords.size() > static_cast<std::size_t>(kMaxLabelDim))
    throw InputError("label dimension " + std::to_string(coords.size()) + " exceeds " + std::to_string(kMaxLabelDim));
  H1Label l;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0 && coords[i] != 1) throw InputError("label coordinate must be 0 or 1");
    if (coords[i] == 1) l.bits |= 1u << i;
  }
  return l;
}

std::vector<int> label_coords(H1Label label, int k) {
  std::vector<int> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out[static_cast<std::size_t>(i)] = label.coord(i) ? 1 : 0;
  return out;
}

BasisIndex BasisGenerator::index() const {
  const bool zero_component = gen == Generator::One || gen == Generator::X;
  if (zero_component != label.is_zero())
    throw InputError("generator does not belong to the component of its label");
  return (label.bits << 1) | slot(gen);
}

std::string to_string(const BasisGenerator& g, int k) {
  switch (g.gen) {
    case Generator::One: return "1";
    case Generator::X: return "x";
    case Generator::Y: return "y_" + to_string(g.label, k);
    case Generator::Z: return "z_" + to_string(g.label, k);
  }
  return "?";
}

BasisGenerator parse_generator(std::string_view name, int k) {
  if (name == "1") return {H1Label{}, Generator::One};
  if (name == "x") return {H1Label{}, Generator::X};
  if (name.size() >= 2 && (name[0] == 'y' || name[0] == 'z') && name[1] == '_') {
    const std::string_view bits = name.substr(2);
    if (bits.size() != static_cast<std::size_t>(k))
      throw InputError("generator '" + std::string(name) + "' needs a label of length " + std::to_string(k));
    std::vector<int> coords;
    for (char c : bits) {
      if (c != '0' && c != '1') throw InputError("bad label in generator '" + std::string(name) + "'");
      coords.push_back(c - '0');
    }
    const H1Label label = label_from_coords(coords);
    if (label.is_zero()) throw InputError("y/z generators need a nonzero label: '" + std::string(name) + "'");
    return {label, name[0] == 'y' ? Generator::Y : Generator::Z};
  }
  throw InputError("unknown generator '" + std::string(name) + "'");
}

AlgebraElement AlgebraElement::from_indices(std::initializer_list<BasisIndex> idx) {
  AlgebraElement e;
  for (BasisIndex i : idx) e.toggle(i);
  return e;
}

void AlgebraElement::toggle(BasisIndex i) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i);
  if (it != terms_.end() && *it == i)
    terms_.erase(it);
  else
    terms_.insert(it, i);
}

bool AlgebraElement::contains(BasisIndex i) const { return std::binary_search(terms_.begin(), terms_.end(), i); }

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  std::vector<BasisIndex> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                std::back_inserter(out));
  terms_ = std::move(out);
  return *this;
}

std::string to_string(const AlgebraElement& e, int k) {
  if (e.is_zero()) return "0";
  std::string s;
  for (BasisIndex i : e.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(BasisGenerator::from_index(i), k);
  }
  return s;
}

void Tensor::toggle(const std::vector<BasisIndex>& term) {
  if (term.size() != order_) throw InputError("tensor term has wrong order");
  auto [it, inserted] = terms_.insert(term);
  if (!inserted) terms_.erase(it);
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (o.order_ != order_) throw InputError("tensor order mismatch");
  for (const auto& t : o.terms_) toggle(t);
  return *this;
}

Tensor Tensor::product(const std::vector<AlgebraElement>& factors) {
  Tensor out(factors.size());
  std::vector<BasisIndex> term(factors.size());
  // Odometer over the term lists of each factor.
  std::vector<std::size_t> pos(factors.size(), 0);
  for (const auto& f : factors)
    if (f.is_zero()) return out;
  while (true) {
    for (std::size_t i = 0; i < factors.size(); ++i) term[i] = factors[i].terms()[pos[i]];
    out.toggle(term);
    std::size_t i = factors.size();
    while (i > 0) {
      --i;
      if (++pos[i] < factors[i].terms().size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
    if (factors.empty()) return out;
  }
}

std::string to_string(const Tensor& t, int k) {
  if (t.is_zero()) return "0";
  std::string s;
  for (const auto& term : t.terms()) {
    if (!s.empty()) s += " + ";
    for (std::size_t i = 0; i < term.size(); ++i) {
      if (i > 0) s += "⊗";
      s += to_string(BasisGenerator::from_index(term[i]), k);
    }
  }
  return s;
}

std::string_view to_string(AlgebraName n) {
  switch (n) {
    case AlgebraName::L: return "L";
    case AlgebraName::Lprime: return "Lprime";
    case AlgebraName::Ldoubleprime: return "Ldoubleprime";
    case AlgebraName::Custom: return "Custom";
  }
  return "?";
}

AlgebraName parse_algebra_name(std::string_view s) {
  if (s == "L") return AlgebraName::L;
  if (s == "Lprime" || s == "L'") return AlgebraName::Lprime;
  if (s == "Ldoubleprime" || s == "L''") return AlgebraName::Ldoubleprime;
  throw InputError("unknown algebra '" + std::string(s) + "' (expected L, Lprime or Ldoubleprime)");
}

AlgebraSpec::AlgebraSpec(int k, AlgebraName name) : k_(k), name_(name), display_(to_string(name)) {
  if (k < 0 || k > kMaxAlgebraLabelDim)
    throw InputError("algebra label dimension must be in [0, " + std::to_string(kMaxAlgebraLabelDim) +
                     "], got " + std::to_string(k) + " (use label projection for larger surfaces)");
  mult_.assign(basis_size() * basis_size(), 0);
  eta_.assign(label_count(), 0);
  theta_.assign(label_count(), 0);
  phi_.resize(label_count());
}

AlgebraSpec AlgebraSpec::builtin(AlgebraName name, int k) {
  if (name == AlgebraName::Custom) throw InputError("Custom is not a built-in algebra");
  AlgebraSpec a(k, name);
  const std::size_t n = a.basis_size();
  constexpr std::uint8_t kFirst = 1;   // 1 or y
  constexpr std::uint8_t kSecond = 2;  // x or z
  constexpr std::uint8_t kBoth = 3;

  for (BasisIndex i = 0; i < n; ++i) {
    for (BasisIndex j = 0; j < n; ++j) {
      const auto gi = BasisGenerator::from_index(i);
      const auto gj = BasisGenerator::from_index(j);
      std::uint8_t mask = 0;
      if (gi.gen == Generator::One) {
        mask = static_cast<std::uint8_t>(1u << slot(gj.gen));
      } else if (gj.gen == Generator::One) {
        mask = static_cast<std::uint8_t>(1u << slot(gi.gen));
      } else if (gi.gen == Generator::X && gj.gen == Generator::X) {
        mask = name == AlgebraName::Ldoubleprime ? kFirst : 0;
      } else if (gi.gen == Generator::X || gj.gen == Generator::X) {
        // x times y_a or z_a.
        const Generator other = gi.gen == Generator::X ? gj.gen : gi.gen;
        mask = name == AlgebraName::Ldoubleprime ? static_cast<std::uint8_t>(1u << slot(other)) : 0;
      } else if (gi.label == gj.label) {
        if (gi.gen != gj.gen) mask = name == AlgebraName::Ldoubleprime ? kBoth : kSecond;
      } else {
        mask = name == AlgebraName::L ? kBoth : 0;
      }
      a.mult_[i * n + j] = mask;
    }
  }
  // eta(g_s1, g_s2) = 1 exactly when s1 != s2, on every component.
  for (auto& g : a.eta_) g = (1u << 1) | (1u << 2);
  return a;
}

bool AlgebraSpec::eta_basis(BasisIndex a, BasisIndex b) const {
  if ((a >> 1) != (b >> 1)) return false;
  return (eta_[a >> 1] >> (2 * (a & 1u) + (b & 1u))) & 1u;
}

bool AlgebraSpec::has_trivial_phi() const noexcept {
  return std::all_of(phi_.begin(), phi_.end(), [](const auto& m) { return m.empty(); });
}

void AlgebraSpec::validate(const AlgebraElement& v) const {
  for (BasisIndex i : v.terms())
    if (i >= basis_size())
      throw InputError("generator " + to_string(BasisGenerator::from_index(i), kMaxLabelDim) +
                       " is outside an algebra with k = " + std::to_string(k_));
}

void AlgebraSpec::validate(H1Label label) const {
  if (label.bits >= label_count())
    throw InputError("label outside an algebra with k = " + std::to_string(k_));
}

AlgebraElement AlgebraSpec::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  validate(a);
  validate(b);
  AlgebraElement out;
  for (BasisIndex i : a.terms()) {
    for (BasisIndex j : b.terms()) {
      const std::uint8_t mask = product_mask(i, j);
      const BasisIndex base = ((i >> 1) ^ (j >> 1)) << 1;
      if (mask & 1u) out.toggle(base);
      if (mask & 2u) out.toggle(base | 1u);
    }
  }
  return out;
}

bool AlgebraSpec::eta(const AlgebraElement& a, const AlgebraElement& b) const {
  validate(a);
  validate(b);
  bool acc = false;
  for (BasisIndex i : a.terms())
    for (BasisIndex j : b.terms()) acc ^= eta_basis(i, j);
  return acc;
}

bool AlgebraSpec::counit(const AlgebraElement& v) const { return eta(unit(), v); }

AlgebraElement AlgebraSpec::theta(H1Label label) const {
  validate(label);
  AlgebraElement e;
  if (theta_[label.bits] & 1u) e.toggle(0);
  if (theta_[label.bits] & 2u) e.toggle(1);
  return e;
}

AlgebraElement AlgebraSpec::phi(H1Label beta, const AlgebraElement& v) const {
  validate(beta);
  validate(v);
  const auto& over = phi_[beta.bits];
  AlgebraElement out;
  for (BasisIndex i : v.terms()) {
    auto it = over.find(i);
    if (it == over.end())
      out.toggle(i);
    else
      out += it->second;
  }
  return out;
}

AlgebraElement AlgebraSpec::Phi(const AlgebraElement& v) const {
  validate(v);
  AlgebraElement out;
  for (BasisIndex i : v.terms()) {
    auto it = Phi_.find(i);
    if (it == Phi_.end())
      out.toggle(i);
    else
      out += it->second;
  }
  return out;
}

AlgebraSpec::Builder::Builder(int k, std::string display_name) : spec_(k, AlgebraName::Custom) {
  spec_.display_ = std::move(display_name);
  const std::size_t n = spec_.basis_size();
  for (BasisIndex j = 0; j < n; ++j) {
    const auto bit = static_cast<std::uint8_t>(1u << (j & 1u));
    spec_.mult_[0 * n + j] = bit;
    spec_.mult_[j * n + 0] = bit;
  }
}

AlgebraSpec::Builder::Builder(AlgebraSpec base) : spec_(std::move(base)) {}

AlgebraSpec::Builder& AlgebraSpec::Builder::set_product(BasisGenerator a, BasisGenerator b,
                                                        const AlgebraElement& value) {
  const BasisIndex i = a.index();
  const BasisIndex j = b.index();
  spec_.validate(AlgebraElement(a));
  spec_.validate(AlgebraElement(b));
  const H1Label target = a.label + b.label;
  std::uint8_t mask = 0;
  for (BasisIndex t : value.terms()) {
    if ((t >> 1) != target.bits)
      throw InputError("product " + to_string(a, spec_.k_) + "*" + to_string(b, spec_.k_) +
                       " must lie in the component of label " + to_string(target, spec_.k_));
    mask |= static_cast<std::uint8_t>(1u << (t & 1u));
  }
  spec_.mult_[i * spec_.basis_size() + j] = mask;
  return *this;
}

AlgebraSpec::Builder& AlgebraSpec::Builder::set_eta(BasisGenerator a, BasisGenerator b, bool value) {
  const BasisIndex i = a.index();
  const BasisIndex j = b.index();
  spec_.validate(AlgebraElement(a));
  spec_.validate(AlgebraElement(b));
  if (a.label != b.label) throw InputError("eta pairs generators of different labels; such entries are zero");
  const auto bit = static_cast<std::uint8_t>(1u << (2 * (i & 1u) + (j & 1u)));
  auto& g = spec_.eta_[a.label.bits];
  g = value ? static_cast<std::uint8_t>(g | bit) : static_cast<std::uint8_t>(g & ~bit);
  return *this;
}

AlgebraSpec::Builder& AlgebraSpec::Builder::set_theta(H1Label label, const AlgebraElement& value) {
  spec_.validate(label);
  std::uint8_t mask = 0;
  for (BasisIndex t : value.terms()) {
    if ((t >> 1) != 0) throw InputError("theta values must lie in L_0");
    mask |= static_cast<std::uint8_t>(1u << t);
  }
  spec_.theta_[label.bits] = mask;
  return *this;
}

AlgebraSpec::Builder& AlgebraSpec::Builder::set_phi(H1Label beta, BasisGenerator g, const AlgebraElement& image) {
  spec_.validate(beta);
  spec_.validate(AlgebraElement(g));
  spec_.validate(image);
  auto& over = spec_.phi_[beta.bits];
  if (image == AlgebraElement(g))
    over.erase(g.index());
  else
    over[g.index()] = image;
  return *this;
}

AlgebraSpec::Builder& AlgebraSpec::Builder::set_Phi(BasisGenerator g, const AlgebraElement& image) {
  spec_.validate(AlgebraElement(g));
  spec_.validate(image);
  if (image == AlgebraElement(g))
    spec_.Phi_.erase(g.index());
  else
    spec_.Phi_[g.index()] = image;
  return *this;
}

AlgebraSpec::Builder& AlgebraSpec::Builder::rename(std::string display_name) {
  spec_.display_ = std::move(display_name);
  spec_.name_ = AlgebraName::Custom;
  return *this;
}

Tensor Comultiplication::apply(const AlgebraElement& v) const {
  const H1Label source = left + right;
  Tensor out(2);
  for (BasisIndex i : v.terms()) {
    if ((i >> 1) != source.bits) throw InputError("comultiplication applied outside its source component");
    const std::uint8_t mask = images[i & 1u];
    for (unsigned s1 = 0; s1 < 2; ++s1)
      for (unsigned s2 = 0; s2 < 2; ++s2)
        if ((mask >> (2 * s1 + s2)) & 1u) out.toggle({(left.bits << 1) | s1, (right.bits << 1) | s2});
  }
  return out;
}

Comultiplication derive_comultiplication(const AlgebraSpec& alg, H1Label alpha, H1Label beta) {
  alg.validate(alpha);
  alg.validate(beta);
  const H1Label source = alpha + beta;
  Comultiplication delta{alpha, beta, {}};

  // Unknowns c_{s1,s2}, index 2*s1 + s2, for Delta(v) = sum c (alpha,s1)(x)(beta,s2).
  // One equation per (w in basis of L_beta, output generator o of L_alpha):
  //   sum_{s2} c_{o,s2} eta((beta,s2), w) = [o-coefficient of m(v, w)].
  f2::Matrix system(4, 4);
  for (unsigned w = 0; w < 2; ++w) {
    const BasisIndex wi = (beta.bits << 1) | w;
    for (unsigned o = 0; o < 2; ++o) {
      const std::size_t row = 2 * w + o;
      for (unsigned s2 = 0; s2 < 2; ++s2)
        if (alg.eta_basis((beta.bits << 1) | s2, wi)) system.set(row, 2 * o + s2, true);
    }
  }
  if (f2::rank(system) != 4)
    throw AlgebraInconsistency("comultiplication Delta_{" + to_string(alpha, alg.k()) + "," +
                               to_string(beta, alg.k()) + "} is not uniquely determined (eta degenerate)");

  for (unsigned s = 0; s < 2; ++s) {
    const BasisIndex vi = (source.bits << 1) | s;
    f2::Vector rhs(4);
    for (unsigned w = 0; w < 2; ++w) {
      const BasisIndex wi = (beta.bits << 1) | w;
      const std::uint8_t prod = alg.product_mask(vi, wi);  // lies in L_alpha
      for (unsigned o = 0; o < 2; ++o)
        if ((prod >> o) & 1u) rhs.set(2 * w + o, true);
    }
    const auto sol = f2::solve(system, rhs);
    if (!sol)
      throw AlgebraInconsistency("comultiplication Delta_{" + to_string(alpha, alg.k()) + "," +
                                 to_string(beta, alg.k()) + "} has no solution");
    std::uint8_t mask = 0;
    for (unsigned c = 0; c < 4; ++c)
      if (sol->get(c)) mask |= static_cast<std::uint8_t>(1u << c);
    delta.images[s] = mask;
  }
  return delta;
}

bool CheckReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

const CheckResult* CheckReport::find(std::string_view name) const {
  for (const auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

}  // namespace uhqft
