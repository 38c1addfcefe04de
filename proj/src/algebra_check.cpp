#include <array>
#include <functional>
#include <optional>

#include "uhqft/algebra.hpp"
#include "uhqft/errors.hpp"
#include "uhqft/f2linalg.hpp"

namespace uhqft {

namespace {

// Records the outcome of one named check; only the first failure is kept.
class Recorder {
 public:
  Recorder(CheckReport& report, std::string name) : report_(report) { result_.name = std::move(name); }
  ~Recorder() { report_.results.push_back(std::move(result_)); }
  Recorder(const Recorder&) = delete;
  Recorder& operator=(const Recorder&) = delete;

  void expect(bool ok, const std::function<std::string()>& witness) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.witness = witness();
    }
  }

 private:
  CheckReport& report_;
  CheckResult result_;
};

struct Context {
  const AlgebraSpec& alg;
  std::vector<H1Label> labels;
  std::vector<BasisIndex> basis;

  explicit Context(const AlgebraSpec& a) : alg(a) {
    for (std::uint32_t l = 0; l < a.label_count(); ++l) labels.push_back(H1Label{l});
    for (BasisIndex i = 0; i < a.basis_size(); ++i) basis.push_back(i);
  }

  std::string name(BasisIndex i) const { return to_string(BasisGenerator::from_index(i), alg.k()); }
  std::string str(const AlgebraElement& e) const { return to_string(e, alg.k()); }
  std::string str(const Tensor& t) const { return to_string(t, alg.k()); }
  std::string lab(H1Label l) const { return "[" + to_string(l, alg.k()) + "]"; }
  static AlgebraElement gen(BasisIndex i) { return AlgebraElement::from_indices({i}); }
  static std::array<BasisIndex, 2> component(H1Label l) { return {l.bits << 1, (l.bits << 1) | 1u}; }
};

H1Label label_of(BasisIndex i) { return H1Label{i >> 1}; }

// Matrix of a linear map on a component, column s = image of generator s.
std::array<std::uint8_t, 2> component_matrix(H1Label l, const std::function<AlgebraElement(BasisIndex)>& f) {
  std::array<std::uint8_t, 2> cols{};
  for (unsigned s = 0; s < 2; ++s) {
    const AlgebraElement img = f((l.bits << 1) | s);
    for (BasisIndex t : img.terms())
      if (label_of(t) == l) cols[s] |= static_cast<std::uint8_t>(1u << (t & 1u));
  }
  return cols;
}

bool trace(const std::array<std::uint8_t, 2>& cols) { return ((cols[0] & 1u) ^ ((cols[1] >> 1) & 1u)) != 0; }

// Applies m on the two tensor factors to a basis pair.
AlgebraElement mult_pair(const AlgebraSpec& alg, const std::vector<BasisIndex>& term, std::size_t i, std::size_t j) {
  return alg.multiply(Context::gen(term[i]), Context::gen(term[j]));
}

// (f (x) g) applied to a two-factor tensor, followed by m.
AlgebraElement multiply_tensor(const AlgebraSpec& alg, const Tensor& t,
                               const std::function<AlgebraElement(const AlgebraElement&)>& f,
                               const std::function<AlgebraElement(const AlgebraElement&)>& g) {
  AlgebraElement out;
  for (const auto& term : t.terms()) out += alg.multiply(f(Context::gen(term[0])), g(Context::gen(term[1])));
  return out;
}

// Replaces factor pos of every term by the tensor image of that factor.
Tensor expand_factor(const Tensor& t, std::size_t pos, const std::function<Tensor(BasisIndex)>& f) {
  Tensor out(t.order() + 1);
  for (const auto& term : t.terms()) {
    const Tensor img = f(term[pos]);
    for (const auto& piece : img.terms()) {
      std::vector<BasisIndex> next;
      next.reserve(out.order());
      next.insert(next.end(), term.begin(), term.begin() + static_cast<std::ptrdiff_t>(pos));
      next.insert(next.end(), piece.begin(), piece.end());
      next.insert(next.end(), term.begin() + static_cast<std::ptrdiff_t>(pos) + 1, term.end());
      out.toggle(next);
    }
  }
  return out;
}

class ComultiplicationTable {
 public:
  explicit ComultiplicationTable(const AlgebraSpec& alg) : n_(alg.label_count()) {
    table_.resize(n_ * n_);
    errors_.resize(n_ * n_);
    for (std::uint32_t a = 0; a < n_; ++a) {
      for (std::uint32_t b = 0; b < n_; ++b) {
        try {
          table_[a * n_ + b] = derive_comultiplication(alg, H1Label{a}, H1Label{b});
        } catch (const AlgebraInconsistency& e) {
          errors_[a * n_ + b] = e.what();
        }
      }
    }
  }

  bool ok(H1Label a, H1Label b) const { return errors_[a.bits * n_ + b.bits].empty(); }
  const std::string& error(H1Label a, H1Label b) const { return errors_[a.bits * n_ + b.bits]; }
  bool all_ok() const {
    for (const auto& e : errors_)
      if (!e.empty()) return false;
    return true;
  }
  const Comultiplication& get(H1Label a, H1Label b) const { return table_[a.bits * n_ + b.bits]; }
  Tensor apply(H1Label a, H1Label b, const AlgebraElement& v) const { return get(a, b).apply(v); }

 private:
  std::size_t n_;
  std::vector<Comultiplication> table_;
  std::vector<std::string> errors_;
};

void require_small(const AlgebraSpec& alg) {
  if (alg.k() > kMaxCheckLabelDim)
    throw InputError("exhaustive checks are limited to k <= " + std::to_string(kMaxCheckLabelDim) + ", got k = " +
                     std::to_string(alg.k()));
}

void check_frobenius(const Context& c, CheckReport& report) {
  const AlgebraSpec& alg = c.alg;
  {
    Recorder r(report, "associativity");
    for (BasisIndex a : c.basis)
      for (BasisIndex b : c.basis)
        for (BasisIndex d : c.basis) {
          const auto lhs = alg.multiply(alg.multiply(c.gen(a), c.gen(b)), c.gen(d));
          const auto rhs = alg.multiply(c.gen(a), alg.multiply(c.gen(b), c.gen(d)));
          r.expect(lhs == rhs, [&] {
            return "(" + c.name(a) + "*" + c.name(b) + ")*" + c.name(d) + " = " + c.str(lhs) + " but " + c.name(a) +
                   "*(" + c.name(b) + "*" + c.name(d) + ") = " + c.str(rhs);
          });
        }
  }
  {
    Recorder r(report, "unit");
    for (BasisIndex v : c.basis) {
      const auto left = alg.multiply(alg.unit(), c.gen(v));
      const auto right = alg.multiply(c.gen(v), alg.unit());
      r.expect(left == c.gen(v) && right == c.gen(v), [&] {
        return "1*" + c.name(v) + " = " + c.str(left) + ", " + c.name(v) + "*1 = " + c.str(right);
      });
    }
  }
  {
    Recorder r(report, "eta non-degenerate");
    for (H1Label l : c.labels) {
      const auto g = c.component(l);
      f2::Matrix gram(2, 2);
      for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) gram.set(i, j, alg.eta_basis(g[i], g[j]));
      r.expect(f2::rank(gram) == 2, [&] { return "Gram matrix of eta on L_" + c.lab(l) + " is singular"; });
    }
  }
  {
    Recorder r(report, "eta(ab,c) = eta(a,bc)");
    for (BasisIndex a : c.basis)
      for (BasisIndex b : c.basis)
        for (BasisIndex d : c.basis) {
          const bool lhs = alg.eta(alg.multiply(c.gen(a), c.gen(b)), c.gen(d));
          const bool rhs = alg.eta(c.gen(a), alg.multiply(c.gen(b), c.gen(d)));
          r.expect(lhs == rhs, [&] {
            return "a=" + c.name(a) + ", b=" + c.name(b) + ", c=" + c.name(d) + ": eta(ab,c) = " +
                   std::to_string(lhs) + ", eta(a,bc) = " + std::to_string(rhs);
          });
        }
  }
}

void check_crossed(const Context& c, CheckReport& report) {
  const AlgebraSpec& alg = c.alg;
  {
    Recorder r(report, "phi is a homomorphism");
    for (BasisIndex v : c.basis) {
      const auto img = alg.phi(H1Label{}, c.gen(v));
      r.expect(img == c.gen(v), [&] { return "phi_0(" + c.name(v) + ") = " + c.str(img); });
    }
    for (H1Label a : c.labels)
      for (H1Label b : c.labels)
        for (BasisIndex v : c.basis) {
          const auto lhs = alg.phi(a + b, c.gen(v));
          const auto rhs = alg.phi(a, alg.phi(b, c.gen(v)));
          r.expect(lhs == rhs, [&] {
            return "phi_" + c.lab(a + b) + "(" + c.name(v) + ") = " + c.str(lhs) + " but phi_" + c.lab(a) +
                   " phi_" + c.lab(b) + " gives " + c.str(rhs);
          });
        }
  }
  {
    Recorder r(report, "phi preserves components");
    for (H1Label b : c.labels)
      for (BasisIndex v : c.basis) {
        const auto img = alg.phi(b, c.gen(v));
        bool ok = true;
        for (BasisIndex t : img.terms()) ok = ok && label_of(t) == label_of(v);
        r.expect(ok, [&] { return "phi_" + c.lab(b) + "(" + c.name(v) + ") = " + c.str(img); });
      }
  }
  {
    Recorder r(report, "phi is an algebra automorphism");
    for (H1Label b : c.labels) {
      const auto u = alg.phi(b, alg.unit());
      r.expect(u == alg.unit(), [&] { return "phi_" + c.lab(b) + "(1) = " + c.str(u); });
      for (H1Label l : c.labels) {
        const auto cols = component_matrix(l, [&](BasisIndex i) { return alg.phi(b, c.gen(i)); });
        f2::Matrix m(2, 2);
        for (unsigned s = 0; s < 2; ++s)
          for (unsigned t = 0; t < 2; ++t) m.set(t, s, (cols[s] >> t) & 1u);
        r.expect(f2::rank(m) == 2, [&] { return "phi_" + c.lab(b) + " is singular on L_" + c.lab(l); });
      }
      for (BasisIndex v : c.basis)
        for (BasisIndex w : c.basis) {
          const auto lhs = alg.phi(b, alg.multiply(c.gen(v), c.gen(w)));
          const auto rhs = alg.multiply(alg.phi(b, c.gen(v)), alg.phi(b, c.gen(w)));
          r.expect(lhs == rhs, [&] {
            return "phi_" + c.lab(b) + "(" + c.name(v) + "*" + c.name(w) + ") = " + c.str(lhs) +
                   " but the product of images is " + c.str(rhs);
          });
        }
    }
  }
  {
    Recorder r(report, "phi preserves eta");
    for (H1Label b : c.labels)
      for (BasisIndex v : c.basis)
        for (BasisIndex w : c.basis) {
          const bool lhs = alg.eta(alg.phi(b, c.gen(v)), alg.phi(b, c.gen(w)));
          const bool rhs = alg.eta(c.gen(v), c.gen(w));
          r.expect(lhs == rhs, [&] { return "beta=" + c.lab(b) + ", " + c.name(v) + ", " + c.name(w); });
        }
  }
  {
    Recorder r(report, "phi_a is the identity on L_a");
    for (H1Label a : c.labels)
      for (BasisIndex v : c.component(a)) {
        const auto img = alg.phi(a, c.gen(v));
        r.expect(img == c.gen(v), [&] { return "phi_" + c.lab(a) + "(" + c.name(v) + ") = " + c.str(img); });
      }
  }
  {
    Recorder r(report, "phi_b(a) b = b a");
    for (BasisIndex a : c.basis)
      for (BasisIndex b : c.basis) {
        const auto lhs = alg.multiply(alg.phi(label_of(b), c.gen(a)), c.gen(b));
        const auto rhs = alg.multiply(c.gen(b), c.gen(a));
        r.expect(lhs == rhs, [&] {
          return "a=" + c.name(a) + ", b=" + c.name(b) + ": phi_b(a)b = " + c.str(lhs) + ", ba = " + c.str(rhs);
        });
      }
  }
  {
    Recorder r(report, "trace axiom");
    for (H1Label a : c.labels)
      for (H1Label b : c.labels)
        for (BasisIndex cc : c.component(H1Label{})) {
          const auto left = component_matrix(a, [&](BasisIndex i) { return alg.multiply(c.gen(cc), alg.phi(b, c.gen(i))); });
          const auto right = component_matrix(b, [&](BasisIndex i) { return alg.phi(a, alg.multiply(c.gen(cc), c.gen(i))); });
          r.expect(trace(left) == trace(right), [&] {
            return "alpha=" + c.lab(a) + ", beta=" + c.lab(b) + ", c=" + c.name(cc) + ": traces " +
                   std::to_string(trace(left)) + " and " + std::to_string(trace(right));
          });
        }
  }
}

// q(1) for (alpha, beta, gamma): solve sum_i eta(b_i, v) a_i = phi_{beta+gamma}(v) on L_{alpha+beta}.
std::optional<AlgebraElement> q_of_one(const AlgebraSpec& alg, H1Label a, H1Label b, H1Label g) {
  const H1Label ab = a + b;
  const auto basis = Context::component(ab);
  // Unknowns T_{s1,s2} (index 2*s1+s2) for sum T (ab,s1) (x) (ab,s2).
  f2::Matrix system(4, 4);
  f2::Vector rhs(4);
  for (unsigned v = 0; v < 2; ++v) {
    const AlgebraElement img = alg.phi(b + g, Context::gen(basis[v]));
    for (unsigned o = 0; o < 2; ++o) {
      const std::size_t row = 2 * v + o;
      for (unsigned s2 = 0; s2 < 2; ++s2)
        if (alg.eta_basis(basis[s2], basis[v])) system.set(row, 2 * o + s2, true);
      if (img.contains(basis[o])) rhs.set(row, true);
    }
  }
  if (f2::rank(system) != 4) return std::nullopt;
  const auto sol = f2::solve(system, rhs);
  if (!sol) return std::nullopt;
  AlgebraElement q;
  for (unsigned s1 = 0; s1 < 2; ++s1)
    for (unsigned s2 = 0; s2 < 2; ++s2)
      if (sol->get(2 * s1 + s2)) q += alg.multiply(Context::gen(basis[s1]), Context::gen(basis[s2]));
  return q;
}

void check_extended(const Context& c, const ComultiplicationTable& delta, CheckReport& report) {
  const AlgebraSpec& alg = c.alg;
  const auto Phi = [&](const AlgebraElement& v) { return alg.Phi(v); };
  {
    Recorder r(report, "Phi^2 = id");
    for (BasisIndex v : c.basis) {
      const auto img = alg.Phi(alg.Phi(c.gen(v)));
      r.expect(img == c.gen(v), [&] { return "Phi(Phi(" + c.name(v) + ")) = " + c.str(img); });
    }
  }
  {
    Recorder r(report, "Phi preserves components");
    for (BasisIndex v : c.basis) {
      const auto img = alg.Phi(c.gen(v));
      bool ok = true;
      for (BasisIndex t : img.terms()) ok = ok && label_of(t) == label_of(v);
      r.expect(ok, [&] { return "Phi(" + c.name(v) + ") = " + c.str(img); });
    }
  }
  {
    Recorder r(report, "Phi(vw) = Phi(w)Phi(v)");
    for (BasisIndex v : c.basis)
      for (BasisIndex w : c.basis) {
        const auto lhs = alg.Phi(alg.multiply(c.gen(v), c.gen(w)));
        const auto rhs = alg.multiply(alg.Phi(c.gen(w)), alg.Phi(c.gen(v)));
        r.expect(lhs == rhs, [&] { return "v=" + c.name(v) + ", w=" + c.name(w) + ": " + c.str(lhs) + " vs " + c.str(rhs); });
      }
  }
  {
    Recorder r(report, "Phi(1) = 1");
    const auto img = alg.Phi(alg.unit());
    r.expect(img == alg.unit(), [&] { return "Phi(1) = " + c.str(img); });
  }
  {
    Recorder r(report, "eta(Phi, Phi) = eta");
    for (BasisIndex v : c.basis)
      for (BasisIndex w : c.basis) {
        const bool lhs = alg.eta(alg.Phi(c.gen(v)), alg.Phi(c.gen(w)));
        r.expect(lhs == alg.eta(c.gen(v), c.gen(w)), [&] { return "v=" + c.name(v) + ", w=" + c.name(w); });
      }
  }
  {
    Recorder r(report, "Phi commutes with phi");
    for (H1Label a : c.labels)
      for (BasisIndex v : c.basis) {
        const auto lhs = alg.Phi(alg.phi(a, c.gen(v)));
        const auto rhs = alg.phi(a, alg.Phi(c.gen(v)));
        r.expect(lhs == rhs, [&] { return "alpha=" + c.lab(a) + ", v=" + c.name(v); });
      }
  }
  {
    Recorder r(report, "comultiplication exists");
    for (H1Label a : c.labels)
      for (H1Label b : c.labels) r.expect(delta.ok(a, b), [&] { return delta.error(a, b); });
  }
  if (delta.all_ok()) {
    Recorder r(report, "m(Phi x phi_g)Delta = phi_g(theta theta v)");
    for (H1Label a : c.labels)
      for (H1Label b : c.labels)
        for (H1Label g : c.labels)
          for (BasisIndex v : c.component(a + b)) {
            const Tensor d = delta.apply(a, b, c.gen(v));
            const auto phig = [&](const AlgebraElement& e) { return alg.phi(g, e); };
            const auto lhs1 = multiply_tensor(alg, d, Phi, phig);
            const auto rhs1 = alg.phi(g, alg.multiply(alg.multiply(alg.theta(a + g), alg.theta(g)), c.gen(v)));
            r.expect(lhs1 == rhs1, [&] {
              return "alpha=" + c.lab(a) + ", beta=" + c.lab(b) + ", gamma=" + c.lab(g) + ", v=" + c.name(v) +
                     ": m(Phi x phi_gamma)Delta(v) = " + c.str(lhs1) + ", expected " + c.str(rhs1);
            });
            const auto lhs2 = multiply_tensor(alg, d, phig, Phi);
            const auto rhs2 = alg.phi(g, alg.multiply(alg.multiply(alg.theta(b + g), alg.theta(g)), c.gen(v)));
            r.expect(lhs2 == rhs2, [&] {
              return "alpha=" + c.lab(a) + ", beta=" + c.lab(b) + ", gamma=" + c.lab(g) + ", v=" + c.name(v) +
                     ": m(phi_gamma x Phi)Delta(v) = " + c.str(lhs2) + ", expected " + c.str(rhs2);
            });
          }
  }
  {
    Recorder r(report, "Phi(theta_b v) = phi(theta v)");
    for (H1Label a : c.labels)
      for (H1Label b : c.labels)
        for (BasisIndex v : c.component(a)) {
          const auto lhs = alg.Phi(alg.multiply(alg.theta(b), c.gen(v)));
          const auto rhs = alg.phi(b + a, alg.multiply(alg.theta(b + a), c.gen(v)));
          r.expect(lhs == rhs, [&] { return "alpha=" + c.lab(a) + ", beta=" + c.lab(b) + ", v=" + c.name(v); });
        }
  }
  {
    Recorder r(report, "Phi(theta) = theta");
    for (H1Label a : c.labels) {
      const auto img = alg.Phi(alg.theta(a));
      r.expect(img == alg.theta(a), [&] { return "alpha=" + c.lab(a) + ": Phi(theta) = " + c.str(img); });
    }
  }
  {
    Recorder r(report, "phi(theta) = theta");
    for (H1Label a : c.labels)
      for (H1Label b : c.labels) {
        const auto img = alg.phi(b, alg.theta(a));
        r.expect(img == alg.theta(a), [&] { return "alpha=" + c.lab(a) + ", beta=" + c.lab(b); });
      }
  }
  {
    Recorder r(report, "theta theta theta = q(1) theta");
    for (H1Label a : c.labels)
      for (H1Label b : c.labels)
        for (H1Label g : c.labels) {
          const auto q = q_of_one(alg, a, b, g);
          if (!q) {
            r.expect(false, [&] {
              return "q(1) is not uniquely determined for alpha=" + c.lab(a) + ", beta=" + c.lab(b) +
                     ", gamma=" + c.lab(g);
            });
            continue;
          }
          const auto lhs = alg.multiply(alg.multiply(alg.theta(a), alg.theta(b)), alg.theta(g));
          const auto rhs = alg.multiply(*q, alg.theta(a + b + g));
          r.expect(lhs == rhs, [&] {
            return "alpha=" + c.lab(a) + ", beta=" + c.lab(b) + ", gamma=" + c.lab(g) + ": " + c.str(lhs) +
                   " vs q(1)theta = " + c.str(rhs);
          });
        }
  }
}

void check_derived(const Context& c, const ComultiplicationTable& delta, CheckReport& report) {
  if (!delta.all_ok()) return;
  const AlgebraSpec& alg = c.alg;
  {
    Recorder r(report, "coassociativity");
    for (H1Label a : c.labels)
      for (H1Label b : c.labels)
        for (H1Label g : c.labels)
          for (BasisIndex v : c.component(a + b + g)) {
            const Tensor lhs = expand_factor(delta.apply(a + b, g, c.gen(v)), 0,
                                             [&](BasisIndex i) { return delta.apply(a, b, c.gen(i)); });
            const Tensor rhs = expand_factor(delta.apply(a, b + g, c.gen(v)), 1,
                                             [&](BasisIndex i) { return delta.apply(b, g, c.gen(i)); });
            r.expect(lhs == rhs, [&] {
              return "alpha=" + c.lab(a) + ", beta=" + c.lab(b) + ", gamma=" + c.lab(g) + ", v=" + c.name(v) + ": " +
                     c.str(lhs) + " vs " + c.str(rhs);
            });
          }
  }
  {
    Recorder r(report, "counit");
    for (H1Label a : c.labels)
      for (BasisIndex v : c.component(a)) {
        AlgebraElement left;
        const Tensor dl = delta.apply(H1Label{}, a, c.gen(v));
        for (const auto& t : dl.terms())
          if (alg.counit(c.gen(t[0]))) left.toggle(t[1]);
        AlgebraElement right;
        const Tensor dr = delta.apply(a, H1Label{}, c.gen(v));
        for (const auto& t : dr.terms())
          if (alg.counit(c.gen(t[1]))) right.toggle(t[0]);
        r.expect(left == c.gen(v) && right == c.gen(v), [&] {
          return "v=" + c.name(v) + ": (eps x id)Delta = " + c.str(left) + ", (id x eps)Delta = " + c.str(right);
        });
      }
  }
  {
    Recorder r(report, "(id x m)(Delta x id) = Delta m");
    for (H1Label a : c.labels)
      for (H1Label b : c.labels)
        for (BasisIndex v : c.component(a + b))
          for (BasisIndex w : c.basis) {
            const H1Label g = label_of(w);
            Tensor lhs(2);
            const Tensor dv = delta.apply(a, b, c.gen(v));
            for (const auto& t : dv.terms()) {
              const auto prod = alg.multiply(c.gen(t[1]), c.gen(w));
              lhs += Tensor::product({c.gen(t[0]), prod});
            }
            const Tensor rhs = delta.apply(a, b + g, alg.multiply(c.gen(v), c.gen(w)));
            r.expect(lhs == rhs, [&] {
              return "alpha=" + c.lab(a) + ", beta=" + c.lab(b) + ", v=" + c.name(v) + ", w=" + c.name(w) + ": " +
                     c.str(lhs) + " vs " + c.str(rhs);
            });
          }
  }
}

// Tube between factors i and j: Delta_{l_i,l_j} o m on those factors.
Tensor tube(const AlgebraSpec& alg, const ComultiplicationTable& delta, const Tensor& t, std::size_t i, std::size_t j) {
  Tensor out(t.order());
  for (const auto& term : t.terms()) {
    const H1Label li = label_of(term[i]);
    const H1Label lj = label_of(term[j]);
    const Tensor img = delta.apply(li, lj, mult_pair(alg, term, i, j));
    for (const auto& piece : img.terms()) {
      auto next = term;
      next[i] = piece[0];
      next[j] = piece[1];
      out.toggle(next);
    }
  }
  return out;
}

}  // namespace

CheckReport check_axioms(const AlgebraSpec& alg) {
  require_small(alg);
  const Context c(alg);
  const ComultiplicationTable delta(alg);
  CheckReport report;
  check_frobenius(c, report);
  check_crossed(c, report);
  check_extended(c, delta, report);
  check_derived(c, delta, report);
  return report;
}

std::pair<Tensor, Tensor> four_tu_unit_instance(const AlgebraSpec& alg) {
  const ComultiplicationTable delta(alg);
  if (!delta.ok(H1Label{}, H1Label{})) throw AlgebraInconsistency(delta.error(H1Label{}, H1Label{}));
  const AlgebraElement one = alg.unit();
  const Tensor input = Tensor::product({one, one, one, one});
  return {tube(alg, delta, input, 0, 1) + tube(alg, delta, input, 2, 3),
          tube(alg, delta, input, 0, 2) + tube(alg, delta, input, 1, 3)};
}

CheckReport check_bar_natan_relations(const AlgebraSpec& alg) {
  require_small(alg);
  const Context c(alg);
  const ComultiplicationTable delta(alg);
  CheckReport report;
  {
    Recorder r(report, "S: sphere");
    const bool value = alg.eta(alg.unit(), alg.unit());
    r.expect(!value, [&] { return std::string("eta(1,1) = 1"); });
  }
  {
    Recorder r(report, "comultiplication exists");
    for (H1Label a : c.labels)
      for (H1Label b : c.labels) r.expect(delta.ok(a, b), [&] { return delta.error(a, b); });
  }
  if (!delta.all_ok()) return report;
  {
    Recorder r(report, "T: torus");
    for (H1Label a : c.labels) {
      AlgebraElement handle;
      const Tensor d = delta.apply(a, a, alg.unit());
      for (const auto& t : d.terms()) handle += alg.multiply(c.gen(t[0]), c.gen(t[1]));
      const bool value = alg.counit(handle);
      r.expect(!value, [&] { return "alpha=" + c.lab(a) + ": eps(m(Delta(1))) = 1"; });
    }
  }
  {
    Recorder r(report, "4Tu");
    for (H1Label l0 : c.labels)
      for (H1Label l1 : c.labels)
        for (H1Label l2 : c.labels)
          for (H1Label l3 : c.labels)
            for (unsigned s = 0; s < 16; ++s) {
              Tensor input(4);
              input.toggle({(l0.bits << 1) | (s & 1u), (l1.bits << 1) | ((s >> 1) & 1u),
                            (l2.bits << 1) | ((s >> 2) & 1u), (l3.bits << 1) | ((s >> 3) & 1u)});
              const Tensor lhs = tube(alg, delta, input, 0, 1) + tube(alg, delta, input, 2, 3);
              const Tensor rhs = tube(alg, delta, input, 0, 2) + tube(alg, delta, input, 1, 3);
              r.expect(lhs == rhs, [&] {
                return "input " + c.str(input) + ": W1+W2 = " + c.str(lhs) + ", W3+W4 = " + c.str(rhs);
              });
            }
  }
  {
    Recorder r(report, "4Tu unit instance");
    const auto [lhs, rhs] = four_tu_unit_instance(alg);
    r.expect(lhs == rhs, [&] { return c.str(lhs) + " vs " + c.str(rhs); });
  }
  return report;
}

}  // namespace uhqft
