#include "uhqft/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "uhqft/acceptance.hpp"
#include "uhqft/algebra.hpp"
#include "uhqft/errors.hpp"
#include "uhqft/homology.hpp"
#include "uhqft/io.hpp"

namespace uhqft {

namespace {

struct Options {
  std::string diagram;
  std::string algebra;
  std::string format = "text";
  std::string project;
  std::optional<int> k;
  int t = 0;
  bool graded = false;
  std::size_t max_crossings = kDefaultMaxCrossings;
  std::vector<int> criteria;
};

bool machine(const Options& o) { return o.format == "machine"; }

constexpr std::string_view kFilePrefix = "file:";

AlgebraSpec resolve_algebra(const Options& o, const std::optional<AlgebraSpec>& block, int k) {
  AlgebraSpec alg = [&] {
    if (o.algebra.empty()) return block ? *block : AlgebraSpec::builtin(AlgebraName::L, k);
    if (o.algebra.starts_with(kFilePrefix)) return load_algebra(o.algebra.substr(kFilePrefix.size()));
    return AlgebraSpec::builtin(parse_algebra_name(o.algebra), k);
  }();
  if (alg.k() != k)
    throw InputError("algebra " + alg.display_name() + " has k=" + std::to_string(alg.k()) + " but k=" +
                     std::to_string(k) + " is required");
  return alg;
}

struct Loaded {
  SurfaceDiagram diagram;
  AlgebraSpec algebra;
};

Loaded load_inputs(const Options& o) {
  ParsedDiagram parsed = load_diagram(o.diagram);
  SurfaceDiagram d = parsed.diagram;
  if (!o.project.empty()) d = project_labels(d, load_projection(o.project));
  if (o.k && *o.k != d.k())
    throw InputError("--k " + std::to_string(*o.k) + " does not match the diagram's k=" + std::to_string(d.k()));
  AlgebraSpec alg = resolve_algebra(o, parsed.algebra, d.k());
  return {std::move(d), std::move(alg)};
}

std::string pad_left(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

void write_table(std::ostream& out, const HomologyTable& h, const Options& o) {
  if (machine(o)) {
    out << "# algebra=" << h.algebra << " n_plus=" << h.n_plus << " n_minus=" << h.n_minus;
    if (h.t) out << " t=" << *h.t;
    out << '\n';
    if (h.graded) {
      for (const auto& [ij, dim] : *h.graded)
        out << "betti i=" << ij.first << " j=" << ij.second << " dim=" << dim << '\n';
    } else {
      for (const auto& [i, dim] : h.betti) out << "betti i=" << i << " dim=" << dim << '\n';
    }
    return;
  }
  if (h.betti.empty()) {
    out << "H = 0\n";
    return;
  }
  if (h.graded) {
    std::size_t wi = 0, wj = 0;
    for (const auto& [ij, dim] : *h.graded) {
      wi = std::max(wi, ("i=" + std::to_string(ij.first)).size());
      wj = std::max(wj, ("j=" + std::to_string(ij.second)).size());
    }
    for (const auto& [ij, dim] : *h.graded)
      out << pad_left("i=" + std::to_string(ij.first), wi) << ' ' << pad_left("j=" + std::to_string(ij.second), wj)
          << ": " << dim << '\n';
    return;
  }
  std::size_t wi = 0;
  for (const auto& [i, dim] : h.betti) wi = std::max(wi, ("i=" + std::to_string(i)).size());
  for (const auto& [i, dim] : h.betti) out << pad_left("i=" + std::to_string(i), wi) << ": " << dim << '\n';
}

int run_compute(const Options& o, std::ostream& out) {
  const Loaded in = load_inputs(o);
  const std::optional<int> t = o.graded ? std::optional<int>(o.t) : std::nullopt;
  write_table(out, homology_betti(in.diagram, in.algebra, t, o.max_crossings), o);
  return kExitOk;
}

int run_check_axioms(const Options& o, std::ostream& out) {
  const AlgebraSpec alg = o.algebra.starts_with(kFilePrefix)
                              ? load_algebra(o.algebra.substr(kFilePrefix.size()))
                              : AlgebraSpec::builtin(parse_algebra_name(o.algebra.empty() ? "L" : o.algebra), o.k.value_or(1));
  if (o.k && *o.k != alg.k())
    throw InputError("--k " + std::to_string(*o.k) + " does not match the algebra's k=" + std::to_string(alg.k()));
  const CheckReport report = check_axioms(alg);
  std::size_t failed = 0;
  std::size_t width = 0;
  for (const CheckResult& r : report.results) width = std::max(width, r.name.size());
  if (machine(o)) out << "# algebra=" << alg.display_name() << " k=" << alg.k() << '\n';
  for (const CheckResult& r : report.results) {
    if (!r.passed) ++failed;
    if (machine(o)) {
      out << "check passed=" << r.passed << " cases=" << r.cases << " name=" << r.name << '\n';
    } else {
      out << (r.passed ? "ok    " : "FAIL  ") << r.name << std::string(width - r.name.size(), ' ') << "  (" << r.cases
          << " cases)";
      if (!r.passed) out << "  " << r.witness;
      out << '\n';
    }
  }
  if (failed == 0) {
    out << (machine(o) ? "# " : "") << "all axioms pass\n";
    return kExitOk;
  }
  out << (machine(o) ? "# " : "") << failed << " of " << report.results.size() << " axioms fail\n";
  return kExitFailure;
}

std::string join_indices(const std::vector<std::size_t>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return s;
}

std::string show_bound(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

int run_adequacy(const Options& o, std::ostream& out) {
  ParsedDiagram parsed = load_diagram(o.diagram);
  SurfaceDiagram d = parsed.diagram;
  if (!o.project.empty()) d = project_labels(d, load_projection(o.project));
  const Adequacy plus = weak_adequate(d, Side::Plus);
  const Adequacy minus = weak_adequate(d, Side::Minus);
  const DegreeBounds b = degree_bounds(d, o.max_crossings);
  if (machine(o)) {
    out << "adequacy side=plus adequate=" << plus.adequate << " violating=" << join_indices(plus.violating, ',') << '\n';
    out << "adequacy side=minus adequate=" << minus.adequate << " violating=" << join_indices(minus.violating, ',')
        << '\n';
    out << "bounds n_plus=" << b.n_plus << " n_minus=" << b.n_minus << " i_min=" << show_bound(b.i_min)
        << " i_max=" << show_bound(b.i_max) << '\n';
    return kExitOk;
  }
  const auto line = [&](const char* side, const Adequacy& a) {
    out << side << ": " << (a.adequate ? "adequate" : "not adequate at crossings " + join_indices(a.violating, ' '))
        << '\n';
  };
  line("plus", plus);
  line("minus", minus);
  out << "n_plus=" << b.n_plus << " n_minus=" << b.n_minus << '\n';
  if (!b.i_min) {
    out << "homology under L vanishes\n";
    return kExitOk;
  }
  out << "i_min=" << *b.i_min << " i_max=" << *b.i_max << '\n';
  out << "c_- >= " << -*b.i_min << (b.plus_adequate ? " (attained)" : "") << '\n';
  out << "c_+ >= " << *b.i_max << (b.minus_adequate ? " (attained)" : "") << '\n';
  return kExitOk;
}

int run_dual_check(const Options& o, std::ostream& out) {
  const Loaded in = load_inputs(o);
  const DualityResult r = duality_check(in.diagram, in.algebra, o.max_crossings);
  if (machine(o)) {
    out << "# diagram\n";
    write_table(out, r.diagram, o);
    out << "# mirror\n";
    write_table(out, r.mirrored, o);
    out << "duality holds=" << r.holds << '\n';
  } else {
    out << "diagram:\n";
    write_table(out, r.diagram, o);
    out << "mirror:\n";
    write_table(out, r.mirrored, o);
    out << (r.holds ? "duality holds\n" : "duality fails\n");
  }
  return r.holds ? kExitOk : kExitFailure;
}

int run_selftest(const Options& o, std::ostream& out) {
  std::vector<CriterionResult> results;
  if (o.criteria.empty()) {
    results = run_acceptance();
  } else {
    for (int id : o.criteria) results.push_back(run_criterion(id));
  }
  std::size_t failed = 0;
  for (const CriterionResult& r : results) {
    out << format_result(r) << '\n';
    if (!r.passed) ++failed;
  }
  out << results.size() - failed << "/" << results.size() << " criteria pass\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unoriented HQFT link homology over F_2", "uhqft"};
  app.require_subcommand(1, 1);
  Options o;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output mode")->check(CLI::IsMember({"text", "machine"}));
  };
  const auto add_diagram = [&](CLI::App* sub) {
    sub->add_option("--diagram", o.diagram, "Diagram file")->required();
    sub->add_option("--project", o.project, "Label projection matrix file");
    sub->add_option("--max-crossings", o.max_crossings, "Crossing cap")->check(CLI::NonNegativeNumber);
  };
  const auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("--algebra", o.algebra, "L, Lprime, Ldoubleprime or file:PATH");
    sub->add_option("--k", o.k, "Label dimension")->check(CLI::NonNegativeNumber);
  };

  CLI::App* compute = app.add_subcommand("compute", "Homology table of a diagram");
  add_diagram(compute);
  add_algebra(compute);
  add_format(compute);
  compute->add_flag("--graded", o.graded, "Split by quantum degree");
  compute->add_option("--t", o.t, "Grading parameter");

  CLI::App* axioms = app.add_subcommand("check-axioms", "Verify the algebra axioms");
  add_algebra(axioms);
  add_format(axioms);

  CLI::App* adequacy = app.add_subcommand("adequacy", "Plus/minus adequacy and degree bounds");
  add_diagram(adequacy);
  add_format(adequacy);

  CLI::App* dual = app.add_subcommand("dual-check", "Compare a diagram with its mirror");
  add_diagram(dual);
  add_algebra(dual);
  add_format(dual);

  CLI::App* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--criterion", o.criteria, "Run only these criteria");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    if (compute->parsed()) return run_compute(o, out);
    if (axioms->parsed()) return run_check_axioms(o, out);
    if (adequacy->parsed()) return run_adequacy(o, out);
    if (dual->parsed()) return run_dual_check(o, out);
    return run_selftest(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace uhqft
