// cactus: apolarity, Hilbert function decompositions and cactus rank bounds.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cactus/apolar.hpp"
#include "cactus/bounds.hpp"
#include "cactus/enumerate.hpp"
#include "cactus/hilbert.hpp"
#include "cactus/ring.hpp"
#include "cactus/selftest.hpp"
#include "cactus/witness.hpp"

using json = nlohmann::json;
using namespace cactus;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string f;
  std::size_t nvars = 0;
  int n = 0;
  int length = 0;
  int max_degree = -1;
  std::string at;
  std::string delta;
  std::vector<std::string> phis;
  bool nonsmoothable_only = false;
  bool all_candidates = false;
  bool json = false;
  bool zero_based = false;
  bool one_based = false;
  int threads = 1;
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  std::string out;
};

std::vector<int> to_vector(const HilbertFunction& H) { return H.values; }

// Largest variable index mentioned in `text`, or -1.
int max_index(const std::string& text) {
  static const std::regex var("[xy]([0-9]+)");
  int best = -1;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), var); it != std::sregex_iterator(); ++it)
    best = std::max(best, std::stoi((*it)[1]));
  return best;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& os) : o_(o), os_(os) {}

  int base(bool homogeneous_default) const {
    if (o_.zero_based) return 0;
    if (o_.one_based) return 1;
    return homogeneous_default ? 0 : 1;
  }

  std::size_t nvars_for(const std::vector<std::string>& texts, int index_base) const {
    if (o_.nvars > 0) return o_.nvars;
    int top = -1;
    for (const auto& t : texts) top = std::max(top, max_index(t));
    if (top < index_base) return 1;
    return static_cast<std::size_t>(top - index_base + 1);
  }

  Polynomial primal(const std::string& text, std::size_t nvars, int index_base) const {
    if (text.empty()) throw UsageError("--f is required");
    return parse(text, nvars, Side::primal, ParseOptions{index_base, 0});
  }

  json space_json(const FilteredSpace& s, int b) const {
    json rows = json::array();
    for (std::size_t k = 0; k < s.dimension(); ++k)
      rows.push_back({{"partial", s.rows()[k].to_string(b)}, {"degree", s.degree_of(k)}, {"order", s.order_of(k)}});
    return rows;
  }

  int diff() {
    const int b = base(false);
    const Polynomial f = primal(o_.f, nvars_for({o_.f}, b), b);
    const FilteredSpace s(f);
    const HilbertFunction H = hilbert_function(s);
    if (o_.json) {
      os_ << json{{"dim_Diff", s.dimension()}, {"hilbert", to_vector(H)}, {"basis", space_json(s, b)}}.dump() << "\n";
      return kOk;
    }
    os_ << "f = " << f.to_string(b) << "\n";
    for (std::size_t k = 0; k < s.dimension(); ++k)
      os_ << "  " << s.rows()[k].to_string(b) << "    degree " << s.degree_of(k) << ", order " << s.order_of(k) << "\n";
    os_ << "dim_Diff = " << s.dimension() << "\n";
    os_ << "hilbert = " << format_sequence(H.values) << "\n";
    return kOk;
  }

  int hilbert() {
    const int b = base(false);
    const Polynomial f = primal(o_.f, nvars_for({o_.f}, b), b);
    const FilteredSpace s(f);
    const HilbertFunction H = hilbert_function(s);
    const SymmetricDecomposition D = symmetric_decomposition(s);
    const auto dims = embedding_dims(D);
    if (o_.json) {
      os_ << json{{"H", H.values}, {"deltas", D.deltas}, {"d", D.d}, {"embedding_dims", dims}}.dump() << "\n";
      return kOk;
    }
    os_ << format_compact(H, D) << "\n";
    for (std::size_t a = 0; a < D.rows(); ++a) os_ << "  Delta_" << a << " = " << format_sequence(D.deltas[a]) << "\n";
    os_ << "embedding dims n_0..n_" << dims.size() - 1 << " = " << format_sequence(dims) << "\n";
    return kOk;
  }

  int annihilator_cmd() {
    const int b = base(false);
    const Polynomial f = primal(o_.f, nvars_for({o_.f}, b), b);
    const int D = o_.max_degree >= 0 ? o_.max_degree : f.degree() + 1;
    const Annihilator ann = annihilator(f, D);
    std::vector<std::string> gens;
    for (const auto& g : ann.generators) gens.push_back(g.to_string(b));
    if (o_.json) {
      os_ << json{{"max_degree", D}, {"generators", gens}, {"stabilized", ann.stabilized}}.dump() << "\n";
      return kOk;
    }
    os_ << "kernel of contraction on degree <= " << D << " (" << gens.size() << " elements)\n";
    for (const auto& g : gens) os_ << "  " << g << "\n";
    os_ << "stabilized = " << (ann.stabilized ? "yes" : "no") << "\n";
    return kOk;
  }

  int local_length() {
    const int b = base(true);
    if (o_.at.empty()) throw UsageError("--at is required");
    const std::size_t n = nvars_for({o_.f, o_.at}, b);
    const Polynomial F = primal(o_.f, n, b);
    const Polynomial l = primal(o_.at, n, b);
    const ApolarScheme z = local_scheme(F, l);
    std::vector<std::string> gens;
    for (const auto& g : z.annihilator) gens.push_back(g.to_string(1));
    if (o_.json) {
      os_ << json{{"length", z.length},
                  {"hilbert", z.hilbert.values},
                  {"defining_polynomial", z.defining_polynomial.to_string(1)},
                  {"annihilator", gens},
                  {"stabilized", z.stabilized},
                  {"apolarity_checked", z.apolarity_checked}}
                 .dump()
          << "\n";
    } else {
      os_ << "f = " << z.defining_polynomial.to_string(1) << "\n";
      os_ << "length = " << z.length << "\n";
      os_ << "hilbert = " << format_sequence(z.hilbert.values) << "\n";
      os_ << "annihilator generators (degree <= " << F.degree() + 1 << "): " << gens.size() << "\n";
      os_ << "apolar to F: " << (z.apolarity_checked ? "yes" : "NO") << "\n";
    }
    return z.apolarity_checked ? kOk : kFail;
  }

  int enumerate() {
    if (o_.length < 1 || o_.n < 1) throw UsageError("--length and --n must be positive");
    const auto list = admissible_decompositions(o_.length, o_.n, o_.nonsmoothable_only, o_.threads);
    for (const auto& c : list) {
      if (o_.json)
        os_ << json{{"H", c.H.values}, {"deltas", c.delta.deltas}, {"d", c.d}}.dump() << "\n";
      else
        os_ << format_compact(c.H, c.delta) << "\n";
    }
    if (!o_.json) os_ << list.size() << " candidate" << (list.size() == 1 ? "" : "s") << "\n";
    return kOk;
  }

  static json report_json(const DimBoundReport& r) {
    json j{{"n", r.n},           {"l", r.l},
           {"d", r.d},           {"H", r.H.values},
           {"deltas", r.delta.deltas}, {"n_dims", r.n_dims},
           {"d_infty", r.d_infty}, {"d_flag", r.d_flag},
           {"v_theta", r.v_theta}, {"v_theta_lemma", r.v_theta_lemma},
           {"v", r.v},           {"v_components", r.v_components},
           {"v_unsimplified", r.v_unsimplified}};
    j["w"] = r.w ? json(*r.w) : json(nullptr);
    j["margin"] = r.margin ? json(*r.margin) : json(nullptr);
    return j;
  }

  int bounds() {
    SymmetricDecomposition D;
    if (!o_.delta.empty()) {
      D = parse_compact(o_.delta);
    } else if (!o_.f.empty()) {
      const int b = base(false);
      D = symmetric_decomposition(primal(o_.f, nvars_for({o_.f}, b), b));
    } else {
      throw UsageError("bounds needs --delta or --f");
    }
    if (o_.n < 1) throw UsageError("--n is required");
    const DimBoundReport r = v_bound(D, o_.n);
    if (o_.json) {
      os_ << report_json(r).dump() << "\n";
      return r.consistent() ? kOk : kFail;
    }
    os_ << format_compact(r.H, r.delta) << "   n = " << r.n << "\n";
    os_ << "n_i      = " << format_sequence(r.n_dims) << "\n";
    os_ << "d_infty  = " << r.d_infty << "\n";
    os_ << "d_flag   = " << r.d_flag << "\n";
    os_ << "v_theta  = " << r.v_theta << "   (with C(n_{d-3}+3,3): " << r.v_theta_lemma << ", difference "
        << r.v_theta_lemma - r.v_theta << ")\n";
    os_ << "v        = " << r.v << "   (v_theta + d_flag = " << r.v_components << ", unsimplified sum = "
        << r.v_unsimplified << ")\n";
    if (r.w) os_ << "w(3," << r.l << "," << r.n << ") = " << *r.w << "   margin " << *r.margin << "\n";
    if (!r.consistent()) os_ << "FAIL: the closed form and the component sums disagree\n";
    return r.consistent() ? kOk : kFail;
  }

  int verify() {
    if (o_.n < 1) throw UsageError("--n is required");
    const TheoremReport rep = verify_theorem(o_.n, o_.threads, !o_.all_candidates);
    if (o_.json) {
      json rows = json::array();
      for (const auto& row : rep.rows)
        rows.push_back({{"l", row.l},
                        {"r", row.r},
                        {"H", row.candidate.H.values},
                        {"deltas", row.candidate.delta.deltas},
                        {"v", row.v},
                        {"threshold", row.threshold},
                        {"margin", row.margin},
                        {"ok", row.ok}});
      json wt = json::object();
      for (const auto& [l, w] : rep.w_table) wt[std::to_string(l)] = w;
      json maxv = json::object();
      for (const auto& [r, p] : rep.max_v) maxv[std::to_string(r)] = {{"v", p.first}, {"H", p.second.values}};
      os_ << json{{"n", rep.n},
                  {"cactus_rank", rep.cactus_rank},
                  {"pass", rep.pass},
                  {"w_table", wt},
                  {"worst_margin", rep.worst_margin ? json(*rep.worst_margin) : json(nullptr)},
                  {"max_v", maxv},
                  {"notes", rep.notes},
                  {"rows", rows},
                  {"summary", rep.summary()}}
                 .dump()
          << "\n";
      return rep.pass ? kOk : kFail;
    }
    for (const auto& note : rep.notes) os_ << "note: " << note << "\n";
    os_ << "w(3,l," << rep.n << "):";
    for (const auto& [l, w] : rep.w_table) os_ << " l=" << l << ":" << w;
    os_ << "\n";
    os_ << " l   r     v  threshold  margin  candidate\n";
    for (const auto& row : rep.rows) {
      std::ostringstream line;
      line << std::setw(2) << row.l << "  " << std::setw(2) << row.r << "  " << std::setw(4) << row.v << "  "
           << std::setw(9) << row.threshold << "  " << std::setw(6) << row.margin << "  "
           << format_compact(row.candidate.H, row.candidate.delta) << (row.ok ? "" : "   <-- FAIL");
      os_ << line.str() << "\n";
    }
    for (const auto& [r, p] : rep.max_v)
      os_ << "max v at r=" << r << ": " << p.first << " for H=" << format_sequence(p.second.values) << "\n";
    if (rep.worst_margin) os_ << "worst margin: " << *rep.worst_margin << "\n";
    os_ << rep.summary() << "\n";
    return rep.pass ? kOk : kFail;
  }

  int exotic() {
    const int b = base(false);
    std::vector<std::string> texts{o_.f};
    texts.insert(texts.end(), o_.phis.begin(), o_.phis.end());
    const std::size_t k = nvars_for(texts, b);
    const Polynomial f = primal(o_.f, k, b);
    std::vector<Polynomial> phis;
    for (const auto& p : o_.phis) phis.push_back(parse(p, k, Side::dual, ParseOptions{b, 0}));
    const Polynomial ft = exotic_extend(f, phis);
    const HilbertFunction Hf = hilbert_function(f);
    const HilbertFunction Ht = hilbert_function(ft);
    const bool same_h = Hf == Ht;
    if (o_.json) {
      os_ << json{{"f", f.to_string(b)}, {"extended", ft.to_string(b)}, {"hilbert", Hf.values}, {"hilbert_extended", Ht.values},
                  {"hilbert_preserved", same_h}}
                 .dump()
          << "\n";
    } else {
      os_ << "f~ = " << ft.to_string(b) << "\n";
      os_ << "H_f = " << format_sequence(Hf.values) << ", H_f~ = " << format_sequence(Ht.values) << "\n";
    }
    return same_h ? kOk : kFail;
  }

  static json witness_json(const WitnessReport& w) {
    json j{{"F", w.F.to_string(0)},
           {"G", w.G.to_string(0)},
           {"g", w.g.to_string(1)},
           {"lengthG", w.lengthG},
           {"localHilbertG", w.localHilbertG.values},
           {"lengthF", w.lengthF},
           {"hilbertF", w.hilbertF.values},
           {"general", w.general},
           {"apolarOK", w.apolarOK},
           {"ok", w.ok()}};
    if (w.random_form)
      j["random_form"] = {{"l", w.random_form->l.to_string(0)},
                          {"length", w.random_form->length},
                          {"hilbert", w.random_form->hilbert.values},
                          {"general", w.random_form->general}};
    return j;
  }

  void print_witness(const WitnessReport& w) {
    os_ << "F = " << w.F.to_string(0) << "\n";
    os_ << "G = " << w.G.to_string(0) << "\n";
    os_ << "lengthG = " << w.lengthG << "   local Hilbert function " << format_sequence(w.localHilbertG.values)
        << "   (<= 7 verified; = 7 by the case analysis)\n";
    os_ << "lengthF = " << w.lengthF << "   H_F = " << format_sequence(w.hilbertF.values)
        << (w.general ? "" : "   (not general)") << "\n";
    if (w.random_form)
      os_ << "at l = " << w.random_form->l.to_string(0) << ": length " << w.random_form->length << ", H "
          << format_sequence(w.random_form->hilbert.values) << (w.random_form->general ? "" : "   (not general)")
          << "\n";
    os_ << "apolar = " << (w.apolarOK ? "yes" : "NO") << "\n";
  }

  int cusp() {
    int status = kOk;
    if (!o_.f.empty()) {
      const int b = base(true);
      const Polynomial f = primal(o_.f, o_.nvars > 0 ? o_.nvars : 3, b);
      const WitnessReport w = cusp_witness(f, o_.seed);
      if (o_.json)
        os_ << witness_json(w).dump() << "\n";
      else
        print_witness(w);
      if (!w.ok()) status = kFail;
    }
    if (o_.trials > 0) {
      const CuspTrials t = cusp_trials(o_.seed, o_.trials, o_.threads);
      if (o_.json) {
        os_ << json{{"trials", t.trials},         {"general", t.general},
                    {"failures", t.failures},     {"max_lengthG", t.max_lengthG},
                    {"random_general", t.random_general}, {"random_failures", t.random_failures}}
                   .dump()
            << "\n";
      } else {
        os_ << "random cubics: " << t.trials << " trials, " << t.general << " general, " << t.failures
            << " failures, max lengthG " << t.max_lengthG << "\n";
        os_ << "random support forms: " << t.random_general << " general, " << t.random_failures << " failures\n";
      }
      if (t.failures > 0 || t.random_failures > 0) status = kFail;
    }
    if (o_.f.empty() && o_.trials == 0) throw UsageError("cusp-witness needs --f or --trials");
    return status;
  }

  int selftest() {
    const auto cases = run_selftest(o_.threads);
    bool all = true;
    for (const auto& c : cases) {
      all = all && c.pass;
      if (o_.json)
        os_ << json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}.dump() << "\n";
      else
        os_ << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    if (!o_.json) os_ << (all ? "selftest PASS" : "selftest FAIL") << "\n";
    return all ? kOk : kFail;
  }

 private:
  const Options& o_;
  std::ostream& os_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apolarity, Hilbert function decompositions and cactus rank bounds"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--out", o.out, "Write the report to a file");
    sub->add_flag("--zero-based", o.zero_based, "Variables are x0, x1, ...");
    sub->add_flag("--one-based", o.one_based, "Variables are x1, x2, ...");
    sub->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  };
  auto poly = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--f", o.f, "Polynomial, e.g. \"x1^2*x2 + x2^2\"");
    if (required) opt->required();
    sub->add_option("--nvars", o.nvars, "Number of variables (default: inferred)")->check(CLI::PositiveNumber);
  };

  auto* diff = app.add_subcommand("diff", "Space of partials with degree and order");
  poly(diff, true);
  common(diff);
  auto* hilb = app.add_subcommand("hilbert", "Hilbert function and symmetric decomposition");
  poly(hilb, true);
  common(hilb);
  auto* ann = app.add_subcommand("annihilator", "Annihilator up to a degree bound");
  poly(ann, true);
  ann->add_option("--max-degree", o.max_degree, "Degree bound (default deg f + 1)")->check(CLI::NonNegativeNumber);
  common(ann);
  auto* loc = app.add_subcommand("local-length", "Natural apolar scheme of a form at a linear form");
  poly(loc, true);
  loc->add_option("--at", o.at, "Linear form l")->required();
  common(loc);
  auto* en = app.add_subcommand("enumerate", "Admissible (H, Delta) pairs");
  en->add_option("--length", o.length, "Length l")->required();
  en->add_option("--n", o.n, "Number of variables")->required();
  en->add_flag("--nonsmoothable-only", o.nonsmoothable_only, "Keep possibly nonsmoothable H only");
  common(en);
  auto* bd = app.add_subcommand("bounds", "Dimension bounds for one decomposition");
  poly(bd, false);
  bd->add_option("--delta", o.delta, "Decomposition, e.g. \"(1,6,6,1) -> (1,6,6,1)\"");
  bd->add_option("--n", o.n, "Ambient number of variables")->required();
  common(bd);
  auto* vt = app.add_subcommand("verify-theorem", "Check the cactus rank bound for cubics in n+1 variables");
  vt->add_option("--n", o.n, "n")->required();
  vt->add_flag("--all-candidates", o.all_candidates, "Disable the smoothability filter");
  common(vt);
  auto* ex = app.add_subcommand("exotic-extend", "Add exotic summands to f");
  poly(ex, true);
  ex->add_option("--phi", o.phis, "Dual polynomial of order >= 2 (repeatable)");
  common(ex);
  auto* cw = app.add_subcommand("cusp-witness", "Length-7 scheme for a cubic surface in normal form");
  poly(cw, false);
  cw->add_option("--seed", o.seed, "Random seed");
  cw->add_option("--trials", o.trials, "Number of random cubics");
  common(cw);
  auto* st = app.add_subcommand("selftest", "Run the worked examples");
  common(st);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (o.zero_based && o.one_based) {
    std::cerr << "error: --zero-based and --one-based are exclusive\n";
    return kUsage;
  }

  std::ostringstream report;
  Runner run(o, report);
  int status = kOk;
  try {
    if (*diff) status = run.diff();
    else if (*hilb) status = run.hilbert();
    else if (*ann) status = run.annihilator_cmd();
    else if (*loc) status = run.local_length();
    else if (*en) status = run.enumerate();
    else if (*bd) status = run.bounds();
    else if (*vt) status = run.verify();
    else if (*ex) status = run.exotic();
    else if (*cw) status = run.cusp();
    else if (*st) status = run.selftest();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }

  if (o.out.empty()) {
    std::cout << report.str();
  } else {
    std::ofstream file(o.out);
    if (!file) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return kUsage;
    }
    file << report.str();
  }
  return status;
}
