#include "cactus/selftest.hpp"

#include <exception>
#include <functional>

#include "cactus/apolar.hpp"
#include "cactus/bounds.hpp"
#include "cactus/enumerate.hpp"
#include "cactus/hilbert.hpp"
#include "cactus/macaulay.hpp"
#include "cactus/ring.hpp"
#include "cactus/witness.hpp"

namespace cactus {

namespace {

Polynomial X(const char* text, std::size_t n) { return parse(text, n, Side::primal); }
Polynomial Y(const char* text, std::size_t n) { return parse(text, n, Side::dual); }

const char* kExto = "x1^6 + x1^3*x2";
const char* kSecond = "x1^7 + x2^6 + x1^2*x2^2";

// Each check returns the observed value as text and whether it matched.
using Check = std::function<std::pair<bool, std::string>()>;

std::pair<bool, std::string> same(const std::string& got, const std::string& want) { return {got == want, got}; }

std::string seq(const std::vector<int>& v) { return format_sequence(v); }

std::string decomposition_text(const char* f) {
  const Polynomial p = X(f, 2);
  return format_compact(hilbert_function(p), symmetric_decomposition(p));
}

}  // namespace

std::vector<SelfTestCase> run_selftest(int threads) {
  std::vector<std::pair<std::string, Check>> checks = {
      {"parse x1^6 + x1^3*x2", [] { return same(X(kExto, 2).to_string(), "x1^6 + x1^3*x2"); }},
      {"y2 contracts x1^2*x2 + x2^2 to x1^2 + x2",
       [] { return same(contract(Y("y2", 2), X("x1^2*x2 + x2^2", 2)).to_string(), "x1^2 + x2"); }},
      {"(-y2 + y1^3) contracts x1^6 + x1^3*x2 to x2",
       [] { return same(contract(Y("-y2 + y1^3", 2), X(kExto, 2)).to_string(), "x2"); }},
      {"basis of Diff(x1^2*x2 + x2^2)",
       [] {
         const FilteredSpace s(X("x1^2*x2 + x2^2", 2));
         EchelonBasis listed;
         for (const char* p : {"x1^2*x2 + x2^2", "x1^2 + x2", "x1*x2", "x1", "x2", "1"}) listed.insert(X(p, 2));
         bool ok = listed.rank() == 6 && s.dimension() == 6;
         for (const auto& r : s.rows()) ok = ok && listed.contains(r);
         return std::make_pair(ok, "dim " + std::to_string(s.dimension()));
       }},
      {"dim Diff(x1^4 + x1^2*x2 + x2^2) = 5",
       [] { return same(std::to_string(apolar_length(X("x1^4 + x1^2*x2 + x2^2", 2))), "5"); }},
      {"length of x1^6 + x1^3*x2 is 8", [] { return same(std::to_string(apolar_length(X(kExto, 2))), "8"); }},
      {"Hilbert function of x1^6 + x1^3*x2",
       [] { return same(seq(hilbert_function(X(kExto, 2)).values), "(1,2,1,1,1,1,1)"); }},
      {"Hilbert function of x1^7 + x2^6 + x1^2*x2^2",
       [] { return same(seq(hilbert_function(X(kSecond, 2)).values), "(1,2,3,2,2,2,1,1)"); }},
      {"decomposition of x1^6 + x1^3*x2",
       [] { return same(decomposition_text(kExto), "(1,2,1,1,1,1,1) -> (1,1,1,1,1,1,1),(0,1,0)"); }},
      {"decomposition of x1^7 + x2^6 + x1^2*x2^2",
       [] {
         return same(decomposition_text(kSecond),
                     "(1,2,3,2,2,2,1,1) -> (1,1,1,1,1,1,1,1),(0,1,1,1,1,1,0),(0,0,1,0,0)");
       }},
      {"embedding dimensions of (1,4,5,4,1,1,1)",
       [] {
         return same(seq(embedding_dims(parse_compact("(1,4,5,4,1,1,1) -> (1,1,1,1,1,1,1),(0,3,4,3,0)"))),
                     "(1,1,4,4,4)");
       }},
      {"embedding dimensions of x1^6 + x1^3*x2",
       [] { return same(seq(embedding_dims(symmetric_decomposition(X(kExto, 2)))), "(1,1,1,1,2)"); }},
      {"x1^6 + x1^3*x2 is already adapted",
       [] {
         const auto a = adapt_coordinates(X(kExto, 2));
         return std::make_pair(a.change.is_identity() && a.f == X(kExto, 2), a.f.to_string());
       }},
      {"(1,8,7,1) satisfies Macaulay growth",
       [] { return std::make_pair(is_o_sequence({1, 8, 7, 1}), std::string("(1,8,7,1)")); }},
      {"length 17, n = 8, H(1) = 8, H(2) >= 5",
       [threads] {
         std::string got;
         for (const auto& c : admissible_decompositions(17, 8, false, threads))
           if (c.H(1) == 8 && c.H(2) >= 5) got += format_compact(c.H, c.delta) + "; ";
         return same(got,
                     "(1,8,7,1) -> (1,7,7,1),(0,1,0); "
                     "(1,8,5,2,1) -> (1,2,2,2,1),(0,3,3,0),(0,3,0); "
                     "(1,8,5,2,1) -> (1,2,3,2,1),(0,2,2,0),(0,4,0); "
                     "(1,8,6,1,1) -> (1,1,1,1,1),(0,5,5,0),(0,2,0); "
                     "(1,8,5,1,1,1) -> (1,1,1,1,1,1),(0,4,4,0),(0,3,0); ");
       }},
      {"nonsmoothable candidates of length 14 in 7 variables",
       [threads] {
         std::string got;
         for (const auto& c : admissible_decompositions(14, 7, true, threads)) got += format_compact(c.H, c.delta) + "; ";
         return same(got, "(1,6,6,1) -> (1,6,6,1); ");
       }},
      {"filter keeps (1,6,6,1)", [] { return std::make_pair(nonsmoothable_filter({{1, 6, 6, 1}}), std::string()); }},
      {"filter drops (1,8,5,2,1)",
       [] { return std::make_pair(!nonsmoothable_filter({{1, 8, 5, 2, 1}}), std::string()); }},
      {"filter drops every length-13 H",
       [] {
         bool ok = true;
         for (int d = 1; d <= 12; ++d)
           for (const auto& H : admissible_hilbert_functions(13, 12, d)) ok = ok && !nonsmoothable_filter(H);
         return std::make_pair(ok, std::string());
       }},
      {"c(7) = 15, c(8) = 18",
       [] { return same(std::to_string(c_bound(7)) + "," + std::to_string(c_bound(8)), "15,18"); }},
      {"w-table for n = 8",
       [] {
         std::string got;
         for (int l = 14; l <= 17; ++l) got += std::to_string(w_bound(l, 8)) + " ";
         return same(got, "130 139 148 157 ");
       }},
      {"w(3,14,7) = 113", [] { return same(std::to_string(w_bound(14, 7)), "113"); }},
      {"bounds for (1,4,5,4,1,1,1), n = 8",
       [] {
         const auto r = v_bound(parse_compact("(1,4,5,4,1,1,1) -> (1,1,1,1,1,1,1),(0,3,4,3,0)"), 8);
         return same("v_theta=" + std::to_string(r.v_theta) + " d_flag=" + std::to_string(r.d_flag) +
                         " v=" + std::to_string(r.v),
                     "v_theta=86 d_flag=19 v=105");
       }},
      {"v for (1,6,6,1), n = 7",
       [] { return same(std::to_string(v_bound(SymmetricDecomposition::trivial({{1, 6, 6, 1}}), 7).v), "97"); }},
      {"theorem for n = 7",
       [threads] {
         const auto rep = verify_theorem(7, threads);
         const bool single = rep.rows.size() == 1 && rep.rows[0].v == 97 && rep.rows[0].threshold == 113;
         return std::make_pair(rep.pass && single && rep.cactus_rank == 15, rep.summary());
       }},
      {"theorem for n = 8",
       [threads] {
         const auto rep = verify_theorem(8, threads);
         return same(rep.summary(), "PASS n=8 cactus_rank=18");
       }},
      {"exotic extension of x1^6 + x1^3*x2 by y1^2",
       [] {
         return same(exotic_extend(X(kExto, 2), {Y("y1^2", 2)}).to_string(),
                     "x1^6 + x1^4*x3 + x1^3*x2 + x1^2*x3^2 + x1*x2*x3 + x3^3");
       }},
      {"cusp witness on x0^3 + x1^3 + x2^3",
       [] {
         const auto w = cusp_witness(parse("x0^3 + x1^3 + x2^3", 3, Side::primal, {0}), 1);
         const bool shape = w.localHilbertG.values.size() == 5 && w.localHilbertG(3) == 1 && w.localHilbertG(4) == 1;
         return std::make_pair(w.ok() && shape && w.lengthF == 8,
                               "lengthG=" + std::to_string(w.lengthG) + " H=" + seq(w.localHilbertG.values));
       }},
      {"general cubic surface has a length-8 natural scheme",
       [] {
         const auto trials = cusp_trials(2024, 5);
         return std::make_pair(trials.failures == 0 && trials.random_failures == 0 && trials.random_general > 0,
                               std::to_string(trials.random_general) + " general draws");
       }},
      {"homogenized annihilator is apolar",
       [] {
         const Polynomial F = parse("x0^3 + x0*x1*x2 + x1^2*x3 + x0*x3^2 + x2^3", 4, Side::primal, {0});
         const Polynomial l = parse("x0 + 2*x1 - x3", 4, Side::primal, {0});
         return std::make_pair(local_scheme(F, l).apolarity_checked, std::string());
       }},
  };

  std::vector<SelfTestCase> out;
  for (auto& [name, check] : checks) {
    SelfTestCase c{name, false, {}};
    try {
      auto [ok, detail] = check();
      c.pass = ok;
      c.detail = std::move(detail);
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace cactus
