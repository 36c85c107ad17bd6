// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Expected vectors come from fixtures.hpp (frozen oracle output).

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "heisenhom/algebra.hpp"
#include "heisenhom/heisenberg.hpp"
#include "heisenhom/linalg.hpp"
#include "heisenhom/morse.hpp"
#include "heisenhom/polynomial.hpp"

using namespace heisenhom;
namespace hb = heisenhom::heisenberg;

namespace {

using Clock = std::chrono::steady_clock;

// Pinned time budgets in seconds.
constexpr double kThreeWayBudget = 60.0;
constexpr double kDSquaredBudget = 10.0;

struct Verdict {
  bool ok;
  std::string detail;
};

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

bool euler_zero(const std::vector<std::uint64_t>& b) {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(b[i]);
  }
  return chi == 0;
}

std::vector<std::uint64_t> counts(const std::vector<std::vector<VertexId>>& levels) {
  std::vector<std::uint64_t> out;
  for (const auto& l : levels) out.push_back(l.size());
  return out;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Verdict three_way() {
  const auto start = Clock::now();
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto alg = heisenberg_algebra(n);
    const auto by_rank = betti_numbers(alg, FieldChar(2));
    const auto by_cells =
        counts(critical_cells(build_digraph(alg, FieldChar(2)), hb::heisenberg_matching(n)));
    const auto poly = hb::betti_generating_function(n);
    std::vector<std::uint64_t> by_formula;
    for (std::size_t i = 0; i <= 2 * n + 1; ++i) {
      by_formula.push_back(poly.coefficient(i).convert_to<std::uint64_t>());
    }
    if (by_rank != fixtures::kBettiChar2[n] || by_cells != by_rank || by_formula != by_rank) {
      return {false, "n=" + std::to_string(n) + " rank [" + join(by_rank) + "] cells [" +
                         join(by_cells) + "] formula [" + join(by_formula) + "]"};
    }
  }
  const double t = seconds_since(start);
  return {t < kThreeWayBudget, "n=0..6 identical; n=3 [" + join(fixtures::kBettiChar2[3]) +
                                   "]; " + std::to_string(t) + " s"};
}

Verdict d_squared() {
  const auto start = Clock::now();
  for (std::size_t n = 0; n <= 5; ++n) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      const auto report = verify_d_squared(heisenberg_algebra(n), FieldChar(p));
      if (!report.ok()) {
        return {false, "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " +
                           std::to_string(report.witnesses.size()) + " witnesses"};
      }
    }
  }
  const double t = seconds_since(start);
  return {t < kDSquaredBudget, "n<=5, p in {2,3,5,7}; " + std::to_string(t) + " s"};
}

Verdict matching_valid() {
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto g = build_digraph(heisenberg_algebra(n), FieldChar(2));
    const auto report = validate_matching(g, hb::heisenberg_matching(n));
    if (!report.ok()) return {false, "n=" + std::to_string(n) + ": " + to_string(report.status)};
  }
  return {true, "n<=6"};
}

Verdict morse_zero() {
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto g = build_digraph(heisenberg_algebra(n), FieldChar(2));
    const auto m = hb::heisenberg_matching(n);
    const MorseDifferential dm(g, m);
    for (const auto& level : critical_cells(g, m)) {
      for (VertexId c : level) {
        ++checked;
        if (!dm(c).empty()) {
          return {false, "n=" + std::to_string(n) + " cell " + hb::format_cell(n, Cell(c))};
        }
      }
    }
  }
  return {true, std::to_string(checked) + " critical cells, n<=4"};
}

Verdict pi_closed() {
  std::size_t plain = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto report = hb::verify_pi_closed(n);
    plain += report.plain_checked;
    if (!report.ok()) {
      return {false, "n=" + std::to_string(n) + ": " + std::to_string(report.witnesses.size()) +
                         " witnesses"};
    }
  }
  return {true, std::to_string(plain) + " critical plain cells, n<=6"};
}

Verdict exact_division() {
  for (std::size_t n = 0; n <= 64; ++n) {
    IntPolynomial q;
    try {
      q = poly_exact_div(hb::generating_function_numerator(n), IntPolynomial{1, 0, 1});
    } catch (const ExactDivisionFailed& e) {
      return {false, "n=" + std::to_string(n) + ": " + e.what()};
    }
    const auto& c = q.coefficients();
    const bool shape = q.degree() == static_cast<long>(2 * n + 1) && c.front() == 1 &&
                       c.back() == 1 && std::equal(c.begin(), c.end(), c.rbegin());
    if (!shape) return {false, "n=" + std::to_string(n) + ": " + q.to_string()};
  }
  return {true, "n<=64, zero remainder, palindromic, b_0 = b_top = 1"};
}

Verdict stratified() {
  for (std::size_t n = 0; n <= 8; ++n) {
    IntPolynomial total;
    for (hb::IndexSet L = 0; L < (hb::IndexSet{1} << n); ++L) {
      total += hb::critical_count_stratified(n, L);
    }
    if (total != hb::betti_generating_function(n)) {
      return {false, "sum mismatch at n=" + std::to_string(n)};
    }
  }
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto g = build_digraph(heisenberg_algebra(n), FieldChar(2));
    const auto census = hb::critical_census_by_stratum(n, critical_cells(g, hb::heisenberg_matching(n)));
    for (hb::IndexSet L = 0; L < (hb::IndexSet{1} << n); ++L) {
      const auto it = census.find(L);
      const IntPolynomial actual = it == census.end() ? IntPolynomial{} : it->second;
      if (actual != hb::critical_count_stratified(n, L)) {
        return {false, "census mismatch at n=" + std::to_string(n) + " L=" + std::to_string(L)};
      }
    }
  }
  return {true, "sum n<=8, census n<=5"};
}

Verdict characteristic_contrast() {
  const auto b2 = betti_numbers(heisenberg_algebra(3), FieldChar(2));
  const auto b0 = betti_numbers(heisenberg_algebra(3), FieldChar(1009));
  const bool contrast = b0[3] == 14 && hb::betti_char0(3, 3) == 14 && b2[3] == 15 &&
                        b0 == fixtures::kBettiChar1009[3] && b2 == fixtures::kBettiChar2[3];
  bool small_equal = true;
  for (std::size_t n = 0; n <= 2; ++n) {
    small_equal = small_equal && betti_numbers(heisenberg_algebra(n), FieldChar(2)) ==
                                     betti_numbers(heisenberg_algebra(n), FieldChar(1009));
  }
  return {contrast && small_equal,
          "n=3: GF(1009) b_3=" + std::to_string(b0[3]) + ", GF(2) b_3=" + std::to_string(b2[3]) +
              "; n<=2 " + (small_equal ? "coincide" : "differ")};
}

Verdict euler() {
  std::size_t configs = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto alg = heisenberg_algebra(n);
    for (std::uint32_t p : {2u, 3u, 7u, 1009u}) {
      ++configs;
      if (!euler_zero(betti_numbers(alg, FieldChar(p)))) {
        return {false, "rank route n=" + std::to_string(n) + " p=" + std::to_string(p)};
      }
    }
    if (n <= 4) {
      for (std::uint32_t p : {3u, 1009u}) {
        ++configs;
        const auto g = build_digraph(alg, FieldChar(p));
        if (!euler_zero(morse_betti_numbers(g, hb::heisenberg_matching(n)))) {
          return {false, "Morse route n=" + std::to_string(n) + " p=" + std::to_string(p)};
        }
      }
    }
  }
  for (std::size_t n = 0; n <= 64; ++n) {
    ++configs;
    const auto poly = hb::betti_generating_function(n);
    BigInt chi = 0;
    for (std::size_t i = 0; i < poly.coefficients().size(); ++i) {
      chi += (i % 2 == 0 ? 1 : -1) * poly.coefficients()[i];
    }
    if (chi != 0) return {false, "formula n=" + std::to_string(n)};
  }
  return {true, std::to_string(configs) + " configurations"};
}

Verdict unique_successor() {
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto g = build_digraph(heisenberg_algebra(n), FieldChar(2));
    const auto v = unique_successor_violations(g, hb::heisenberg_matching(n));
    if (!v.empty()) {
      return {false, "n=" + std::to_string(n) + ": " + std::to_string(v.size()) + " violations"};
    }
  }
  return {true, "n<=5"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"three-way Betti agreement, char 2, n<=6", three_way},
      {"d^2 = 0, n<=5, p in {2,3,5,7}", d_squared},
      {"matching valid and acyclic, n<=6", matching_valid},
      {"Morse differential zero, n<=4, p=2", morse_zero},
      {"d(pi) = 0 on critical plain cells, n<=6", pi_closed},
      {"exact division by 1+t^2, n<=64", exact_division},
      {"stratified identity and census", stratified},
      {"characteristic contrast GF(2) vs GF(1009)", characteristic_contrast},
      {"Euler characteristic zero", euler},
      {"unique non-critical successor, n<=5", unique_successor},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v{false, ""};
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += v.ok ? 0 : 1;
    std::printf("[%s] %2zu %s -- %s\n", v.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str());
  }
  std::printf("%s: %d of %zu criteria failed\n", failures ? "FAILED" : "OK", failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
