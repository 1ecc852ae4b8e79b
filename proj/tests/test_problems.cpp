#include "fnls/problems.hpp"
#include "fnls/scheme.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

using namespace fnls;

namespace {
constexpr double pi = std::numbers::pi;

std::filesystem::path write_temp(const std::string &name, const std::string &text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}
} // namespace

TEST_CASE("plane wave frequency") {
  CHECK(plane_wave_frequency(1.0, 4, 2.0, -2.0) == doctest::Approx(18.0).epsilon(1e-15));
  CHECK(plane_wave_frequency(1.0, 4, 1.4, -2.0) == doctest::Approx(8.9644045063689922556).epsilon(1e-15));
  CHECK(plane_wave_frequency(1.0, -4, 1.4, -2.0) == plane_wave_frequency(1.0, 4, 1.4, -2.0));
}

TEST_CASE("plane wave samples") {
  const GridSpec spec(-pi, pi, 32);
  const auto u0 = plane_wave_exact(spec, 0.0, 1.0, 4, 1.7, -2.0);
  for (std::size_t j = 0; j < 32; ++j) {
    CHECK(std::abs(u0[j] - std::polar(1.0, 4.0 * spec.node(j))) < 1e-15);
  }
  // Temporal period 2 pi / omega.
  const double omega = plane_wave_frequency(1.0, 4, 1.7, -2.0);
  const auto a = plane_wave_exact(spec, 0.37, 1.0, 4, 1.7, -2.0);
  const auto b = plane_wave_exact(spec, 0.37 + 2.0 * pi / omega, 1.0, 4, 1.7, -2.0);
  CHECK(norm_linf(a - b) <= 1e-12);
  // Amplitude scales the nonlinear frequency shift.
  CHECK(norm_linf(plane_wave_exact(spec, 0.0, 0.5, 4, 1.7, -2.0)) == doctest::Approx(0.5));
}

TEST_CASE("plane wave rejects unresolved or non-harmonic modes") {
  CHECK_THROWS_AS(plane_wave_exact(GridSpec(-pi, pi, 8), 0.0, 1.0, 4, 2.0, -2.0), std::invalid_argument);
  CHECK_NOTHROW(plane_wave_exact(GridSpec(-pi, pi, 10), 0.0, 1.0, 4, 2.0, -2.0));
  CHECK_THROWS_AS(plane_wave_exact(GridSpec(0.0, 1.0, 32), 0.0, 1.0, 4, 2.0, -2.0), std::invalid_argument);
}

TEST_CASE("soliton profile") {
  const GridSpec spec(-20.0, 20.0, 320);
  const auto u = soliton_initial(spec);
  CHECK(spec.node(160) == 0.0);
  CHECK(std::abs(u[160] - 1.0) < 1e-15);
  CHECK(std::abs(u[0]) == doctest::Approx(1.0 / std::cosh(10.0 * std::sqrt(2.0))).epsilon(1e-12));
  CHECK(std::abs(u[0]) == doctest::Approx(1.442708305e-6).epsilon(1e-8));
  // frozen from a 30-digit direct summation of (1/N) sum sech^2
  CHECK(mass(u) == doctest::Approx(0.070710678118580972).epsilon(1e-14));
}

TEST_CASE("error norms") {
  std::mt19937_64 rng(61);
  const GridSpec unit(0.0, 1.0, 16);
  const auto u = test::random_function(unit, rng);
  const auto same = error_norms(u, u);
  CHECK(same.linf == 0.0);
  CHECK(same.l2 == 0.0);
  const auto ones = error_norms(u + GridFunction::constant(unit, 1.0), u);
  CHECK(ones.linf == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ones.l2 == doctest::Approx(1.0).epsilon(1e-14));

  // On [-pi, pi] the quadrature L2 norm of a unit-modulus error is sqrt(2 pi).
  const GridSpec wide(-pi, pi, 16);
  const auto w = test::random_function(wide, rng);
  const auto shifted = error_norms(w + GridFunction::constant(wide, 1.0), w);
  CHECK(shifted.l2 == doctest::Approx(std::sqrt(2.0 * pi)).epsilon(1e-14));
  CHECK_THROWS_AS(error_norms(u, w), std::invalid_argument);
}

TEST_CASE("plane wave error ratio matches the published rows") {
  const GridSpec spec(-pi, pi, 64);
  const FractionalSymbol sym(spec, 1.4);
  SchemeParams p;
  p.alpha = 1.4;
  p.beta = -2.0;
  p.tau = 0.05;
  p.n_steps = 20;
  const auto result = run(plane_wave_exact(spec, 0.0, 1.0, 4, 1.4, -2.0), sym, p);
  const auto err =
      error_norms(result.final_state.u, plane_wave_exact(spec, result.final_state.time, 1.0, 4, 1.4, -2.0));
  CHECK(err.l2 / err.linf == doctest::Approx(0.3831 / 0.1529).epsilon(0.05));
}

TEST_CASE("custom initial data files") {
  const GridSpec spec(0.0, 1.0, 4);
  SUBCASE("with header") {
    const auto path = write_temp("fnls_init_header.csv", "re,im\n1,0\n0,1\n-1,0\n0.5,-0.25\n");
    const auto u = read_initial_data(spec, path);
    CHECK(u[1] == cplx{0.0, 1.0});
    CHECK(u[3] == cplx{0.5, -0.25});
  }
  SUBCASE("without header") {
    const auto path = write_temp("fnls_init_plain.csv", "1, 2\n3 ,4\n5,6\n7,8\n\n");
    CHECK(read_initial_data(spec, path)[2] == cplx{5.0, 6.0});
  }
  SUBCASE("row count must match") {
    const auto path = write_temp("fnls_init_short.csv", "1,0\n0,1\n");
    CHECK_THROWS_AS(read_initial_data(spec, path), std::invalid_argument);
  }
  SUBCASE("malformed rows") {
    const auto path = write_temp("fnls_init_bad.csv", "1,0\n0,x\n1,1\n1,1\n");
    CHECK_THROWS_AS(read_initial_data(spec, path), std::invalid_argument);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(read_initial_data(spec, "/nonexistent/fnls.csv"), std::invalid_argument);
  }
  SUBCASE("through a problem spec") {
    ProblemSpec problem;
    problem.kind = ProblemKind::custom;
    problem.initial_data = write_temp("fnls_init_problem.csv", "1,0\n1,0\n1,0\n1,0\n");
    CHECK(mass(initial_condition(problem, spec)) == doctest::Approx(1.0));
  }
}

TEST_CASE("problem kind names") {
  for (auto kind : {ProblemKind::plane_wave, ProblemKind::soliton, ProblemKind::custom}) {
    CHECK(parse_problem_kind(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_problem_kind("gaussian"), std::invalid_argument);
}
