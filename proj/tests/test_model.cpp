// test_model.cpp - model compilation and spectral-polynomial invariants
#include "dpf/json_io.hpp"
#include "dpf/model.hpp"
#include "dpf/oracle.hpp"
#include "dpf/util.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <random>

using namespace dpf;

TEST_CASE("single qubit compiles to (1/2, 1/2) with one degree of freedom") {
  const auto dpf = compile_model(SingleQubit{});
  REQUIRE(dpf.base.weights().size() == 2);
  CHECK(dpf.base.weights()[0] == 0.5);
  CHECK(dpf.base.weights()[1] == 0.5);
  CHECK(dpf.exponent == 1);
}

TEST_CASE("open Ising chain reduces to N-1 independent bonds") {
  const auto dpf = compile_model(IsingOpenChain{5});
  CHECK(dpf.base.weights() == std::vector<double>{0.5, 0.5});
  CHECK(dpf.exponent == 4);
}

TEST_CASE("degenerate qubit weights follow from the three-state direct sum") {
  // Independent oracle: two states at energy 0 plus one at -J, equally
  // occupied, summed directly.
  const auto dpf = compile_model(DegenerateQubit{2});
  const std::array<double, 3> w{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  const std::array<double, 3> e{0.0, 0.0, -1.0};
  for (double theta : {0.0, 0.3, 1.1, 2.5, 3.14}) {
    const auto direct = oracle::fewlevel_amplitude(w, e, theta);
    const auto compiled = dpf.base(circle_point(theta));
    CHECK(std::abs(direct - compiled) < 1e-14);
  }
  CHECK(dpf.base.weights()[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(dpf.base.weights()[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(dpf.exponent == 1);
}

TEST_CASE("g = 1 degenerate qubit is the single qubit") {
  const auto a = compile_model(DegenerateQubit{1});
  const auto b = compile_model(SingleQubit{});
  CHECK(a.base.weights() == b.base.weights());
  CHECK(a.exponent == b.exponent);
}

TEST_CASE("compile_model rejects out-of-range specs") {
  CHECK_THROWS_AS(compile_model(DegenerateQubit{0}), std::invalid_argument);
  CHECK_THROWS_AS(compile_model(ProductChain{21}), CapExceededError);
  CHECK_THROWS_AS(compile_model(IsingOpenChain{25}), CapExceededError);
  CHECK_THROWS_AS(compile_model(IsingOpenChain{1}), std::invalid_argument);
  CHECK_NOTHROW(compile_model(ProductChain{64}, 64));
}

TEST_CASE("validate_weights accepts and rejects per contract") {
  CHECK_NOTHROW(validate_weights({0.5, 0.5}));
  CHECK_NOTHROW(validate_weights({1.0}));  // constant L = 1 is a valid trivial model
  CHECK_THROWS_AS(validate_weights({0.5, 0.6}), NormalizationError);
  CHECK_THROWS_AS(validate_weights({1.5, -0.5}), NegativeWeightError);
  CHECK_THROWS_AS(validate_weights({}), std::invalid_argument);
  CHECK_THROWS_AS(validate_weights({1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("from_weights trims trailing zeros") {
  const auto p = SpectralPolynomial::from_weights({0.5, 0.5, 0.0, 0.0});
  CHECK(p.degree() == 1);
  CHECK(p.weights().back() > 0.0);
}

TEST_CASE("Ising chain and product chain share base and exponent structure") {
  for (int n = 2; n <= 20; ++n) {
    const auto ising = compile_model(IsingOpenChain{n});
    const auto product = compile_model(ProductChain{n - 1});
    CHECK(ising.exponent == product.exponent);
    CHECK(ising.base.weights() == product.base.weights());
  }
}

TEST_CASE("every compiled model is normalized: L(1) = 1 within 1e-12") {
  const std::vector<ModelSpec> specs{SingleQubit{}, DegenerateQubit{2}, DegenerateQubit{7},
                                     ProductChain{8}, IsingOpenChain{12}};
  for (const auto& spec : specs) {
    const auto dpf = compile_model(spec);
    const double base_at_one = dpf.base(1.0);
    CHECK(std::abs(base_at_one - 1.0) <= 1e-12);
    CHECK(std::abs(std::pow(base_at_one, dpf.exponent) - 1.0) <= 1e-12);
  }
}

TEST_CASE("compile then validate never errors for in-range specs") {
  for (int g = 1; g <= 12; ++g) CHECK_NOTHROW(validate(compile_model(DegenerateQubit{g}).base));
  for (int n = 1; n <= 20; ++n) CHECK_NOTHROW(validate(compile_model(ProductChain{n}).base));
  for (int n = 2; n <= 20; ++n) CHECK_NOTHROW(validate(compile_model(IsingOpenChain{n}).base));
}

TEST_CASE("expanded_power matches repeated evaluation") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> unif(0.05, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> w(1 + static_cast<std::size_t>(rng() % 4), 0.0);
    double sum = 0.0;
    for (double& x : w) sum += (x = unif(rng));
    for (double& x : w) x /= sum;
    const auto base = SpectralPolynomial::from_weights(w);
    const int m = 1 + static_cast<int>(rng() % 6);
    const auto full = expanded_power(base, m);
    const std::complex<double> y{unif(rng), unif(rng)};
    std::complex<double> direct{1.0, 0.0};
    for (int i = 0; i < m; ++i) direct *= base(y);
    CHECK(std::abs(full(y) - direct) < 1e-12 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("model spec JSON round-trip uses the fixed field names") {
  const ModelSpec specs[] = {SingleQubit{}, DegenerateQubit{3}, ProductChain{6}, IsingOpenChain{9}};
  for (const auto& spec : specs) {
    const ordered_json j = model_to_json(spec, UnitConvention(2.0, 1.0));
    CHECK(j.contains("model"));
    CHECK(j.contains("j"));
    const auto [back, units] = model_from_json(j);
    CHECK(model_name(back) == model_name(spec));
    CHECK(units.j == 2.0);
    const auto a = compile_model(spec);
    const auto b = compile_model(back);
    CHECK(a.base.weights() == b.base.weights());
    CHECK(a.exponent == b.exponent);
  }
  CHECK(model_to_json(DegenerateQubit{3})["g"] == 3);
  CHECK(model_to_json(ProductChain{6})["n"] == 6);
  CHECK_THROWS_AS(model_from_json(ordered_json{{"model", "bogus"}}), std::invalid_argument);
}

TEST_CASE("unit conversions live at the boundary only") {
  const UnitConvention u(2.0, 0.5);
  CHECK(u.theta_from_beta(3.0) == 6.0);
  CHECK(u.beta_from_theta(6.0) == 3.0);
  CHECK(u.theta_from_time(1.0) == 4.0);
  CHECK(u.time_from_theta(4.0) == 1.0);
  CHECK_THROWS_AS(UnitConvention(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(UnitConvention(1.0, -1.0), std::invalid_argument);
}
