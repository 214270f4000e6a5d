#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "stimint/fock.hpp"

using namespace stimint;

namespace {

QuantumState basis(const RegistryPtr& reg, std::vector<int> occ, int cutoff = 6) {
  QuantumState st(reg, cutoff);
  st.add_term({std::move(occ)}, 1.0);
  return st;
}

QuantumState random_sparse_state(const RegistryPtr& reg, int cutoff, std::mt19937& rng) {
  std::uniform_int_distribution<int> occ_dist(0, cutoff);
  std::uniform_real_distribution<double> amp_dist(-1.0, 1.0);
  QuantumState st(reg, cutoff);
  for (int t = 0; t < 5; ++t) {
    std::vector<int> occ(reg->size());
    int budget = cutoff;
    for (auto& n : occ) {
      n = std::uniform_int_distribution<int>(0, budget)(rng);
      budget -= n;
    }
    st.add_term({occ}, Complex(amp_dist(rng), amp_dist(rng)));
  }
  return st;
}

}  // namespace

TEST_CASE("registry rejects duplicates and unknown labels") {
  CHECK_THROWS_AS(make_registry({"s", "s"}), std::invalid_argument);
  auto reg = make_registry({"s", "i"});
  CHECK(reg->contains("s"));
  CHECK(!reg->contains("x"));
  CHECK_THROWS_AS(reg->index("x"), std::invalid_argument);
}

TEST_CASE("create acts as sqrt(n+1) raising operator") {
  auto reg = make_registry({"s"});
  SUBCASE("vacuum") {
    QuantumState out = create(QuantumState::vacuum(reg, 6), "s");
    CHECK(out.amplitude({{1}}).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(out.terms().size() == 1);
  }
  SUBCASE("two photons gain the sqrt(3) factor") {
    QuantumState out = create(basis(reg, {2}), "s");
    CHECK(out.amplitude({{3}}).real() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  }
  SUBCASE("superposition, term by term") {
    QuantumState st(reg, 6);
    st.add_term({{1}}, 0.6);
    st.add_term({{3}}, 0.8);
    QuantumState out = create(st, "s");
    // oracle: each |n> picks up sqrt(n+1)
    CHECK(out.amplitude({{2}}).real() == doctest::Approx(0.6 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(out.amplitude({{4}}).real() == doctest::Approx(0.8 * 2.0).epsilon(1e-15));
  }
  SUBCASE("unknown mode") {
    CHECK_THROWS_AS(create(QuantumState::vacuum(reg, 6), "nope"), std::invalid_argument);
  }
  SUBCASE("cutoff overflow drops the term and flags truncation") {
    QuantumState out = create(basis(reg, {6}, 6), "s");
    CHECK(out.terms().empty());
    CHECK(out.truncated());
  }
}

TEST_CASE("annihilate acts as sqrt(n) lowering operator") {
  auto reg = make_registry({"s"});
  QuantumState one = annihilate(basis(reg, {1}), "s");
  CHECK(one.amplitude({{0}}).real() == doctest::Approx(1.0).epsilon(1e-15));

  QuantumState vac = annihilate(QuantumState::vacuum(reg, 6), "s");
  CHECK(vac.terms().empty());

  QuantumState three = annihilate(basis(reg, {3}), "s");
  CHECK(three.amplitude({{2}}).real() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("commutator [a, a+] = 1 on every basis state below the cutoff") {
  auto reg = make_registry({"s", "i"});
  for (int n = 0; n < 6; ++n) {
    QuantumState st = basis(reg, {n, 0}, 6);
    QuantumState ac = annihilate(create(st, "s"), "s");
    QuantumState ca = create(annihilate(st, "s"), "s");
    CHECK(ac.amplitude({{n, 0}}).real() == doctest::Approx(n + 1.0).epsilon(1e-12));
    CHECK(ca.amplitude({{n, 0}}).real() == doctest::Approx(double(n)).epsilon(1e-12));
  }
}

TEST_CASE("inner product") {
  auto reg = make_registry({"s", "i"});
  SUBCASE("normalized superposition") {
    QuantumState st(reg, 6);
    st.add_term({{0, 0}}, 1.0 / std::sqrt(2.0));
    st.add_term({{1, 0}}, 1.0 / std::sqrt(2.0));
    CHECK(inner_product(st, st).real() == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("orthogonality") {
    CHECK(std::abs(inner_product(basis(reg, {0, 0}), basis(reg, {1, 0}))) == 0.0);
  }
  SUBCASE("first-order amplifier output norm, g = 0.1") {
    // oracle: <Phi|Phi> = 1 + |g|^2 by direct expansion of |0> + g|1_s 1_i>
    QuantumState st(reg, 6);
    st.add_term({{0, 0}}, 1.0);
    st.add_term({{1, 1}}, 0.1);
    CHECK(inner_product(st, st).real() == doctest::Approx(1.01).epsilon(1e-14));
  }
  SUBCASE("registry mismatch") {
    auto other = make_registry({"a", "b"});
    CHECK_THROWS_AS(inner_product(basis(reg, {0, 0}), basis(other, {0, 0})),
                    std::invalid_argument);
  }
  SUBCASE("conjugate symmetry on random sparse states") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      QuantumState a = random_sparse_state(reg, 6, rng);
      QuantumState b = random_sparse_state(reg, 6, rng);
      Complex ab = inner_product(a, b);
      Complex ba = inner_product(b, a);
      CHECK(std::abs(ab - std::conj(ba)) < 1e-12);
    }
  }
}

TEST_CASE("scale_and_add") {
  auto reg = make_registry({"s", "i"});
  SUBCASE("zero coefficient drops a branch") {
    QuantumState out = scale_and_add({{1.0, basis(reg, {0, 0})}, {0.0, basis(reg, {1, 0})}});
    CHECK(out.terms().size() == 1);
    CHECK(out.amplitude({{0, 0}}).real() == doctest::Approx(1.0));
  }
  SUBCASE("builds the first-order amplifier output") {
    QuantumState out = scale_and_add({{1.0, basis(reg, {0, 0})}, {0.1, basis(reg, {1, 1})}});
    CHECK(out.amplitude({{1, 1}}).real() == doctest::Approx(0.1).epsilon(1e-15));
  }
  SUBCASE("linear in coefficients") {
    std::mt19937 rng(11);
    QuantumState psi = random_sparse_state(reg, 6, rng);
    QuantumState lhs = scale_and_add({{Complex(0.3, 0.1), psi}, {Complex(0.2, -0.4), psi}});
    QuantumState rhs = scale_and_add({{Complex(0.5, -0.3), psi}});
    for (const auto& [b, amp] : rhs.terms()) {
      CHECK(std::abs(lhs.amplitude(b) - amp) < 1e-12);
    }
  }
  SUBCASE("commutative and associative to 1e-12") {
    std::mt19937 rng(13);
    QuantumState a = random_sparse_state(reg, 6, rng);
    QuantumState b = random_sparse_state(reg, 6, rng);
    QuantumState c = random_sparse_state(reg, 6, rng);
    QuantumState abc = scale_and_add({{1.0, a}, {1.0, b}, {1.0, c}});
    QuantumState cba = scale_and_add({{1.0, c}, {1.0, scale_and_add({{1.0, b}, {1.0, a}})}});
    for (const auto& [basis_state, amp] : abc.terms()) {
      CHECK(std::abs(cba.amplitude(basis_state) - amp) < 1e-12);
    }
  }
}

TEST_CASE("truncated coherent state") {
  auto reg = make_registry({"s"});
  SUBCASE("alpha = 0 is vacuum") {
    QuantumState st = coherent_state_truncated(reg, "s", 0.0, 4);
    CHECK(st.terms().size() == 1);
    CHECK(st.amplitude({{0}}).real() == doctest::Approx(1.0));
    CHECK(!st.truncated());
  }
  SUBCASE("alpha = 0.3, cutoff 2 amplitudes") {
    QuantumState st = coherent_state_truncated(reg, "s", 0.3, 2);
    // oracle: exp(-|a|^2/2) a^n / sqrt(n!)
    double pre = std::exp(-0.5 * 0.09);
    CHECK(st.amplitude({{0}}).real() == doctest::Approx(pre).epsilon(1e-12));
    CHECK(st.amplitude({{1}}).real() == doctest::Approx(pre * 0.3).epsilon(1e-12));
    CHECK(st.amplitude({{2}}).real() == doctest::Approx(pre * 0.09 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(st.amplitude({{0}}).real() == doctest::Approx(0.95600).epsilon(1e-5));
    CHECK(st.amplitude({{1}}).real() == doctest::Approx(0.28680).epsilon(1e-4));
    CHECK(st.amplitude({{2}}).real() == doctest::Approx(0.06084).epsilon(1e-3));
    CHECK(st.truncated());
  }
  SUBCASE("one-to-zero photon probability ratio is |alpha|^2") {
    QuantumState st = coherent_state_truncated(reg, "s", Complex(0.2, 0.5), 6);
    double ratio = std::norm(st.amplitude({{1}})) / std::norm(st.amplitude({{0}}));
    CHECK(ratio == doctest::Approx(std::norm(Complex(0.2, 0.5))).epsilon(1e-12));
  }
  SUBCASE("norm within 1e-10 of 1 for generous cutoffs") {
    for (double a : {0.2, 0.5, 1.0}) {
      int cutoff = int(8 * a * a + 10);
      QuantumState st = coherent_state_truncated(reg, "s", a, cutoff);
      CHECK(st.squared_norm() == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
  SUBCASE("invalid cutoff") {
    CHECK_THROWS_AS(coherent_state_truncated(reg, "s", 0.3, -1), std::invalid_argument);
  }
}

TEST_CASE("debug serialization is lexicographic") {
  auto reg = make_registry({"s", "i"});
  QuantumState st(reg, 6);
  st.add_term({{1, 1}}, Complex(0.25, -0.5));
  st.add_term({{0, 0}}, 1.0);
  CHECK(st.debug_text() == "0 0 1 0\n1 1 0.25 -0.5\n");
}
