#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "reduktor/core.hpp"
#include "reduktor/parse.hpp"

using namespace reduktor;
using Fp = PrimeField;

namespace {

Ring<Fp> uvw_ring(std::uint64_t p = 32003) {
  return make_ring(Fp(p), {"U", "V", "W"});
}

std::vector<Polynomial<Fp>> parse_all(const Ring<Fp>& r,
                                      const std::vector<std::string>& texts) {
  std::vector<Polynomial<Fp>> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(r, t));
  return out;
}

// quadric pinch point: L = k[U,V,W]/(U^2+V^2, V*W), a = (U, V)
QuotientIdeal<Fp> pinch_ideal(std::uint64_t p = 32003) {
  auto R = uvw_ring(p);
  Presentation<Fp> L(R, parse_all(R, {"U^2+V^2", "V*W"}));
  return make_quotient_ideal(L, parse_all(R, {"U", "V"}));
}

// smallest n with a^(n+1) + I = q*a^n + I, computed by raw power equality
int power_equality_r(const QuotientIdeal<Fp>& q,
                     const ReductionParams<Fp>& alpha, int max_degree = 12) {
  const auto& ring = q.ambient.ring();
  const auto order = MonomialOrder::grevlex();
  const std::size_t s = q.gens.size();
  std::vector<Polynomial<Fp>> forms;
  for (std::size_t i = 0; i < alpha.rows; ++i) {
    auto c = poly_zero(ring, order);
    for (std::size_t j = 0; j < s; ++j) {
      if (alpha.at(i, j) == ring.field.zero()) continue;
      c = poly_add(ring, c,
                   poly_mul(ring, q.gens[j],
                            poly_const(ring, alpha.at(i, j), order)));
    }
    forms.push_back(std::move(c));
  }
  auto words = [&](int n) {
    std::vector<Polynomial<Fp>> prods;
    for (const auto& w : monomials_of_degree(s, n, MonomialOrder::lex()))
      prods.push_back(detail::word_image(ring, q.gens, w));
    return prods;
  };
  for (int n = 0; n <= max_degree; ++n) {
    std::vector<Polynomial<Fp>> hi = words(n + 1);
    std::vector<Polynomial<Fp>> lo;
    for (const auto& f : forms)
      for (const auto& w : words(n)) lo.push_back(poly_mul(ring, f, w));
    for (const auto& g : q.ambient.ideal().generators()) {
      hi.push_back(g);
      lo.push_back(g);
    }
    if (equal_ideals(make_ideal(ring, hi), make_ideal(ring, lo))) return n;
  }
  return -1;
}

}  // namespace

TEST_CASE("fiber rings of graded ideals") {
  auto R = make_ring(Fp(32003), {"x", "y"});

  SUBCASE("principal nilpotent generator") {
    Presentation<Fp> L(R, parse_all(R, {"x^2"}));
    auto q = make_quotient_ideal(L, parse_all(R, {"x"}));
    auto fiber = fiber_ring(q);
    REQUIRE(fiber.ring().nvars() == 1);
    REQUIRE(fiber.ideal().generators().size() == 1);
    CHECK(poly_to_string(fiber.ring(), fiber.ideal().generators()[0]) ==
          "y1^2");
    CHECK(fiber.dim() == 0);
  }

  SUBCASE("irrelevant ideal of the polynomial ring is free") {
    Presentation<Fp> L(R, {});
    auto q = make_quotient_ideal(L, parse_all(R, {"x", "y"}));
    auto fiber = fiber_ring(q);
    CHECK(fiber.ideal().generators().empty());
    CHECK(fiber.dim() == 2);
    CHECK(analytic_spread(q) == 2);
  }

  SUBCASE("rejects mixed degrees and collapsed generators") {
    Presentation<Fp> L(R, parse_all(R, {"x^2"}));
    CHECK_THROWS_AS(make_quotient_ideal(L, parse_all(R, {"x", "y^2"})),
                    unsupported_error&);
    CHECK_THROWS_AS(make_quotient_ideal(L, parse_all(R, {"x^2"})), error&);
    CHECK_THROWS_AS(make_quotient_ideal(L, parse_all(R, {"x+y^2"})), error&);
  }

  SUBCASE("generators are stored as normal forms") {
    Presentation<Fp> L(R, parse_all(R, {"x^2"}));
    auto q = make_quotient_ideal(L, parse_all(R, {"x^2+y^2", "x*y"}));
    CHECK(poly_to_string(R, q.gens[0]) == "y^2");
    CHECK(q.degree == 2);
  }
}

TEST_CASE("local reduction numbers through the fiber") {
  SUBCASE("polynomial ring, irrelevant ideal") {
    auto R = make_ring(Fp(32003), {"x"});
    Presentation<Fp> L(R, {});
    auto q = make_quotient_ideal(L, parse_all(R, {"x"}));
    auto rep = generic_local_reduction_number(q, 2, 11);
    CHECK(rep.is_reduction);
    CHECK(rep.r_value == 0);
  }

  SUBCASE("principal ideal with a cube relation") {
    auto R = make_ring(Fp(32003), {"x", "y"});
    Presentation<Fp> L(R, parse_all(R, {"x^3"}));
    auto q = make_quotient_ideal(L, parse_all(R, {"x"}));
    auto fiber = fiber_ring(q);
    CHECK(fiber.dim() == 0);
    auto rep = local_reduction_number(
        q, ReductionParams<Fp>{0, fiber.ring().nvars(), {}, 0});
    CHECK(rep.is_reduction);
    CHECK(rep.r_value == 2);
    auto spec = local_reduction_spectrum(q);
    CHECK(spec.values == std::set<int>{2});
  }

  SUBCASE("irrelevant ideal recovers the ring's own spectrum") {
    auto R = make_ring(Fp(32003), {"x1", "x2"});
    Presentation<Fp> L(R, parse_all(R, {"x1^3", "x1*x2"}));
    auto q = make_quotient_ideal(L, parse_all(R, {"x1", "x2"}));
    auto spec = local_reduction_spectrum(q);
    CHECK(spec.values == std::set<int>{1, 2});
    CHECK(spec.exact);
  }
}

TEST_CASE("testing ideal on the pinch point") {
  auto q = pinch_ideal();
  auto t = testing_ideal(q);

  CHECK(t.spread == 1);
  CHECK(t.big_reduction == 1);
  CHECK(t.minor_size == 2);
  REQUIRE(t.basis_words.size() == 2);
  CHECK(t.basis_words[0] == Monomial({2, 0}));
  CHECK(t.basis_words[1] == Monomial({1, 1}));

  SUBCASE("fiber is the plane conic") {
    REQUIRE(t.fiber.ideal().generators().size() == 1);
    CHECK(poly_to_string(t.fiber.ring(), t.fiber.ideal().generators()[0]) ==
          "y1^2 + y2^2");
  }

  SUBCASE("minors cut out the non-reduction locus") {
    auto expected =
        make_ideal(t.uring, {parse_polynomial(t.uring, "u1^2+u2^2")});
    CHECK(equal_ideals(t.minors, expected));
  }

  SUBCASE("scalar evaluation matches the fiber-ring tests") {
    const auto& field = t.uring.field;
    auto params = [&](std::uint64_t a, std::uint64_t b) {
      return ReductionParams<Fp>{1, 2, {field.from_int(a), field.from_int(b)},
                                 0};
    };
    CHECK(minimal_reduction_test_local(t, params(1, 0)));
    CHECK(minimal_reduction_test_local(t, params(0, 1)));
    CHECK(minimal_reduction_test_local(t, params(1, 1)));
    CHECK_FALSE(minimal_reduction_test_local(t, params(0, 0)));

    SeededRng rng(404);
    for (int round = 0; round < 20; ++round) {
      ReductionParams<Fp> alpha{1, 2, {field.random(rng), field.random(rng)},
                                0};
      bool here = minimal_reduction_test_local(t, alpha);
      CHECK(here == noether_test(t.fiber, alpha));
      if (!here) continue;
      auto rep = reduction_number_of(t.fiber, alpha);
      REQUIRE(rep.is_reduction);
      CHECK(rep.r_value == power_equality_r(q, alpha));
    }
  }
}

TEST_CASE("core sandwich on the pinch point") {
  auto q = pinch_ideal();
  auto t = testing_ideal(q);
  auto rep = core_sandwich(t, 20, 7);
  const auto& R = q.ambient.ring();

  CHECK(rep.power_in_middle);
  CHECK(rep.middle_in_sampled);
  CHECK(rep.middle_equals_sampled);
  CHECK(rep.stabilized);
  CHECK(rep.reductions_used >= 3);

  // here the whole sandwich collapses onto the square of the ideal
  auto square = make_ideal(
      R, parse_all(R, {"U^2", "U*V", "V^2", "U^2+V^2", "V*W"}));
  CHECK(equal_ideals(rep.power, square));
  CHECK(equal_ideals(rep.middle, square));
  CHECK(equal_ideals(rep.sampled, square));

  // U*W survives every dense reduction but not the core
  auto uw = parse_polynomial(R, "U*W");
  CHECK_FALSE(contains(rep.sampled, uw));
  CHECK(contains(make_ideal(R, parse_all(R, {"U+17*V", "U^2+V^2", "V*W"})),
                 uw));

  SUBCASE("every sampled reduction absorbs the stable power") {
    const auto& field = R.field;
    SeededRng rng(99);
    for (int round = 0; round < 5; ++round) {
      ReductionParams<Fp> alpha{1, 2, {field.random_nonzero(rng),
                                       field.random_nonzero(rng)}, 0};
      REQUIRE(minimal_reduction_test_local(t, alpha));
      std::vector<Polynomial<Fp>> cgens;
      auto c = poly_zero(R, MonomialOrder::grevlex());
      for (std::size_t j = 0; j < 2; ++j)
        c = poly_add(R, c,
                     poly_mul(R, t.gens[j],
                              poly_const(R, alpha.entries[j],
                                         MonomialOrder::grevlex())));
      cgens.push_back(c);
      for (const auto& g : q.ambient.ideal().generators()) cgens.push_back(g);
      CHECK(contains_ideal(make_ideal(R, cgens), rep.power));
    }
  }
}

TEST_CASE("membership certificates for the generic reduction") {
  auto q = pinch_ideal();
  auto t = testing_ideal(q);
  const auto& R = q.ambient.ring();

  SUBCASE("a product with the third variable gets a linear certificate") {
    auto w = generic_contraction_witness(t, parse_polynomial(R, "U*W"));
    REQUIRE(w.member);
    REQUIRE(w.certificate.has_value());
    CHECK(poly_to_string(t.uring, *w.certificate) == "u1");
  }

  SUBCASE("a generator itself is refused") {
    auto w = generic_contraction_witness(t, parse_polynomial(R, "U"));
    CHECK_FALSE(w.member);
    CHECK_FALSE(w.certificate.has_value());
  }

  SUBCASE("elements of the square need the full testing ideal") {
    auto w = generic_contraction_witness(t, parse_polynomial(R, "U*V"));
    REQUIRE(w.member);
    REQUIRE(w.certificate.has_value());
    CHECK(equal_ideals(
        make_ideal(t.uring, {*w.certificate}),
        make_ideal(t.uring, {parse_polynomial(t.uring, "u1^2+u2^2")})));
  }

  SUBCASE("inhomogeneous input is rejected") {
    CHECK_THROWS_AS(
        generic_contraction_witness(t, parse_polynomial(R, "U+W^2")),
        error&);
  }
}

TEST_CASE("testing ideal with a one-dimensional monomial fiber") {
  auto R = make_ring(Fp(32003), {"x1", "x2"});
  Presentation<Fp> L(R, parse_all(R, {"x1^3", "x1*x2"}));
  auto q = make_quotient_ideal(L, parse_all(R, {"x1", "x2"}));
  auto t = testing_ideal(q);

  CHECK(t.spread == 1);
  CHECK(t.big_reduction == 2);
  CHECK(t.minor_size == 1);

  // here the minors land on (u2): only forms with an x2 part reduce
  auto u2 = parse_polynomial(t.uring, "u2");
  CHECK(radical_member(u2, t.minors));
  for (const auto& g : t.minors.generators())
    CHECK(radical_member(g, make_ideal(t.uring, {u2})));

  const auto& field = R.field;
  CHECK(minimal_reduction_test_local(
      t, ReductionParams<Fp>{1, 2, {field.from_int(0), field.from_int(1)},
                             0}));
  CHECK_FALSE(minimal_reduction_test_local(
      t, ReductionParams<Fp>{1, 2, {field.from_int(1), field.from_int(0)},
                             0}));

  auto rep = core_sandwich(t, 16, 3);
  CHECK(rep.power_in_middle);
  CHECK(rep.middle_in_sampled);
  // x2^3 + the relations bound the core from below
  CHECK(contains(rep.middle, parse_polynomial(R, "x2^3")));
}

TEST_CASE("nilpotent ideals have the zero reduction") {
  auto R = make_ring(Fp(32003), {"x", "y"});
  Presentation<Fp> L(R, parse_all(R, {"x^2"}));
  auto q = make_quotient_ideal(L, parse_all(R, {"x"}));
  auto t = testing_ideal(q);

  CHECK(t.spread == 0);
  CHECK(t.big_reduction == 1);
  CHECK(t.minor_size == 0);
  CHECK(contains(t.minors, poly_one(t.uring, MonomialOrder::grevlex())));
  CHECK(minimal_reduction_test_local(t,
                                     ReductionParams<Fp>{0, 1, {}, 0}));

  auto rep = core_sandwich(t, 4, 1);
  CHECK(rep.middle_equals_sampled);
  auto defining = make_ideal(R, q.ambient.ideal().generators());
  CHECK(equal_ideals(rep.power, defining));
  CHECK(equal_ideals(rep.sampled, defining));

  auto w = generic_contraction_witness(t, parse_polynomial(R, "x"));
  CHECK_FALSE(w.member);
  auto w2 = generic_contraction_witness(t, parse_polynomial(R, "x^2"));
  CHECK(w2.member);
}
