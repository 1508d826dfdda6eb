#include <gtest/gtest.h>

#include "quotlab/groebner.hpp"
#include "quotlab/parse.hpp"

namespace quotlab {
namespace {

using QPoly = Polynomial<Rationals>;
using FPoly = Polynomial<PrimeField>;

RingPtr<Rationals> qring(std::vector<std::string> names, MonomialOrder ord = MonomialOrder::grevlex()) {
  return PolyRing<Rationals>::make(std::move(names), {}, ord);
}

template <class D>
std::vector<Polynomial<D>> polys(const RingPtr<D>& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial<D>> out;
  for (auto t : texts) out.push_back(parse_polynomial(r, t));
  return out;
}

template <class D>
void expect_certified(const GroebnerBasis<D>& gb) {
  auto cert = certify(gb);
  EXPECT_TRUE(cert.ok) << cert.failure;
}

TEST(Buchberger, PrincipalIdealIsItsOwnBasis) {
  auto r = qring({"x", "y"});
  auto gb = buchberger(polys(r, {"x - y"}), MonomialOrder::grevlex());
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb.elements[0], parse_polynomial(r, "x - y"));
  expect_certified(gb);
}

TEST(Buchberger, ZeroIdealGivesEmptyBasis) {
  auto r = qring({"x"});
  Ideal<Rationals> zero(r, {QPoly(r)});
  EXPECT_TRUE(zero.generators().empty());
  EXPECT_EQ(buchberger(zero, MonomialOrder::grevlex()).size(), 0u);
}

TEST(Buchberger, TwistedCubicCuspElimination) {
  auto r = qring({"t", "x", "y"});
  auto gb = buchberger(polys(r, {"x - t^2", "y - t^3"}), MonomialOrder::block_elimination(1));
  expect_certified(gb);
  // oracle: every t-free element vanishes identically under x=t^2, y=t^3
  Binding<Rationals> param{{"x", parse_polynomial(r, "t^2")}, {"y", parse_polynomial(r, "t^3")}};
  bool found = false;
  for (const auto& g : gb.elements) {
    if (g.uses_variable(0)) continue;
    EXPECT_TRUE(substitute(g.in_ring(r), param).is_zero()) << g.to_string();
    if (g.in_ring(r) == parse_polynomial(r, "x^3 - y^2")) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Buchberger, PlueckerQuadricCase) {
  auto r = qring({"p12", "p13", "p14", "p23", "p24", "p34"});
  auto gens = polys(r, {"p24", "p14 + p23", "p12*p34 - p13*p24 + p14*p23"});
  auto gb = buchberger(gens, MonomialOrder::grevlex());
  expect_certified(gb);
  ASSERT_EQ(gb.size(), 3u);
  // hand reduction: p24 -> 0, p23 -> -p14 gives the quadric p12*p34 - p14^2
  for (const char* t : {"p24", "p14 + p23", "p12*p34 - p14^2", "p12*p34 - p23^2"})
    EXPECT_TRUE(normal_form(parse_polynomial(r, t), gb).is_zero()) << t;
  for (const auto& g : gb.elements) {
    Ideal<Rationals> mine(r, polys(r, {"p24", "p14 + p23", "p12*p34 - p14^2"}));
    EXPECT_TRUE(normal_form(g, buchberger(mine, MonomialOrder::grevlex())).is_zero());
  }
}

TEST(Buchberger, DeterministicAcrossRuns) {
  auto r = PolyRing<PrimeField>::make({"x", "y", "z"}, PrimeField(32003));
  auto gens = polys(r, {"x^2 + y*z - 1", "x*y - z^2", "y^3 - x*z + 2"});
  auto a = buchberger(gens, MonomialOrder::grevlex());
  auto b = buchberger(gens, MonomialOrder::grevlex());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.elements[i].to_string(), b.elements[i].to_string());
  expect_certified(a);
  // reversed generator order gives the same reduced basis
  std::vector<FPoly> rev(gens.rbegin(), gens.rend());
  auto c = buchberger(rev, MonomialOrder::grevlex());
  ASSERT_EQ(a.size(), c.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.elements[i], c.elements[i]);
}

TEST(Buchberger, CertificateOnAssortedSystems) {
  auto r = PolyRing<PrimeField>::make({"a", "b", "c", "d"}, PrimeField(5));
  for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block_elimination(2)}) {
    auto gb = buchberger(polys(r, {"a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b",
                                   "a*b*c*d - 1"}),
                         ord);
    expect_certified(gb);
  }
}

TEST(Buchberger, InconsistentSystemIsUnitIdeal) {
  auto r = qring({"x", "y"});
  auto gb = buchberger(polys(r, {"x*y - 1", "x"}), MonomialOrder::grevlex());
  EXPECT_TRUE(gb.is_unit_ideal());
  EXPECT_EQ(krull_dim(gb), -1);
}

TEST(Buchberger, Timeout) {
  auto r = PolyRing<PrimeField>::make({"a", "b", "c", "d", "e"}, PrimeField(32003));
  BuchbergerOptions opt;
  opt.deadline = Clock::now() - std::chrono::seconds(1);
  EXPECT_THROW(buchberger(polys(r, {"a*b - c^2", "b*c - d*e", "a^2 - e^2"}), MonomialOrder::grevlex(), opt),
               TimeoutError);
}

TEST(NormalForm, GeneratorsReduceToZeroAndOneDoesNot) {
  auto r = qring({"x", "y", "z"});
  auto gens = polys(r, {"x^2 - y", "x*y - z"});
  auto gb = buchberger(gens, MonomialOrder::grevlex());
  for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb).is_zero());
  EXPECT_FALSE(normal_form(QPoly::from_int(r, 1), gb).is_zero());
}

TEST(NormalForm, RemainderHasNoDivisibleTerm) {
  auto r = qring({"x", "y"});
  auto gb = buchberger(polys(r, {"x^2 - y", "y^2 - x"}), MonomialOrder::grevlex());
  auto rem = normal_form(parse_polynomial(r, "x^3*y + 7*x*y^2 + 3"), gb);
  for (const auto& t : rem.terms())
    for (const auto& g : gb.elements) EXPECT_FALSE(g.leading_monomial().divides(t.mono));
}

TEST(NormalForm, ContextMismatch) {
  auto r = qring({"x"});
  auto s = qring({"y"});
  auto gb = buchberger(polys(r, {"x"}), MonomialOrder::grevlex());
  EXPECT_THROW(normal_form(parse_polynomial(s, "y"), gb), AlgebraError);
}

TEST(Eliminate, Cusp) {
  auto r = qring({"t", "x", "y"});
  Ideal<Rationals> i(r, polys(r, {"x - t^2", "y - t^3"}));
  auto e = eliminate(i, {"t"});
  ASSERT_EQ(e.generators().size(), 1u);
  auto sub = e.ring();
  EXPECT_EQ(e.generators()[0], parse_polynomial(sub, "x^3 - y^2"));
}

TEST(Eliminate, SurjectiveParametrization) {
  auto r = qring({"t", "x"});
  auto e = eliminate(Ideal<Rationals>(r, polys(r, {"x - t"})), {"t"});
  EXPECT_TRUE(e.generators().empty());
}

TEST(Eliminate, BlockMismatch) {
  auto r = qring({"x", "t"});
  Ideal<Rationals> i(r, polys(r, {"x - t"}));
  EXPECT_THROW(eliminate(i, {"t"}), AlgebraError);
  EXPECT_THROW(eliminate(i, {"w"}), AlgebraError);
}

TEST(KrullDim, Examples) {
  auto r = qring({"x", "y"});
  EXPECT_EQ(krull_dim(GroebnerBasis<Rationals>{r, {}}), 2);
  EXPECT_EQ(krull_dim(buchberger(polys(r, {"x*y"}), MonomialOrder::grevlex())), 1);
  EXPECT_EQ(krull_dim(buchberger(polys(r, {"x", "y"}), MonomialOrder::grevlex())), 0);
  auto s = qring({"a", "b", "c", "d"});
  // twisted cubic cone: dimension 2
  EXPECT_EQ(krull_dim(buchberger(polys(s, {"a*c - b^2", "b*d - c^2", "a*d - b*c"}), MonomialOrder::grevlex())), 2);
}

TEST(ProjectiveClosure, QuadricChart) {
  auto r = qring({"p14", "p34"});
  auto c = projective_closure(Ideal<Rationals>(r, polys(r, {"p34 - p14^2"})), "p12");
  ASSERT_EQ(c.generators().size(), 1u);
  EXPECT_EQ(c.ring()->names(), (std::vector<std::string>{"p12", "p14", "p34"}));
  auto expected = parse_polynomial(c.ring(), "p12*p34 - p14^2");
  EXPECT_TRUE(c.generators()[0] == expected || c.generators()[0] == -expected);
  EXPECT_EQ(dehomogenize(c.generators()[0], 0), transfer_by_name(parse_polynomial(r, "p34 - p14^2"), c.ring()) *
                                                     QPoly::from_int(c.ring(), expected == c.generators()[0] ? 1 : -1));
}

TEST(ProjectiveClosure, ZeroAndHomogeneousInputs) {
  auto r = qring({"x", "y"});
  auto z = projective_closure(Ideal<Rationals>(r, {}), "h");
  EXPECT_TRUE(z.generators().empty());
  auto s = qring({"p12", "p14", "p23", "p24"});
  Ideal<Rationals> lin(s, polys(s, {"p24", "p14 + p23"}));
  auto c = projective_closure(lin, "p12");
  auto gb = buchberger(c, MonomialOrder::grevlex());
  auto orig = buchberger(lin, MonomialOrder::grevlex());
  ASSERT_EQ(gb.size(), orig.size());
  for (std::size_t i = 0; i < gb.size(); ++i) EXPECT_EQ(gb.elements[i], orig.elements[i]);
  EXPECT_THROW(projective_closure(Ideal<Rationals>(s, polys(s, {"p12 - 1"})), "p12"), AlgebraError);
}

TEST(ProjectiveClosure, CuspClosureRoundTrip) {
  auto r = qring({"x", "y"});
  Ideal<Rationals> aff(r, polys(r, {"x^3 - y^2"}));
  auto c = projective_closure(aff, "h");
  auto affine_gb = buchberger(aff, MonomialOrder::grevlex());
  // dehomogenize each closure generator back into the affine ring
  std::vector<int> back{-1, 0, 1};
  std::vector<QPoly> dehom;
  for (const auto& g : c.generators()) dehom.push_back(transfer(dehomogenize(g, 0), r, back));
  for (const auto& g : dehom) EXPECT_TRUE(normal_form(g, affine_gb).is_zero());
  auto back_gb = buchberger(dehom, MonomialOrder::grevlex());
  for (const auto& g : affine_gb.elements) EXPECT_TRUE(normal_form(g, back_gb).is_zero());
}

TEST(SingularIdeal, QuadricConeVertex) {
  auto r = qring({"p12", "p13", "p14", "p34"});
  Ideal<Rationals> cone(r, polys(r, {"p12*p34 - p14^2"}));
  auto sing = singular_ideal(cone, 1);
  for (const char* v : {"p12", "p14", "p34"}) EXPECT_TRUE(radical_member(parse_polynomial(r, v), sing)) << v;
  EXPECT_FALSE(radical_member(parse_polynomial(r, "p13"), sing));
  auto gb = buchberger(sing, MonomialOrder::grevlex());
  EXPECT_EQ(krull_dim(gb), 1);  // affine cone over one projective point
}

TEST(SingularIdeal, SmoothQuadricAndLinearSpace) {
  auto r = qring({"x", "y", "z", "w"});
  auto sing = singular_ideal(Ideal<Rationals>(r, polys(r, {"x^2 + y^2 + z^2 + w^2"})), 1);
  EXPECT_EQ(krull_dim(buchberger(sing, MonomialOrder::grevlex())), 0);  // irrelevant ideal
  auto lin = singular_ideal(Ideal<Rationals>(r, polys(r, {"x - y", "z"})), 2);
  EXPECT_TRUE(buchberger(lin, MonomialOrder::grevlex()).is_unit_ideal());
  EXPECT_THROW(singular_ideal(Ideal<Rationals>(r, polys(r, {"x"})), 7), AlgebraError);
}

TEST(QuadricRank, Examples) {
  auto r = qring({"x", "y", "z", "w"});
  EXPECT_EQ(quadric_rank(parse_polynomial(r, "x^2 + y^2 + z^2 + w^2")), 4);
  EXPECT_EQ(quadric_rank(parse_polynomial(r, "x*y")), 2);
  auto s = qring({"p12", "p13", "p14", "p34"});
  EXPECT_EQ(quadric_rank(parse_polynomial(s, "p12*p34 - p14^2")), 3);
  auto f5 = PolyRing<PrimeField>::make({"p12", "p13", "p14", "p34"}, PrimeField(5));
  EXPECT_EQ(quadric_rank(parse_polynomial(f5, "p12*p34 - p14^2")), 3);
}

TEST(QuadricRank, Errors) {
  auto f2 = PolyRing<PrimeField>::make({"x", "y"}, PrimeField(2));
  EXPECT_THROW(quadric_rank(parse_polynomial(f2, "x*y")), AlgebraError);
  auto r = qring({"x", "y"});
  EXPECT_THROW(quadric_rank(parse_polynomial(r, "x^3")), AlgebraError);
  EXPECT_THROW(quadric_rank(parse_polynomial(r, "x^2 + y")), AlgebraError);
}

TEST(RadicalMember, NilpotentDetected) {
  auto r = qring({"x", "y"});
  Ideal<Rationals> i(r, polys(r, {"x^3", "y^2"}));
  EXPECT_TRUE(radical_member(parse_polynomial(r, "x + y"), i));
  EXPECT_FALSE(radical_member(parse_polynomial(r, "x + 1"), i));
}

TEST(Audit, CountsAndCertifiesWhenEnabled) {
  auto& ctr = audit::counters();
  ctr.reset();
  ctr.enabled = true;
  auto r = qring({"x", "y"});
  buchberger(polys(r, {"x^2 - y", "x*y - 1"}), MonomialOrder::grevlex());
  ctr.enabled = false;
  EXPECT_EQ(ctr.bases_computed.load(), 1u);
  EXPECT_EQ(ctr.bases_certified.load(), 1u);
  EXPECT_EQ(ctr.basis_failures.load(), 0u);
  ctr.reset();
}

}  // namespace
}  // namespace quotlab
