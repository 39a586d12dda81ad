#include <gtest/gtest.h>

#include <qcore/expr.hpp>
#include <qcore/registry.hpp>
#include <qcore/relation.hpp>

#include "golden_values.hpp"
#include "support.hpp"

using namespace qcore;
using testing_support::from_strings;
using testing_support::series;

TEST(Lexer, Tokens) {
  const auto ts = tokenize("a5(5n+2) == 4*c5 mod 10");
  ASSERT_GE(ts.size(), 8u);
  EXPECT_EQ(ts.front().text, "a5");
  EXPECT_EQ(ts.back().kind, Token::Kind::end);
  bool saw_eqeq = false;
  for (const auto& t : ts) saw_eqeq |= t.text == "==";
  EXPECT_TRUE(saw_eqeq);
  EXPECT_THROW(tokenize("phi(q) $ 2"), ParseError);
}

TEST(Expr, NamedSeries) {
  EXPECT_EQ(evaluate("a5", 7), series({1, 2, 4, 8, 14, 14, 20, 24}));
  EXPECT_EQ(evaluate("a5bar", 7), gen_a5bar(7));
  EXPECT_EQ(evaluate("b5bar", 10), gen_b5bar(10));
  EXPECT_EQ(evaluate("c5", 0), series({1}));
  EXPECT_EQ(evaluate("phi(-q)", 120), from_strings(golden::kPhiMinus, 120));
  EXPECT_EQ(evaluate("psi(-q)", 120), from_strings(golden::kPsiMinus, 120));
  EXPECT_EQ(evaluate("chi(-q)", 120), from_strings(golden::kChiMinus, 120));
  EXPECT_EQ(evaluate("R(q)", 120), from_strings(golden::kRR, 120));
  EXPECT_EQ(evaluate("R", 120), from_strings(golden::kRR, 120));
  EXPECT_EQ(evaluate("f(-q)", 60), euler_f(1, 60));
  EXPECT_EQ(evaluate("f", 60), alternate(euler_f(1, 60)));
  EXPECT_EQ(evaluate("f1", 60), euler_f(1, 60));
  EXPECT_EQ(evaluate("f20", 60), euler_f(20, 60));
}

TEST(Expr, Substitutions) {
  EXPECT_EQ(evaluate("phi(-q^5)", 200), phi(Sign::minus, 5, 200));
  EXPECT_EQ(evaluate("c5(q^2)", 200), inflate(gen_c5(100), 2, 200));
  EXPECT_EQ(evaluate("b5(-q)", 200), alternate(gen_b5bar(200)));
  EXPECT_EQ(evaluate("dil(a5, 3)", 200), inflate(gen_a5bar(66), 3, 200));
  EXPECT_EQ(evaluate("alt(psi(q))", 200), psi(Sign::minus, 1, 200));
  EXPECT_EQ(evaluate("f(q^15,q^35)", 300), theta_general({Sign::plus, 15, Sign::plus, 35}, 300));
  EXPECT_EQ(evaluate("f(-q^3,-q^7)", 300), theta_general({Sign::minus, 3, Sign::minus, 7}, 300));
  EXPECT_EQ(evaluate("poch(-q, q)", 100), expand_pochhammer({Sign::minus, 1, 1, 1}, 100));
  EXPECT_EQ(evaluate("poch(q^2, q^5)", 100), expand_pochhammer({Sign::plus, 2, 5, 1}, 100));
}

TEST(Expr, Arithmetic) {
  EXPECT_EQ(evaluate("(1 - q)*(1 + q)", 3), series({1, 0, -1, 0}));
  EXPECT_EQ(evaluate("q^3", 4), series({0, 0, 0, 1, 0}));
  EXPECT_EQ(evaluate("-2*q + 3", 2), series({3, -2, 0}));
  EXPECT_EQ(evaluate("1/(1-q)", 4), series({1, 1, 1, 1, 1}));
  EXPECT_EQ(evaluate("R^-4", 60), pow(rr_quotient(1, 60), -4));
  EXPECT_EQ(evaluate("R(q^5)^(-2)", 60), pow(rr_quotient(5, 60), -2));
  EXPECT_EQ(evaluate("f5^5/f1", 100), gen_c5(100));
  EXPECT_EQ(evaluate("4*q*f5^5/f1 + phi(-q)*phi(-q^5)^3", 300), gen_a5bar(300));
}

TEST(Expr, ProgressionsRaiseTheWorkingOrder) {
  const auto a = gen_a5bar(1000);
  const auto got = evaluate("ap(a5, 25, 0)", 40);
  ASSERT_EQ(got.order(), 40u);
  for (std::size_t n = 0; n <= 40; ++n) EXPECT_EQ(got.at(n), a.at(25 * n)) << n;
  const auto b = gen_b5bar(1000);
  const auto g2 = evaluate("ap(b5, 5, 2)", 100);
  for (std::size_t n = 0; n <= 100; ++n) EXPECT_EQ(g2.at(n), b.at(5 * n + 2)) << n;
}

TEST(Expr, Errors) {
  EXPECT_THROW(parse_expr(""), ParseError);
  EXPECT_THROW(parse_expr("phi("), ParseError);
  EXPECT_THROW(parse_expr("nosuch(q)"), ParseError);
  EXPECT_THROW(parse_expr("phi(2*q)"), ParseError);
  EXPECT_THROW(parse_expr("phi(q) phi(q)"), ParseError);
  EXPECT_THROW(parse_expr("ap(a5, 5, 7)"), ParseError);
  EXPECT_THROW(parse_expr("f0"), ParseError);
  try {
    parse_expr("1 + + )");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GT(e.position(), 0u);
  }
  EXPECT_THROW(evaluate("1/(2+q)", 5), NonUnitConstantTerm);
}

TEST(Relation, ParsesLinearForms) {
  const auto r = parse_relation("b5(10n+2) = 1/4*a5(2n+1) + 1/2*c5(2n)");
  ASSERT_EQ(r.sides.size(), 2u);
  EXPECT_FALSE(r.modulus);
  ASSERT_EQ(r.sides[0].reads.size(), 1u);
  EXPECT_EQ(r.sides[0].reads[0].seq, Sequence::b5bar);
  EXPECT_EQ(r.sides[0].reads[0].slope, 10);
  EXPECT_EQ(r.sides[0].reads[0].offset, 2);
  ASSERT_EQ(r.sides[1].reads.size(), 2u);
  EXPECT_EQ(r.sides[1].reads[0].coefficient, Rational(1, 4));
  EXPECT_EQ(r.sides[1].reads[1].coefficient, Rational(1, 2));
  EXPECT_EQ(r.sides[1].reads[1].seq, Sequence::c5);
}

TEST(Relation, Chains) {
  const auto r = parse_relation("a5(20n+6) = 10*c5(10n+2) = 20*b5(10n) = 2*(10*b5(10n))");
  ASSERT_EQ(r.sides.size(), 4u);
  EXPECT_EQ(r.sides[3].reads[0].coefficient, 20);
}

TEST(Relation, ConstantsAndNegativeOffsets) {
  const auto r = parse_relation("b5(4n+1) = c5(n) - 2*b5(2n-1)");
  EXPECT_EQ(r.sides[1].reads[1].coefficient, -2);
  EXPECT_EQ(r.sides[1].reads[1].offset, -1);
  const auto z = parse_relation("b5(10n+6) = 0");
  EXPECT_TRUE(z.sides[1].is_constant());
  const auto s = parse_relation("a5(5n) = a5(5*n)");
  EXPECT_EQ(s.sides[0].reads[0].slope, 5);
  EXPECT_EQ(s.sides[1].reads[0].slope, 5);
}

TEST(Relation, CongruenceAndFamilies) {
  const auto c = parse_relation("a5(20n+6) == 0 mod 10");
  ASSERT_TRUE(c.modulus);
  EXPECT_EQ(*c.modulus, 10);
  const auto f = parse_relation("b5(K*(20n+18)-3) == 0 mod (K-1)/4", 125);
  EXPECT_EQ(*f.modulus, 31);
  EXPECT_EQ(f.sides[0].reads[0].slope, 2500);
  EXPECT_EQ(f.sides[0].reads[0].offset, 125 * 18 - 3);
  const auto g = parse_relation("a5(K*n) = (K-1)/4*a5(5n) - (K-5)/4*a5(n)", 25);
  EXPECT_EQ(g.sides[1].reads[0].coefficient, 6);
  EXPECT_EQ(g.sides[1].reads[1].coefficient, -5);
}

TEST(Relation, Errors) {
  EXPECT_THROW(parse_relation("a5(n)"), ParseError);
  EXPECT_THROW(parse_relation("a5(n) = zz(n)"), ParseError);
  EXPECT_THROW(parse_relation("a5(n*n) = 0"), ParseError);
  EXPECT_THROW(parse_relation("a5(K*n) = 0"), ParseError);
  EXPECT_THROW(parse_relation("a5(n) = 1/0"), ParseError);
  EXPECT_THROW(parse_relation("a5(n) == 0 mod"), ParseError);
  EXPECT_THROW(parse_relation("a5(-n) = 0"), ParseError);
}

TEST(Registry, Builtin) {
  const auto& reg = Registry::builtin();
  for (const char* id : {"lemma.phimodeq", "lemma.phimodeqfora5", "lemma.psimodeq", "lemma.psimodeqforb5", "lemma.f5modeg",
                         "lemma.A4B", "lemma.c4n1", "lemma.c5n4", "dissection.f1", "dissection.inv_f1", "dissection.phi",
                         "dissection.psi", "thm1.a5n2", "thm1.recurrence", "cor1.mod10a", "cor1.mod10b", "cor1.mod5k",
                         "thm2.b4n3", "thm2.recurrence", "cor.census", "cor.gireesh.a", "cor.b5.mod5k"}) {
    ASSERT_NE(reg.find(id), nullptr) << id;
    EXPECT_EQ(reg.at(id).tier, Tier::core) << id;
  }
  std::size_t thm1 = 0, thm3 = 0;
  for (const auto& r : reg.records()) {
    if (r.id.rfind("thm1.", 0) == 0 && r.kind == RecordKind::subsequence_relation) ++thm1;
    if (r.id.rfind("thm3.", 0) == 0) ++thm3;
  }
  EXPECT_EQ(thm1, 6u);
  EXPECT_EQ(thm3, 13u);
  EXPECT_FALSE(reg.tier(Tier::extended).empty());
  EXPECT_THROW(reg.at("no.such.id"), UnknownIdentity);
}

TEST(Registry, EveryClaimParses) {
  for (const auto& r : Registry::builtin().records()) {
    switch (r.kind) {
      case RecordKind::series_equality: {
        std::size_t sides = 0, start = 0;
        const std::string& c = r.claim;
        for (std::size_t i = 0; i <= c.size(); ++i) {
          if (i == c.size() || c[i] == '=') {
            EXPECT_NO_THROW(parse_expr(std::string_view(c).substr(start, i - start))) << r.id;
            ++sides;
            start = i + 1;
          }
        }
        EXPECT_GE(sides, 2u) << r.id;
        break;
      }
      case RecordKind::subsequence_relation:
      case RecordKind::congruence_family:
        if (r.claim.find('K') == std::string::npos) {
          EXPECT_NO_THROW(parse_relation(r.claim)) << r.id;
          break;
        }
        [[fallthrough]];
      case RecordKind::recurrence_family:
        EXPECT_NO_THROW(parse_relation(r.claim, 25)) << r.id;
        break;
      case RecordKind::census: break;
    }
  }
}

TEST(Registry, ParseFormat) {
  const auto reg = Registry::parse(
      "# comment\n"
      "\n"
      "x.one | series | core | a | phi(q) = phi(q)\n"
      "x.two | relation | extended | b | a5(n) = a5(n)\n");
  ASSERT_EQ(reg.records().size(), 2u);
  EXPECT_EQ(reg.at("x.two").tier, Tier::extended);
  EXPECT_EQ(reg.at("x.two").kind, RecordKind::subsequence_relation);
  EXPECT_THROW(Registry::parse("a | series | core | b"), RegistryError);
  EXPECT_THROW(Registry::parse("a | bogus | core | b | c"), RegistryError);
  EXPECT_THROW(Registry::parse("a | series | gold | b | c"), RegistryError);
  EXPECT_THROW(Registry::parse("a | series | core | b | c\na | series | core | b | c"), RegistryError);
  auto copy = Registry::builtin();
  IdentityRecord rec = copy.at("thm1.a5n2");
  rec.claim = "a5(5n+2) = 3*c5(5n+1)";
  copy.upsert(rec);
  EXPECT_EQ(copy.at("thm1.a5n2").claim, rec.claim);
  EXPECT_EQ(copy.records().size(), Registry::builtin().records().size());
}
