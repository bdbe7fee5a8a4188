#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "termcheck/parser.hpp"

using namespace termcheck;

TEST(ParseProgram, FactGetsFirstId) {
    const Program p = parse_program("append([],X,X).");
    ASSERT_EQ(p.clauses().size(), 1u);
    EXPECT_EQ(p.clauses()[0].id, 1);
    EXPECT_EQ(clause_label(p.clauses()[0].id), "C1");
    EXPECT_TRUE(p.clauses()[0].body.empty());
    EXPECT_EQ(p.clauses()[0].head, parse_term("append([],X,X)"));
}

TEST(ParseProgram, NegatedBody) {
    for (const char* text : {"p(X) :- \\+ p(f(X)).", "p(X) :- not(p(f(X)))."}) {
        const Program p = parse_program(text);
        ASSERT_EQ(p.clauses().size(), 1u);
        const Clause& c = p.clauses()[0];
        EXPECT_EQ(c.head, parse_term("p(X)"));
        ASSERT_EQ(c.body.size(), 1u);
        EXPECT_TRUE(c.body[0].negative);
        EXPECT_EQ(c.body[0].atom, parse_term("p(f(X))"));
    }
}

TEST(ParseProgram, BuiltinsAndComments) {
    const Program p = parse_program(
        "% comment line\n"
        "p([X|Y],N) :- size([X|Y]) < N, p([X,X|Y],N).  % trailing\n"
        "q(X) :- X is 2 * (3 + 1), X =:= 8, X =\\= 7, X >= 1, X =< 9, X > 0.\n");
    ASSERT_EQ(p.clauses().size(), 2u);
    EXPECT_EQ(p.clauses()[0].body[0].atom.name(), "<");
    EXPECT_TRUE(is_builtin(p.clauses()[0].body[0].atom));
    EXPECT_EQ(p.clauses()[1].body.size(), 6u);
    EXPECT_EQ(p.clauses()[1].id, 2);
}

TEST(ParseProgram, SyntaxErrorsCarryPosition) {
    try {
        parse_program("p :- q r.");
        FAIL() << "expected a syntax error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_EQ(e.column(), 8u);
    }
    try {
        parse_program("p.\nq(a :- r.");
        FAIL() << "expected a syntax error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(ParseProgram, RejectsBadHeads) {
    EXPECT_THROW(parse_program("\\+ p :- q."), ParseError);
    EXPECT_THROW(parse_program("X < 3 :- q."), ParseError);
    EXPECT_THROW(parse_program("X is 3."), ParseError);
    EXPECT_THROW(parse_program("p(a)"), ParseError);  // missing period
    EXPECT_THROW(parse_program("X :- q."), ParseError);
}

TEST(ParseProgram, AnonymousVariablesAreDistinct) {
    const Program p = parse_program("p(_, _, X) :- q(X, _).");
    const auto vars = variables_of(p.clauses()[0].head);
    ASSERT_EQ(vars.size(), 3u);
    EXPECT_NE(vars[0], vars[1]);
    EXPECT_FALSE(occurs_in(vars[0], p.clauses()[0].body[0].atom));
}

TEST(ParseQuery, SinglePositiveAtom) {
    EXPECT_EQ(parse_query("p(a)").atom, parse_term("p(a)"));
    EXPECT_FALSE(parse_query("p(a).").negative);
    EXPECT_EQ(parse_query("r(a,c,[[a,b],[b,c],[c,a]],[a])").atom.arity(), 4u);
    EXPECT_THROW(parse_query("\\+ p(a)"), ParseError);
    EXPECT_THROW(parse_query("p(a), q"), ParseError);
    EXPECT_THROW(parse_query("p(a"), ParseError);
}

TEST(ParseProgram, RoundTripsThroughText) {
    for (const auto& f : testkit::fixtures()) {
        const Program p = testkit::load_fixture(f.name);
        EXPECT_FALSE(p.clauses().empty());
        EXPECT_EQ(parse_program(to_string(p)), p) << f.name;
    }
    const Program tricky = parse_program("q(X, -1, [a|T]) :- X is 1 - (2 - 3) * -(4), \\+ r([], T).");
    EXPECT_EQ(parse_program(to_string(tricky)), tricky);
}

TEST(ParseProgram, IndexesClausesByPredicate) {
    const Program p = testkit::load_fixture("p6");
    EXPECT_EQ(p.clauses_for("member", 2), (std::vector<ClauseId>{3, 4}));
    EXPECT_EQ(p.clauses_for("r", 4), (std::vector<ClauseId>{1, 2}));
    EXPECT_TRUE(p.clauses_for("r", 3).empty());
}
