#include "eogt/effect.hpp"
#include "eogt/fixtures.hpp"
#include "eogt/rule.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace eogt;
using namespace eogt::testing;

namespace {

TypedGraph client()
{
	TypedGraph g("bank");
	g.add_node("c", "Client");
	return g;
}

// NAC: the matched client has an account.
Nac client_has_account()
{
	Nac n{"has_account", client()};
	n.forbidden.add_node("x", "Account").add_edge("cx", "accounts", "c", "x");
	return n;
}

bool has_code(const Diagnostics& ds, const std::string& code)
{
	return std::any_of(ds.begin(), ds.end(), [&](const Diagnostic& d) { return d.code == code; });
}

} // namespace

TEST(ValidateRule, FixtureMaximalRuleIsValid)
{
	TypeGraph tg = fixtures::bank_types();
	EXPECT_TRUE(validate_rule(fixtures::ensure_acc().maximal, &tg).empty());
	EXPECT_TRUE(validate_rule(fixtures::ensure_no_acc().maximal, &tg).empty());
}

TEST(ValidateRule, InterfaceEdgeMissingFromRhs)
{
	TypedGraph l = client();
	l.add_node("a", "Account").add_edge("e", "accounts", "c", "a");
	Rule r{"r", l, l, client(), {}};
	r.rhs.add_node("a", "Account");
	EXPECT_TRUE(has_code(validate_rule(r), "interface-not-in-rhs"));
}

TEST(ValidateRule, IdentityRuleIsValid)
{
	TypedGraph g = fixtures::bank_graph();
	EXPECT_TRUE(validate_rule(Rule{"id", g, g, g, {}}).empty());
}

TEST(ValidateRule, AmbiguousIdsAndUnrootedNacs)
{
	TypedGraph l = client();
	l.add_node("x", "Account");
	TypedGraph r = client();
	r.add_node("x", "Portfolio");
	Rule rule{"r", l, client(), r, {}};
	EXPECT_TRUE(has_code(validate_rule(rule), "ambiguous-id"));
	Rule unrooted{"u", client(), client(), client(), {Nac{"n", TypedGraph("bank")}}};
	EXPECT_TRUE(has_code(validate_rule(unrooted), "nac-not-rooted"));
}

TEST(SatisfiesNacs, EmptyListHolds)
{
	EXPECT_TRUE(satisfies_nacs(fixtures::client_match("c1"), {}, fixtures::bank_graph()));
}

TEST(SatisfiesNacs, ClientWithoutAccount)
{
	TypedGraph g = fixtures::bank_graph();
	std::vector<Nac> nacs{client_has_account()};
	EXPECT_TRUE(satisfies_nacs(fixtures::client_match("c2"), nacs, g));
	EXPECT_FALSE(satisfies_nacs(fixtures::client_match("c1"), nacs, g));
	EXPECT_TRUE(brute_satisfies(fixtures::client_match("c2"), nacs, g));
	EXPECT_FALSE(brute_satisfies(fixtures::client_match("c1"), nacs, g));
}

TEST(ShiftNacs, IdentityReturnsInputUpToIso)
{
	std::vector<Nac> nacs{client_has_account()};
	auto shifted = shift_nacs(identity(client()), client(), nacs);
	ASSERT_EQ(shifted.size(), 1u);
	EXPECT_TRUE(isomorphic(shifted[0].forbidden, nacs[0].forbidden));
	EXPECT_TRUE(nacs_equivalent(client(), shifted, nacs));
}

TEST(ShiftNacs, EmptySetStaysEmpty)
{
	TypedGraph bigger = client();
	bigger.add_node("p", "Portfolio");
	EXPECT_TRUE(shift_nacs(inclusion(client()), bigger, {}).empty());
}

TEST(ShiftNacs, AlongAddedPortfolioIsSemanticallyEquivalent)
{
	TypedGraph bigger = client();
	bigger.add_node("p", "Portfolio");
	std::vector<Nac> nacs{client_has_account()};
	Morphism b = inclusion(client());
	auto shifted = shift_nacs(b, bigger, nacs);
	// Exhaustive over all hosts with at most 5 nodes.
	TypeGraph tg = fixtures::bank_types();
	std::size_t matches = 0;
	enumerate_hosts(tg, 4, 1, {{"Client", 1}, {"Portfolio", 1}}, [&](const TypedGraph& host) {
		for (const auto& m : all_injective_morphisms(bigger, host)) {
			++matches;
			EXPECT_EQ(brute_satisfies(m, shifted, host), brute_satisfies(restrict_to(m, client()), nacs, host));
		}
		return true;
	});
	EXPECT_GT(matches, 0u);
}

TEST(ShiftNacs, OverlapsAreEnumerated)
{
	// L' already contains an Account a: the NAC's x can be glued onto a (with
	// its edge possibly glued too) or stay fresh.
	TypedGraph bigger = client();
	bigger.add_node("a", "Account");
	auto shifted = shift_nacs(inclusion(client()), bigger, {client_has_account()});
	EXPECT_EQ(shifted.size(), 2u);
	TypedGraph with_edge = bigger;
	with_edge.add_edge("ca", "accounts", "c", "a");
	// glue x->a then cx fresh or glued onto ca; or x fresh.
	EXPECT_EQ(shift_nacs(inclusion(client()), with_edge, {client_has_account()}).size(), 3u);
}

TEST(ShiftNacs, SemanticsOnRandomMonos)
{
	Rng rng(99);
	TypeGraph tg = two_sorted_types();
	int verified = 0;
	for (int i = 0; i < 8; ++i) {
		NacPair p = random_nac_pair(rng, tg);
		auto shifted = shift_nacs(inclusion(p.lhs), p.target, {p.nac});
		enumerate_hosts(tg, 4, 1, {}, [&](const TypedGraph& host) {
			for (const auto& m : all_injective_morphisms(p.target, host)) {
				EXPECT_EQ(brute_satisfies(m, shifted, host), brute_satisfies(restrict_to(m, p.lhs), {p.nac}, host));
				++verified;
			}
			return true;
		});
	}
	EXPECT_GT(verified, 0);
}

TEST(EnumerateHosts, CountsMatchClosedForm)
{
	// One node type with a loop edge type, two nodes max, multiplicity 1:
	// 1 (empty) + 2 (one node, loop or not) + 2^4 (two nodes, four slots).
	TypeGraph tg("t");
	tg.add_node_type("A");
	tg.add_edge_type("e", "A", "A");
	std::size_t n = 0;
	enumerate_hosts(tg, 2, 1, {}, [&](const TypedGraph&) {
		++n;
		return true;
	});
	EXPECT_EQ(n, 19u);
}

TEST(SubruleEmbedding, BaseIntoMaximal)
{
	EffectOrientedRule eor = fixtures::ensure_acc();
	EXPECT_TRUE(check_subrule_embedding(base_embedding(eor)));
	EXPECT_TRUE(check_subrule_embedding(base_embedding(fixtures::ensure_no_acc())));
}

TEST(SubruleEmbedding, RuleIntoItself)
{
	Rule r = fixtures::ensure_acc().maximal;
	EXPECT_TRUE(check_subrule_embedding({r, r, identity(r.lhs), identity(r.interface), identity(r.rhs)}));
}

TEST(SubruleEmbedding, InterfaceNotTheIntersection)
{
	// sub keeps only c; sup preserves the account that sub creates.
	TypedGraph with_a = client();
	with_a.add_node("a", "Account");
	Rule sub{"sub", client(), client(), with_a, {}};
	Rule sup{"sup", with_a, with_a, with_a, {}};
	EXPECT_FALSE(check_subrule_embedding({sub, sup, inclusion(sub.lhs), inclusion(sub.interface), inclusion(sub.rhs)}));
}

TEST(SubruleEmbedding, InequivalentConditions)
{
	Rule sub{"sub", client(), client(), client(), {}};
	Rule sup{"sup", client(), client(), client(), {client_has_account()}};
	EXPECT_FALSE(check_subrule_embedding({sub, sup, identity(client()), identity(client()), identity(client())}));
}

TEST(ApplyRule, IdentityRuleIsANoOp)
{
	TypedGraph g = fixtures::bank_graph();
	TypedGraph l = client();
	auto rec = apply_rule(Rule{"id", l, l, l, {}}, g, fixtures::client_match("c1"));
	EXPECT_EQ(rec.output, g);
}

TEST(ApplyRule, ReusingA2AndPAddsOnlyThePortfoliosEdge)
{
	EffectOrientedRule eor = fixtures::ensure_acc();
	InducedSelection sel{{}, {{"a", "p"}, {"accounts_c_a", "portfolio_a_p"}}};
	InducedRule ir = build_induced_rule(eor, sel);
	Morphism m;
	m.nodes = {{"c", "c1"}, {"a", "a2"}, {"p", "p"}};
	m.edges = {{"accounts_c_a", "accounts_c1_a2"}, {"portfolio_a_p", "portfolio_a2_p"}};
	auto rec = apply_rule(ir.rule, fixtures::bank_graph(), m);
	TypedGraph expected = fixtures::bank_graph();
	expected.add_edge("portfolios_c_p#1", "portfolios", "c1", "p");
	EXPECT_EQ(rec.output, expected);
	EXPECT_EQ(rec.comatch.edges.at("portfolios_c_p"), "portfolios_c_p#1");
	EXPECT_TRUE(validate_graph(rec.output, fixtures::bank_types()).empty());
}

TEST(ApplyRule, DeletingA4InShared)
{
	EffectOrientedRule eor = fixtures::ensure_no_acc();
	InducedRule ir = build_induced_rule(eor, InducedSelection{{{"a"}, {"accounts_c_a"}}, {}});
	Morphism m;
	m.nodes = {{"c", "c1"}, {"a", "a4"}};
	m.edges = {{"accounts_c_a", "accounts_c1_a4"}};
	auto rec = apply_rule(ir.rule, fixtures::shared_graph(), m);
	TypedGraph expected = fixtures::shared_graph();
	expected.remove_edge("accounts_c1_a4");
	expected.remove_node("a4");
	EXPECT_EQ(rec.output, expected);
	// The track morphism is undefined exactly on the deleted elements.
	Morphism tr = rec.track();
	EXPECT_FALSE(tr.node("a4"));
	EXPECT_EQ(tr.node("a3"), "a3");
}

TEST(ApplyRule, ErrorCases)
{
	TypedGraph g = fixtures::bank_graph();
	Rule r{"r", client(), client(), client(), {client_has_account()}};
	EXPECT_THROW(apply_rule(r, g, fixtures::client_match("c1")), NacViolated);
	EXPECT_THROW(apply_rule(r, g, fixtures::client_match("a1")), NotInjective);

	TypedGraph l = client();
	l.add_node("a", "Account").add_edge("e", "accounts", "c", "a");
	Rule del{"del", l, client(), client(), {}};
	Morphism m;
	m.nodes = {{"c", "c1"}, {"a", "a3"}};
	m.edges = {{"e", "accounts_c1_a3"}};
	EXPECT_THROW(apply_rule(del, fixtures::shared_graph(), m), DanglingViolation);
}

// Both squares are pushouts: compare with a set-arithmetic reconstruction and
// re-glue the left square. Then the reversed span undoes the step.
TEST(ApplyRule, RoundTripAndInverseOnRandomInstances)
{
	Rng rng(2024);
	int applied = 0;
	for (int i = 0; i < 300 && applied < 120; ++i) {
		TypeGraph tg = random_type_graph(rng, 2, 3);
		Rule r = random_rule(rng, tg, 3);
		TypedGraph host = random_graph(rng, tg, 1, 6, 0.3);
		for (const auto& m : find_injective_extensions(r.lhs, host, {}, 2)) {
			if (!dangling_nodes(r.lhs, inclusion(r.interface), m, host).empty())
				continue;
			auto rec = apply_rule(r, host, m);
			++applied;
			ASSERT_TRUE(brute_isomorphic(rec.output, brute_dpo(r.lhs, r.interface, r.rhs, m, host)));
			ASSERT_TRUE(brute_isomorphic(pushout(rec.context, r.lhs, rec.interface_to_context, inclusion(r.interface)).object, host));
			ASSERT_TRUE(brute_isomorphic(pushout(rec.context, r.rhs, rec.interface_to_context, inclusion(r.interface)).object, rec.output));
			ASSERT_TRUE(check_morphism(rec.comatch, r.rhs, rec.output, true).empty());
			auto back = apply_rule(inverse(r), rec.output, rec.comatch);
			ASSERT_TRUE(brute_isomorphic(back.output, host));
		}
	}
	EXPECT_GE(applied, 50);
}
