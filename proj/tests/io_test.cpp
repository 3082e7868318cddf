#include "eogt/fixtures.hpp"
#include "eogt/io.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace eogt;
using namespace eogt::testing;

namespace {

const std::filesystem::path fixture_dir = EOGT_FIXTURE_DIR;

std::string fixture(const std::string& name)
{
	return io::read_file(fixture_dir / name);
}

const char* tiny_rule = R"({
  "kind": "rule", "name": "r", "type_graph": "bank",
  "nodes": [
    {"id": "c", "type": "Client", "action": "preserve"},
    {"id": "a", "type": "Account", "action": "%NODE%"}
  ],
  "edges": [
    {"id": "e", "type": "accounts", "source": "c", "target": "a", "action": "%EDGE%"}
  ],
  "nacs": []
})";

std::string tiny(const std::string& node_action, const std::string& edge_action)
{
	std::string s = tiny_rule;
	s.replace(s.find("%NODE%"), 6, node_action);
	s.replace(s.find("%EDGE%"), 6, edge_action);
	return s;
}

} // namespace

TEST(Golden, FixturesAreByteIdentical)
{
	EXPECT_EQ(io::encode_type_graph(fixtures::bank_types()), fixture("bank.types.json"));
	EXPECT_EQ(io::encode_graph(fixtures::bank_graph()), fixture("bank.graph.json"));
	EXPECT_EQ(io::encode_graph(fixtures::shared_graph()), fixture("shared.graph.json"));
	EXPECT_EQ(io::encode_effect_rule(fixtures::ensure_acc()), fixture("ensure_acc.rule.json"));
	EXPECT_EQ(io::encode_effect_rule(fixtures::ensure_no_acc()), fixture("ensure_no_acc.rule.json"));
	EXPECT_EQ(io::encode_match(fixtures::client_match("c1")), fixture("c1.match.json"));
	EXPECT_EQ(io::encode_match(fixtures::client_match("c2")), fixture("c2.match.json"));
}

TEST(Golden, FixturesDecodeToTheBuiltInObjects)
{
	TypeGraph tg = io::decode_type_graph(fixture("bank.types.json"));
	EXPECT_EQ(io::encode_type_graph(tg), fixture("bank.types.json"));
	EXPECT_EQ(io::decode_graph(fixture("bank.graph.json"), &tg), fixtures::bank_graph());
	EXPECT_EQ(io::decode_effect_rule(fixture("ensure_acc.rule.json"), &tg), fixtures::ensure_acc());
	EXPECT_EQ(io::decode_effect_rule(fixture("ensure_no_acc.rule.json"), &tg), fixtures::ensure_no_acc());
	EXPECT_EQ(io::decode_match(fixture("c2.match.json")), fixtures::client_match("c2"));
	EXPECT_EQ(io::document_kind(fixture("shared.graph.json")), "graph");
	EXPECT_EQ(io::type_graph_reference(fixture("ensure_acc.rule.json")), "bank");
}

TEST(RoundTrip, RandomGraphsAndRules)
{
	Rng rng(71);
	for (int i = 0; i < 50; ++i) {
		TypeGraph tg = random_type_graph(rng);
		ASSERT_EQ(io::decode_type_graph(io::encode_type_graph(tg)).edge_types(), tg.edge_types());
		TypedGraph g = random_graph(rng, tg, 0, 6, 0.4);
		std::string text = io::encode_graph(g);
		TypedGraph back = io::decode_graph(text, &tg);
		ASSERT_EQ(back, g);
		ASSERT_EQ(io::encode_graph(back), text);

		RuleShape shape;
		shape.nac_probability = 0.5;
		EffectOrientedRule eor = random_effect_rule(rng, tg, shape);
		std::string rule_text = io::encode_effect_rule(eor);
		EffectOrientedRule eor_back = io::decode_effect_rule(rule_text, &tg);
		ASSERT_EQ(io::encode_effect_rule(eor_back), rule_text);
		ASSERT_EQ(eor_back.maximal.lhs, eor.maximal.lhs);
		ASSERT_EQ(eor_back.maximal.rhs, eor.maximal.rhs);
		ASSERT_EQ(eor_back.base.nacs.size(), eor.base.nacs.size());
	}
}

TEST(RoundTrip, PlainRules)
{
	Rng rng(73);
	for (int i = 0; i < 50; ++i) {
		TypeGraph tg = random_type_graph(rng);
		Rule r = random_rule(rng, tg);
		std::string text = io::encode_rule(r);
		Rule back = io::decode_rule(text, &tg);
		ASSERT_EQ(back.lhs, r.lhs);
		ASSERT_EQ(back.interface, r.interface);
		ASSERT_EQ(back.rhs, r.rhs);
		ASSERT_EQ(io::encode_rule(back), text);
	}
}

TEST(Parse, PlainRulesRejectPotentialActions)
{
	EXPECT_NO_THROW(io::decode_rule(tiny("create", "create")));
	EXPECT_THROW(io::decode_rule(tiny("create_potential", "create_potential")), ParseError);
	EXPECT_NO_THROW(io::decode_effect_rule(tiny("create_potential", "create_potential")));
}

TEST(Parse, UnknownActionTag)
{
	EXPECT_THROW(io::decode_effect_rule(tiny("maybe", "create")), ParseError);
	EXPECT_THROW(io::decode_effect_rule(tiny("create", "sometimes")), ParseError);
}

TEST(Parse, EndpointConsistency)
{
	// Allowed combinations: edge action against the tag of its non-preserved endpoint.
	EXPECT_NO_THROW(io::decode_effect_rule(tiny("delete", "delete")));
	EXPECT_NO_THROW(io::decode_effect_rule(tiny("delete_potential", "delete_potential")));
	EXPECT_NO_THROW(io::decode_effect_rule(tiny("preserve", "delete_potential")));
	EXPECT_NO_THROW(io::decode_effect_rule(tiny("preserve", "create")));
	EXPECT_THROW(io::decode_effect_rule(tiny("create", "preserve")), ParseError);
	EXPECT_THROW(io::decode_effect_rule(tiny("delete", "create")), ParseError);
	EXPECT_THROW(io::decode_effect_rule(tiny("create_potential", "create")), ParseError);
	EXPECT_THROW(io::decode_effect_rule(tiny("delete_potential", "delete")), ParseError);
	EXPECT_THROW(io::decode_effect_rule(tiny("create", "create_potential")), ParseError);
}

TEST(Parse, SyntaxErrorsCarryTheLine)
{
	try {
		io::decode_graph("{\n  \"kind\": \"graph\",\n  \"nodes\": [,]\n}");
		FAIL() << "expected ParseError";
	} catch (const ParseError& e) {
		EXPECT_EQ(e.line(), 3u);
	}
}

TEST(Parse, StructuralErrors)
{
	EXPECT_THROW(io::decode_graph(R"({"kind": "match", "nodes": {}, "edges": {}})"), ParseError);
	EXPECT_THROW(io::decode_graph(R"({"kind": "graph", "type_graph": "t", "nodes": [{"id": "x"}], "edges": []})"), ParseError);
	EXPECT_THROW(io::decode_graph(R"({"kind": "graph", "type_graph": "t",
	  "nodes": [{"id": "x", "type": "A"}, {"id": "x", "type": "A"}], "edges": []})"),
	             ParseError);
	EXPECT_THROW(io::decode_match(R"({"kind": "match", "nodes": [], "edges": {}})"), ParseError);
}

TEST(Parse, TypeGraphViolations)
{
	TypeGraph tg = fixtures::bank_types();
	EXPECT_THROW(io::decode_graph(R"({"kind": "graph", "type_graph": "bank",
	  "nodes": [{"id": "x", "type": "Dragon"}], "edges": []})", &tg),
	             ValidationError);
	EXPECT_THROW(io::decode_graph(R"({"kind": "graph", "type_graph": "bank",
	  "nodes": [{"id": "x", "type": "Client"}, {"id": "y", "type": "Client"}],
	  "edges": [{"id": "e", "type": "accounts", "source": "x", "target": "y"}]})", &tg),
	             ValidationError);
}

TEST(Trace, RoundTrip)
{
	EffectOrientedRule eor = fixtures::ensure_acc();
	TypedGraph g = fixtures::bank_graph();
	auto t = transform(eor, g, Strategy::LocallyMaximal, make_prematch(eor, g, fixtures::client_match("c2")));
	ASSERT_TRUE(t);
	io::Trace tr = io::trace_of(*t);
	EXPECT_EQ(tr.rule, "ensure_acc");
	EXPECT_EQ(tr.selection, t->selection);
	std::string text = io::encode_trace(tr);
	EXPECT_EQ(io::decode_trace(text), tr);
	EXPECT_EQ(io::document_kind(text), "trace");
}

TEST(Audit, EncodesEveryEntry)
{
	EffectOrientedRule eor = fixtures::ensure_no_acc();
	TypedGraph g = fixtures::shared_graph();
	auto t = transform(eor, g, Strategy::LocallyComplete, make_prematch(eor, g, fixtures::client_match("c1")));
	ASSERT_TRUE(t);
	auto report = audit_effect(*t);
	std::string text = io::encode_audit(report);
	EXPECT_NE(text.find("\"passed\": true"), std::string::npos);
	EXPECT_NE(text.find("\"alternative-action\""), std::string::npos);
}
