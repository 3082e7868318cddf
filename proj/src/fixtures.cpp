#include "eogt/fixtures.hpp"

namespace eogt::fixtures {

TypeGraph bank_types()
{
	TypeGraph tg("bank");
	for (const char* t : {"Bank", "Client", "Account", "Portfolio"})
		tg.add_node_type(t);
	tg.add_edge_type("owns_client", "Bank", "Client");
	tg.add_edge_type("owns_account", "Bank", "Account");
	tg.add_edge_type("owns_portfolio", "Bank", "Portfolio");
	tg.add_edge_type("accounts", "Client", "Account");
	tg.add_edge_type("portfolios", "Client", "Portfolio");
	tg.add_edge_type("portfolio", "Account", "Portfolio");
	return tg;
}

TypedGraph bank_graph()
{
	TypedGraph g("bank");
	g.add_node("b", "Bank");
	g.add_node("c1", "Client").add_node("c2", "Client");
	g.add_node("a1", "Account").add_node("a2", "Account");
	g.add_node("p", "Portfolio");
	g.add_edge("owns_client_c1", "owns_client", "b", "c1");
	g.add_edge("owns_client_c2", "owns_client", "b", "c2");
	g.add_edge("owns_account_a1", "owns_account", "b", "a1");
	g.add_edge("owns_account_a2", "owns_account", "b", "a2");
	g.add_edge("owns_portfolio_p", "owns_portfolio", "b", "p");
	g.add_edge("accounts_c1_a1", "accounts", "c1", "a1");
	g.add_edge("accounts_c1_a2", "accounts", "c1", "a2");
	g.add_edge("portfolio_a2_p", "portfolio", "a2", "p");
	return g;
}

TypedGraph shared_graph()
{
	TypedGraph g("bank");
	g.add_node("c1", "Client").add_node("c9", "Client");
	g.add_node("a3", "Account").add_node("a4", "Account");
	g.add_edge("accounts_c1_a3", "accounts", "c1", "a3");
	g.add_edge("accounts_c9_a3", "accounts", "c9", "a3");
	g.add_edge("accounts_c1_a4", "accounts", "c1", "a4");
	return g;
}

namespace {

TypedGraph client_only()
{
	TypedGraph g("bank");
	g.add_node("c", "Client");
	return g;
}

TypedGraph full_pattern()
{
	TypedGraph g = client_only();
	g.add_node("a", "Account").add_node("p", "Portfolio");
	g.add_edge("accounts_c_a", "accounts", "c", "a");
	g.add_edge("portfolios_c_p", "portfolios", "c", "p");
	g.add_edge("portfolio_a_p", "portfolio", "a", "p");
	return g;
}

} // namespace

EffectOrientedRule ensure_acc()
{
	Rule base{"ensure_acc (base)", client_only(), client_only(), client_only(), {}};
	return make_effect_rule("ensure_acc", std::move(base), client_only(), full_pattern());
}

EffectOrientedRule ensure_no_acc()
{
	Rule base{"ensure_no_acc (base)", client_only(), client_only(), client_only(), {}};
	return make_effect_rule("ensure_no_acc", std::move(base), full_pattern(), client_only());
}

Morphism client_match(const Id& host_client)
{
	Morphism m;
	m.nodes["c"] = host_client;
	return m;
}

} // namespace eogt::fixtures
