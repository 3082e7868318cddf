#pragma once

#include "eogt/effect.hpp"

namespace eogt::fixtures {

/// Bank, Client, Account, Portfolio; ownership edges from Bank to each,
/// accounts: Client -> Account, portfolios: Client -> Portfolio,
/// portfolio: Account -> Portfolio.
TypeGraph bank_types();

/// Bank b owning c1, c2, a1, a2, p; c1 has accounts a1 and a2; a2 has
/// portfolio p. c2 has nothing.
TypedGraph bank_graph();

/// c1 and c9 share account a3; a4 belongs to c1 only. No bank, no portfolio.
TypedGraph shared_graph();

/// Preserves a Client c and potentially creates an Account a, a Portfolio p
/// and the edges accounts(c,a), portfolios(c,p), portfolio(a,p).
EffectOrientedRule ensure_acc();

/// The same pattern with every non-client element a potential deletion.
EffectOrientedRule ensure_no_acc();

/// Base pre-match morphism sending the rule's client c to `host_client`.
Morphism client_match(const Id& host_client);

} // namespace eogt::fixtures
