#pragma once

#include "eogt/semantics.hpp"

#include <filesystem>
#include <string>

namespace eogt::io {

// Every document is a JSON object with a "kind" field. Encoding is canonical:
// sorted keys, elements sorted by id, two-space indent, trailing LF.

std::string encode_type_graph(const TypeGraph& tg);
TypeGraph decode_type_graph(const std::string& text);

std::string encode_graph(const TypedGraph& g);
/// Validates against `tg` when given. Throws ParseError, ValidationError.
TypedGraph decode_graph(const std::string& text, const TypeGraph* tg = nullptr);

/// Integrated rule format: one element list, each element tagged preserve,
/// delete or create; NAC blocks list the elements a NAC adds to the LHS.
std::string encode_rule(const Rule& r);
/// Rejects the *_potential tags.
Rule decode_rule(const std::string& text, const TypeGraph* tg = nullptr);

/// As encode_rule with delete_potential / create_potential for the maximal
/// rule's extra elements; NACs are the base NACs.
std::string encode_effect_rule(const EffectOrientedRule& eor);
EffectOrientedRule decode_effect_rule(const std::string& text, const TypeGraph* tg = nullptr);

/// Name of the type graph a graph or rule document refers to.
std::string type_graph_reference(const std::string& text);
/// The "kind" field of a document.
std::string document_kind(const std::string& text);

std::string encode_match(const Morphism& m);
Morphism decode_match(const std::string& text);

/// The replayable part of an effect-oriented transformation.
struct Trace
{
	std::string rule;
	Strategy strategy = Strategy::LocallyComplete;
	Morphism base_match;
	InducedSelection selection;
	Morphism match;
	Morphism comatch;

	friend bool operator==(const Trace&, const Trace&) = default;
};

Trace trace_of(const EffectTransformation& t);
std::string encode_trace(const Trace& t);
Trace decode_trace(const std::string& text);

std::string encode_audit(const AuditReport& r);

/// Throws Error when the file cannot be read or written.
std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& text);

} // namespace eogt::io
