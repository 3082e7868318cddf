#include "eogt/error.hpp"

#include <sstream>

namespace eogt {

std::string to_string(const Diagnostic& d)
{
	std::string out = d.code;
	if (!d.element.empty())
		out += " [" + d.element + "]";
	if (!d.message.empty())
		out += ": " + d.message;
	return out;
}

std::string to_string(const Diagnostics& ds)
{
	std::ostringstream os;
	for (std::size_t i = 0; i < ds.size(); ++i) {
		if (i != 0)
			os << "; ";
		os << to_string(ds[i]);
	}
	return os.str();
}

ParseError::ParseError(const std::string& what, std::size_t line, std::string context)
	: Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what)
	, line_(line)
	, context_(std::move(context))
{
}

ValidationError::ValidationError(Diagnostics diagnostics)
	: Error("validation failed: " + to_string(diagnostics))
	, diagnostics_(std::move(diagnostics))
{
}

ValidationError::ValidationError(const std::string& what, Diagnostics diagnostics)
	: Error(what + ": " + to_string(diagnostics))
	, diagnostics_(std::move(diagnostics))
{
}

DanglingViolation::DanglingViolation(std::string host_node, std::string rule_node, std::string edge)
	: Error("dangling condition violated at host node " + host_node + " (rule node " + rule_node + ", edge " + edge + ")")
	, host_node_(std::move(host_node))
	, rule_node_(std::move(rule_node))
	, edge_(std::move(edge))
{
}

InvalidSelection::InvalidSelection(Diagnostics diagnostics)
	: Error("invalid selection: " + to_string(diagnostics))
	, diagnostics_(std::move(diagnostics))
{
}

AuditFailure::AuditFailure(std::string element, const std::string& what)
	: Error("audit failure at " + element + ": " + what)
	, element_(std::move(element))
{
}

} // namespace eogt
