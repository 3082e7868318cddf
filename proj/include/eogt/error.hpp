#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace eogt {

/// A single finding of a validation pass. `element` names the offending
/// node/edge/type id (empty when the finding is global).
struct Diagnostic
{
	std::string code;
	std::string element;
	std::string message;

	friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

std::string to_string(const Diagnostic& d);
std::string to_string(const Diagnostics& ds);

class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

class ParseError : public Error
{
public:
	ParseError(const std::string& what, std::size_t line = 0, std::string context = {});

	std::size_t line() const noexcept { return line_; }
	const std::string& context() const noexcept { return context_; }

private:
	std::size_t line_;
	std::string context_;
};

class ValidationError : public Error
{
public:
	explicit ValidationError(Diagnostics diagnostics);
	ValidationError(const std::string& what, Diagnostics diagnostics);

	const Diagnostics& diagnostics() const noexcept { return diagnostics_; }

private:
	Diagnostics diagnostics_;
};

/// The dangling condition failed: deleting `host_node` would leave an
/// incident host edge behind.
class DanglingViolation : public Error
{
public:
	DanglingViolation(std::string host_node, std::string rule_node, std::string edge);

	const std::string& host_node() const noexcept { return host_node_; }
	const std::string& rule_node() const noexcept { return rule_node_; }
	const std::string& dangling_edge() const noexcept { return edge_; }

private:
	std::string host_node_;
	std::string rule_node_;
	std::string edge_;
};

class NotInjective : public Error
{
public:
	using Error::Error;
};

class NacViolated : public Error
{
public:
	using Error::Error;
};

class NonCommuting : public Error
{
public:
	using Error::Error;
};

class InvalidSelection : public Error
{
public:
	explicit InvalidSelection(Diagnostics diagnostics);
	const Diagnostics& diagnostics() const noexcept { return diagnostics_; }

private:
	Diagnostics diagnostics_;
};

class InvalidPreMatch : public Error
{
public:
	using Error::Error;
};

class StrategyArgumentMismatch : public Error
{
public:
	using Error::Error;
};

class AuditFailure : public Error
{
public:
	AuditFailure(std::string element, const std::string& what);
	const std::string& element() const noexcept { return element_; }

private:
	std::string element_;
};

} // namespace eogt
