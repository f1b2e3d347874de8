#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace happy {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad file, invalid graph, coloring not total).
class InputError : public Error {
public:
	using Error::Error;
};

/// Line-numbered error from the instance/coloring/decomposition parsers.
class ParseError : public InputError {
public:
	ParseError(int line, const std::string &what)
		: InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
	int line() const { return line_; }

private:
	int line_;
};

/// A full coloring disagrees with the precoloring at `vertex` (0-based).
class ExtensionViolation : public InputError {
public:
	explicit ExtensionViolation(int vertex)
		: InputError("coloring disagrees with precoloring at vertex " + std::to_string(vertex + 1)),
		  vertex_(vertex) {}
	int vertex() const { return vertex_; }

private:
	int vertex_;
};

/// Exhaustive enumeration would exceed the configured budget.
class BudgetExceeded : public Error {
public:
	BudgetExceeded(const std::string &what, std::uint64_t required)
		: Error(what), required_(required) {}
	std::uint64_t required() const { return required_; }

private:
	std::uint64_t required_;
};

/// No certificate (vertex cover, clique modulator) exists within the requested bound.
class BoundExceeded : public Error {
public:
	BoundExceeded(const std::string &what, int bound) : Error(what), bound_(bound) {}
	int bound() const { return bound_; }

private:
	int bound_;
};

/// Produced instance would be larger than the allowed size.
class SizeBudgetExceeded : public BudgetExceeded {
public:
	using BudgetExceeded::BudgetExceeded;
};

class InvalidDecomposition : public Error {
public:
	using Error::Error;
};

class SaturationImpossible : public Error {
public:
	using Error::Error;
};

/// The input graph contains an induced P4; `witness` is the path in order.
class NotCograph : public Error {
public:
	explicit NotCograph(std::vector<int> witness);
	const std::vector<int> &witness() const { return witness_; }

private:
	std::vector<int> witness_;
};

class CotreeMismatch : public Error {
public:
	using Error::Error;
};

/// Solver dispatch could not find a usable algorithm; `reasons` lists each rejection.
class NoApplicableAlgorithm : public Error {
public:
	explicit NoApplicableAlgorithm(std::vector<std::string> reasons);
	const std::vector<std::string> &reasons() const { return reasons_; }

private:
	std::vector<std::string> reasons_;
};

} // namespace happy
