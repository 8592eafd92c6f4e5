// JSON forms of the library's values: rationals as "p/q" strings, Laurent
// polynomials as exponent -> coefficient objects, symbols, arrangements,
// classification tables and check reports.  Objects have sorted keys, so
// dumps are canonical.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ht/classify.h"
#include "ht/laurent.h"
#include "ht/symbols.h"

namespace ht {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);
Json to_json(const Symbol& s);
Json to_json(const BarSymbol& b);
Json to_json(const Arrangement& a);
Json to_json(const CheckResult& c);
// {name: {"pass": bool, "detail": string}}.
Json checks_to_json(const std::vector<CheckResult>& checks);

// {"family", "n", "columns": [...], "cells": [{"key", "M", "N" (2D),
// "columns", "objects": [{"eta" (2D) or "name", "cuspidal", "eps", "dual",
// "dual_sign"}], "pairing": block over the cell's objects and columns}]}.
Json table_to_json(const ClassificationTable& t);
// Inverse of table_to_json; entries outside the cell blocks are zero.
// Throws std::invalid_argument on malformed input.
ClassificationTable table_from_json(const Json& j);

// Canonical text: two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace ht
