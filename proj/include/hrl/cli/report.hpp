#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "hrl/criterion.hpp"

namespace hrl::cli {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Finite doubles as JSON numbers (negative zero folded to zero);
/// non-finite values as the strings "inf", "-inf", "nan".
Json number(double v);
Json to_json(const std::complex<double>& z);
Json to_json(const AlgebraicNumber& a);
Json to_json(const Witness& w);
Json to_json(const CriticalPoint& cp);
Json to_json(const FiberSample& s);
Json to_json(const ConditionReport& r);
Json to_json(const SupportInterval& iv);

/// Echo of the pair: Q1, Q2 and the derived D and W in canonical text.
Json input_echo(const RecurrencePair& pair);

/// The full check document: schema version, input echo, the five
/// conditions, the overall status and the support when the pair passes.
Json check_report(const RecurrencePair& pair, const Verdict& verdict);

/// "[a, b] ∪ [c, d]" with shortest round-trip decimals; "(-inf, b]" style
/// for unbounded ends; "empty" for no intervals.
std::string support_text(const std::vector<SupportInterval>& support);

/// Two-space indented, key-sorted text with a trailing newline.
std::string render(const Json& doc);

}  // namespace hrl::cli
