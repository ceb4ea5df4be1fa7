#pragma once

#include <json.hpp>

#include "fnet/extension.hpp"
#include "fnet/pointed.hpp"

namespace fnet {

/// All reports render to ordered JSON: insertion-ordered keys and no floats,
/// so parse + re-dump is byte-identical.
using Json = nlohmann::ordered_json;

Json to_json(const BinaryCode& c);
Json to_json(const DyadicRootTwo& v);
Json spin_json(const SixteenthWeight& w);
Json to_json(const AlphaClass& cls);
Json to_json(const BetaReport& r);
Json to_json(const ExtensionReport& r);
Json to_json(const LyDiagnostics& d);
Json to_json(const StructureDiagnostics& d);
Json to_json(const DeltaTable& t);
Json to_json(const std::vector<ChainStep>& chain);
Json to_json(const Certificate& cert);

std::string to_string(const BigRat& q);

/// Reads the interchange form {"length": n, "generators": ["0101...", ...]}.
BinaryCode code_from_json(const Json& j);

}  // namespace fnet
