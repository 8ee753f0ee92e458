#pragma once

#include "condec/cd_check.hpp"
#include "condec/extension.hpp"
#include "condec/nonblocking.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace condec::report {

/// Value of the "schema" field; bump on incompatible changes.
inline constexpr const char *kSchema = "condec-report/1";

struct InputFile {
    std::string path;
    std::string digest;  // "fnv1a64:<16 hex digits>"
};

std::string digest(std::string_view bytes);

nlohmann::json word(const Word &w);
nlohmann::json alphabet(const Alphabet &a);

nlohmann::json to_json(const CdVerdict &v);
nlohmann::json to_json(const ExtensionTrace &t);
nlohmann::json to_json(const NonblockingReport &r);
nlohmann::json to_json(const ObserverResult &r);

/// Envelope shared by every command: schema, command, inputs, holds,
/// result, timing_ms.
nlohmann::json envelope(const std::string &command, const std::vector<InputFile> &inputs,
                        bool holds, nlohmann::json result, double timing_ms);

} // namespace condec::report
