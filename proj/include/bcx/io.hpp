// File ingestion (circuits documents, graph edge lists, matrices) and
// structured report assembly for the CLI.
#ifndef BCX_IO_HPP
#define BCX_IO_HPP

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "bcx/constructions.hpp"
#include "bcx/flawless.hpp"
#include "bcx/matroid.hpp"

namespace bcx {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "bcx";
inline constexpr const char* kToolVersion = "0.1.0";

enum class InputFormat { Circuits, GraphEdges, Matrix };

const char* input_format_name(InputFormat f);
// Sniffs by extension: .circuits/.json, .graph/.edges, .matrix/.mat.
std::optional<InputFormat> sniff_format(const std::string& path);
InputFormat parse_format_name(const std::string& name);

struct ParsedInput {
    Matroid matroid;
    InputFormat format;
    std::string digest; // FNV-1a 64 of the raw bytes, hex
    std::vector<std::string> warnings;
};

// Reads and parses a matroid file; throws Error(ParseError) with
// line/column diagnostics on malformed input.
ParsedInput load_matroid_file(const std::string& path, std::optional<InputFormat> format_override);
// Same, from an in-memory buffer (used by tests and stdin).
ParsedInput parse_matroid_text(const std::string& text, InputFormat format);

std::string fnv1a_digest(const std::string& bytes);

// A circuits document describing the matroid; re-parses to an equal value.
Json circuits_document(const Matroid& m);

// Report sections shared by the CLI commands. Everything except the
// "timing" object is deterministic for fixed inputs and flags.
Json report_header(const std::string& command);
Json matroid_section(const Matroid& m);
Json invariants_section(const Matroid& m, const LinearOrder& order);
Json predicate_section(const Matroid& m, const std::vector<std::string>& predicates);
Json lemma_outcome_json(const LemmaOutcome& outcome);
Json predicate_report_json(const PredicateReport& report);
Json sweep_report_json(const SweepReport& report);

std::string render_report(const Json& report);

} // namespace bcx

#endif
