#include "bcx/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bcx {

const char* input_format_name(InputFormat f) {
    switch (f) {
        case InputFormat::Circuits: return "circuits";
        case InputFormat::GraphEdges: return "graph";
        case InputFormat::Matrix: return "matrix";
    }
    return "unknown";
}

std::optional<InputFormat> sniff_format(const std::string& path) {
    auto dot = path.find_last_of('.');
    if (dot == std::string::npos) return std::nullopt;
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == "circuits" || ext == "json") return InputFormat::Circuits;
    if (ext == "graph" || ext == "edges" || ext == "edgelist") return InputFormat::GraphEdges;
    if (ext == "matrix" || ext == "mat") return InputFormat::Matrix;
    return std::nullopt;
}

InputFormat parse_format_name(const std::string& name) {
    if (name == "circuits") return InputFormat::Circuits;
    if (name == "graph") return InputFormat::GraphEdges;
    if (name == "matrix") return InputFormat::Matrix;
    throw Error(ErrorCode::BadParameters, "unknown format '" + name + "' (circuits|graph|matrix)");
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

namespace {

struct LineCol {
    std::size_t line = 1;
    std::size_t column = 1;
};

LineCol locate(const std::string& text, std::size_t byte) {
    LineCol lc;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++lc.line;
            lc.column = 1;
        } else {
            ++lc.column;
        }
    }
    return lc;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& message) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message);
}

Matroid parse_circuits_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        LineCol lc = locate(text, e.byte > 0 ? e.byte - 1 : 0);
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lc.line) + ", column " +
                                               std::to_string(lc.column) + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("ground") || !doc.contains("circuits")) {
        throw Error(ErrorCode::ParseError, "circuits document needs 'ground' and 'circuits' keys");
    }
    const Json& ground_json = doc["ground"];
    const Json& circuits_json = doc["circuits"];
    if (!ground_json.is_array() || !circuits_json.is_array()) {
        throw Error(ErrorCode::ParseError, "'ground' and 'circuits' must be arrays");
    }

    // Labels may be integers, or strings that get mapped to their position
    // in the ground list.
    std::vector<int> labels;
    bool string_labels = !ground_json.empty() && ground_json.front().is_string();
    std::vector<std::string> names;
    for (const Json& entry : ground_json) {
        if (string_labels) {
            if (!entry.is_string()) throw Error(ErrorCode::ParseError, "mixed label types in 'ground'");
            names.push_back(entry.get<std::string>());
            labels.push_back(static_cast<int>(labels.size()));
        } else {
            if (!entry.is_number_integer() || entry.get<std::int64_t>() < 0) {
                throw Error(ErrorCode::ParseError, "ground labels must be nonnegative integers or strings");
            }
            labels.push_back(entry.get<int>());
        }
    }
    auto label_of = [&](const Json& entry) -> int {
        if (string_labels) {
            if (!entry.is_string()) throw Error(ErrorCode::ParseError, "circuit entry is not a string label");
            auto it = std::find(names.begin(), names.end(), entry.get<std::string>());
            if (it == names.end()) {
                throw Error(ErrorCode::ParseError, "circuit uses unknown label '" + entry.get<std::string>() + "'");
            }
            return static_cast<int>(it - names.begin());
        }
        if (!entry.is_number_integer()) throw Error(ErrorCode::ParseError, "circuit entry is not an integer label");
        return entry.get<int>();
    };

    std::vector<std::vector<int>> circuits;
    for (const Json& circuit_json : circuits_json) {
        if (!circuit_json.is_array()) throw Error(ErrorCode::ParseError, "each circuit must be an array");
        std::vector<int> circuit;
        for (const Json& entry : circuit_json) circuit.push_back(label_of(entry));
        circuits.push_back(std::move(circuit));
    }
    return Matroid::from_circuits(GroundSet(labels), circuits);
}

Matroid parse_graph_document(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_number = 0;
    Graph g;
    int max_vertex = 0;
    while (std::getline(in, line)) {
        ++line_number;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        long long u, v, label;
        if (!(fields >> u)) continue; // blank or comment-only line
        if (!(fields >> v >> label)) parse_fail(line_number, "expected 'u v label'");
        std::string extra;
        if (fields >> extra) parse_fail(line_number, "trailing token '" + extra + "'");
        if (u < 1 || v < 1) parse_fail(line_number, "vertices are 1-based");
        if (label < 0) parse_fail(line_number, "edge labels must be nonnegative");
        g.add_edge(static_cast<int>(u) - 1, static_cast<int>(v) - 1, static_cast<int>(label));
        max_vertex = std::max({max_vertex, static_cast<int>(u), static_cast<int>(v)});
    }
    g.vertex_count = max_vertex;
    try {
        return graphic(g);
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, std::string("graph file: ") + e.what());
    }
}

Matroid parse_matrix_document(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_number = 0;
    std::optional<std::int64_t> modulus;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        ++line_number;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        std::string token;
        while (fields >> token) tokens.push_back(token);
        if (tokens.empty()) continue;
        if (tokens[0] == "mod") {
            if (rows.empty() && !modulus && tokens.size() == 2) {
                try {
                    modulus = std::stoll(tokens[1]);
                } catch (...) {
                    parse_fail(line_number, "bad modulus '" + tokens[1] + "'");
                }
                if (!is_prime(*modulus)) {
                    parse_fail(line_number, "modulus " + tokens[1] + " is not prime");
                }
                continue;
            }
            parse_fail(line_number, "'mod p' must be the single header line");
        }
        if (!rows.empty() && tokens.size() != rows.front().size()) {
            parse_fail(line_number, "row has " + std::to_string(tokens.size()) + " entries, expected " +
                                        std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(tokens));
    }
    if (rows.empty()) throw Error(ErrorCode::ParseError, "matrix file has no rows");

    const std::size_t r = rows.size(), c = rows.front().size();
    if (modulus) {
        PrimeFieldMatrix a = PrimeFieldMatrix::zero(r, c, *modulus);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) {
                try {
                    std::int64_t value = std::stoll(rows[i][j]);
                    a.at(i, j) = ((value % *modulus) + *modulus) % *modulus;
                } catch (...) {
                    throw Error(ErrorCode::ParseError, "bad prime-field entry '" + rows[i][j] + "'");
                }
            }
        }
        return linear_prime(a);
    }
    RationalMatrix a = RationalMatrix::zero(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            const std::string& tok = rows[i][j];
            try {
                auto slash = tok.find('/');
                if (slash == std::string::npos) {
                    a.at(i, j) = BigRational(BigInt(tok));
                } else {
                    BigInt num(tok.substr(0, slash));
                    BigInt den(tok.substr(slash + 1));
                    if (den == 0) throw std::runtime_error("zero denominator");
                    a.at(i, j) = BigRational(num, den);
                }
            } catch (const Error&) {
                throw;
            } catch (...) {
                throw Error(ErrorCode::ParseError, "bad rational entry '" + tok + "'");
            }
        }
    }
    return linear_rational(a);
}

} // namespace

ParsedInput parse_matroid_text(const std::string& text, InputFormat format) {
    Matroid m = [&] {
        switch (format) {
            case InputFormat::Circuits: return parse_circuits_document(text);
            case InputFormat::GraphEdges: return parse_graph_document(text);
            case InputFormat::Matrix: return parse_matrix_document(text);
        }
        throw Error(ErrorCode::BadParameters, "unhandled format");
    }();
    ParsedInput out{std::move(m), format, fnv1a_digest(text), {}};
    if (!out.matroid.is_loopless()) {
        out.warnings.push_back("input matroid has loops; broken-circuit invariants are degenerate");
    }
    return out;
}

ParsedInput load_matroid_file(const std::string& path, std::optional<InputFormat> format_override) {
    std::optional<InputFormat> format = format_override ? format_override : sniff_format(path);
    if (!format) {
        throw Error(ErrorCode::BadParameters, "cannot infer format of '" + path + "'; pass --format");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matroid_text(buffer.str(), *format);
}

Json circuits_document(const Matroid& m) {
    Json doc;
    doc["ground"] = m.ground().labels();
    Json circuits = Json::array();
    for (const auto& c : m.circuit_labels()) circuits.push_back(c);
    doc["circuits"] = std::move(circuits);
    return doc;
}

Json report_header(const std::string& command) {
    Json header;
    header["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    header["command"] = command;
    return header;
}

Json matroid_section(const Matroid& m) {
    Json section;
    section["ground"] = m.ground().labels();
    Json circuits = Json::array();
    for (const auto& c : m.circuit_labels()) circuits.push_back(c);
    section["circuits"] = std::move(circuits);
    section["rank"] = m.rank();
    section["components"] = m.components().size();
    section["loops"] = m.ground().labels_of(m.loops());
    section["coloops"] = m.ground().labels_of(m.coloops());
    return section;
}

Json invariants_section(const Matroid& m, const LinearOrder& order) {
    Json section;
    BivariatePolynomial tutte_poly = tutte(m);
    Json tutte_terms = Json::array();
    for (const auto& [key, coeff] : tutte_poly.terms()) {
        tutte_terms.push_back(Json::array({key.first, key.second, coeff}));
    }
    section["tutte"] = std::move(tutte_terms);

    if (m.is_loopless()) {
        FVector f = bc_f_vector(m, order);
        HVector h = h_vector(m);
        section["f_vector"] = f.counts;
        section["h_vector_full"] = h.full;
        section["h_vector"] = h.trimmed();
        section["h_top_index"] = h.s;
        // Both h routes are compared inside h_vector; reaching this point
        // certifies agreement.
        section["h_routes_agree"] = true;
        section["characteristic"] = characteristic_polynomial(m).coeffs();
        section["g_vector"] = g_vector(m).entries;
    }
    section["complementary_h"] = complementary_h(m).entries;
    return section;
}

Json predicate_report_json(const PredicateReport& report) {
    Json j;
    j["ok"] = report.ok;
    if (report.violating_index) j["violating_index"] = *report.violating_index;
    else j["violating_index"] = nullptr;
    j["kind"] = report.kind;
    j["detail"] = report.detail;
    return j;
}

Json predicate_section(const Matroid& m, const std::vector<std::string>& predicates) {
    Json section;
    for (const auto& name : predicates) {
        section[name] = predicate_report_json(evaluate_predicate(name, m));
    }
    return section;
}

Json lemma_outcome_json(const LemmaOutcome& outcome) {
    Json j;
    j["ok"] = outcome.ok;
    j["instances"] = outcome.instances;
    j["first_failure"] = outcome.first_failure;
    return j;
}

Json sweep_report_json(const SweepReport& report) {
    Json j;
    Json items = Json::array();
    for (const auto& item : report.items) {
        Json row;
        row["id"] = item.id;
        row["ground_size"] = item.ground_size;
        row["rank"] = item.rank;
        row["loopy"] = item.loopy;
        row["h_vector"] = item.h_trimmed;
        row["complementary_h"] = item.hbar;
        Json outcomes;
        for (const auto& [name, pr] : item.predicates) outcomes[name] = predicate_report_json(pr);
        row["predicates"] = std::move(outcomes);
        items.push_back(std::move(row));
    }
    j["items"] = std::move(items);
    j["violations"] = report.violation_counts;
    j["first_counterexample"] =
        report.first_counterexample ? Json(*report.first_counterexample) : Json(nullptr);
    return j;
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

} // namespace bcx
