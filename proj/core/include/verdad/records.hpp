#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "verdad/epoch.hpp"
#include "verdad/keypath.hpp"

namespace verdad {

enum class SourceFormat : std::uint8_t { Json, Yaml, Toml, Ron, Csv, Xlsx, Markdown };

std::string_view to_string(SourceFormat f) noexcept;

// Where an entry's bytes came from: a user-authored project file, or an
// output file produced by a named analysis bundle.
struct Origin {
    enum class Kind : std::uint8_t { UserInput, AnalysisOutput };

    Kind kind = Kind::UserInput;
    std::string bundle;  // set only for AnalysisOutput

    static Origin user_input() { return {Kind::UserInput, {}}; }
    static Origin analysis_output(std::string bundle_name) {
        return {Kind::AnalysisOutput, std::move(bundle_name)};
    }

    bool operator==(const Origin&) const = default;
};

struct ProvenanceRecord {
    std::string source_path;  // project-relative, '/'-separated
    SourceFormat format = SourceFormat::Json;
    std::string content_hash;  // sha256 hex of the source bytes
    Origin origin;
    std::int64_t load_sequence = 0;

    bool operator==(const ProvenanceRecord&) const = default;
};

enum class AnnotationKind : std::uint8_t { Comment, Question, Issue, Suggestion };

std::string_view to_string(AnnotationKind k) noexcept;
AnnotationKind annotation_kind_from_string(std::string_view text);

// A review note attached to a data point, persisted as a sidecar file and
// never touching the data file itself.
class AnnotationRecord {
public:
    AnnotationRecord(KeyPath target, AnnotationKind kind, std::string author,
                     std::string body, Epoch timestamp);

    const KeyPath& target() const noexcept { return target_; }
    AnnotationKind kind() const noexcept { return kind_; }
    const std::string& author() const noexcept { return author_; }
    const std::string& body() const noexcept { return body_; }
    const Epoch& timestamp() const noexcept { return timestamp_; }

    bool operator==(const AnnotationRecord&) const = default;

private:
    KeyPath target_;
    AnnotationKind kind_;
    std::string author_;
    std::string body_;
    Epoch timestamp_;
};

}  // namespace verdad
