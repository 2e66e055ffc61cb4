#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace verdad {

// Base for all engine-raised failures. `code()` is a stable machine-readable
// identifier used in reports; `what()` is the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// -- datamodel -------------------------------------------------------------

class UnknownUnitSymbol : public Error {
public:
    explicit UnknownUnitSymbol(const std::string& symbol)
        : Error("UnknownUnitSymbol", "unknown unit symbol: '" + symbol + "'"),
          symbol_(symbol) {}
    const std::string& symbol() const noexcept { return symbol_; }

private:
    std::string symbol_;
};

class MalformedExpression : public Error {
public:
    explicit MalformedExpression(const std::string& message)
        : Error("MalformedExpression", message) {}
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(const std::string& from, const std::string& to)
        : Error("DimensionMismatch",
                "incompatible physical dimensions: '" + from + "' vs '" + to + "'") {}
};

class EpochOutOfLeapTable : public Error {
public:
    explicit EpochOutOfLeapTable(const std::string& message)
        : Error("EpochOutOfLeapTable", message) {}
};

class InvalidCalendarDate : public Error {
public:
    explicit InvalidCalendarDate(const std::string& message)
        : Error("InvalidCalendarDate", message) {}
};

class InvalidLeapSecond : public Error {
public:
    explicit InvalidLeapSecond(const std::string& message)
        : Error("InvalidLeapSecond", message) {}
};

class InvalidValue : public Error {
public:
    explicit InvalidValue(const std::string& message)
        : Error("InvalidValue", message) {}
};

// -- ingest ----------------------------------------------------------------

class ParseError : public Error {
public:
    ParseError(std::string format, const std::string& message,
               int line = 0, int column = 0)
        : Error("ParseError", format + ": " + message +
                                  (line > 0 ? " (line " + std::to_string(line) +
                                                  (column > 0 ? ", col " + std::to_string(column) : "") + ")"
                                            : "")),
          format_(std::move(format)), line_(line), column_(column) {}

    const std::string& format() const noexcept { return format_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    std::string format_;
    int line_ = 0;
    int column_ = 0;
};

class EncodingError : public Error {
public:
    explicit EncodingError(const std::string& message)
        : Error("EncodingError", message) {}
};

class CoercionError : public Error {
public:
    explicit CoercionError(const std::string& message)
        : Error("CoercionError", message) {}
};

class NamespaceCollision : public Error {
public:
    NamespaceCollision(const std::string& key, std::string path1, std::string path2)
        : Error("NamespaceCollision",
                "namespace collision at '" + key + "': " + path1 + " vs " + path2),
          key_(key), path1_(std::move(path1)), path2_(std::move(path2)) {}

    const std::string& key() const noexcept { return key_; }
    const std::string& path1() const noexcept { return path1_; }
    const std::string& path2() const noexcept { return path2_; }

private:
    std::string key_;
    std::string path1_;
    std::string path2_;
};

class WalkError : public Error {
public:
    explicit WalkError(const std::string& message) : Error("WalkError", message) {}
};

// -- store -----------------------------------------------------------------

class CollisionWithinCommit : public Error {
public:
    explicit CollisionWithinCommit(const std::string& key)
        : Error("CollisionWithinCommit", "duplicate key in commit: '" + key + "'") {}
};

// -- template --------------------------------------------------------------

class TemplateSyntaxError : public Error {
public:
    TemplateSyntaxError(const std::string& message, int line, int column)
        : Error("TemplateSyntaxError",
                message + " (line " + std::to_string(line) + ", col " +
                    std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

class RenderError : public Error {
public:
    explicit RenderError(const std::string& message) : Error("RenderError", message) {}
};

class MissingKey : public RenderError {
public:
    explicit MissingKey(const std::string& key)
        : RenderError("missing key: '" + key + "'"), key_(key) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

// -- analysis --------------------------------------------------------------

class ManifestMissing : public Error {
public:
    explicit ManifestMissing(const std::string& bundle_path)
        : Error("ManifestMissing", "bundle has no manifest.yaml: " + bundle_path) {}
};

class ManifestInvalid : public Error {
public:
    ManifestInvalid(const std::string& field, const std::string& reason)
        : Error("ManifestInvalid", "manifest field '" + field + "': " + reason) {}
};

class DuplicateBundleName : public Error {
public:
    explicit DuplicateBundleName(const std::string& name)
        : Error("DuplicateBundleName", "two bundles declare name '" + name + "'") {}
};

class MissingInput : public Error {
public:
    explicit MissingInput(const std::string& keys)
        : Error("MissingInput", "bundle inputs unresolvable in store: " + keys) {}
};

class DependencyCycle : public Error {
public:
    explicit DependencyCycle(const std::string& names)
        : Error("DependencyCycle", "bundle dependency cycle: " + names) {}
};

class RuntimeProbeFailed : public Error {
public:
    explicit RuntimeProbeFailed(const std::string& message)
        : Error("RuntimeProbeFailed", message) {}
};

// -- cli -------------------------------------------------------------------

class TargetExists : public Error {
public:
    explicit TargetExists(const std::string& path)
        : Error("TargetExists", "target already exists (use --force): " + path) {}
};

class TargetUnresolvable : public Error {
public:
    explicit TargetUnresolvable(const std::string& key)
        : Error("TargetUnresolvable", "key does not resolve to an ingested file: '" + key + "'") {}
};

}  // namespace verdad
