#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "verdad/epoch.hpp"
#include "verdad/records.hpp"
#include "verdad/unit.hpp"

namespace verdad {

class Value;

// The 14 variants of the generic data type. Everything loaded from any
// source format normalizes to this.
enum class ValueKind : std::uint8_t {
    Null,
    Bool,
    Int,
    Float,
    Text,
    Bytes,
    Quantity,
    Epoch,
    Table,
    Markdown,
    Provenance,
    Annotation,
    Sequence,
    Map,
};

std::string_view to_string(ValueKind kind) noexcept;

// -- tables ------------------------------------------------------------------

enum class CellType : std::uint8_t { Int, Float, Text, Bool, Quantity, Epoch };

std::string_view to_string(CellType t) noexcept;

// One table cell; monostate is the null cell.
class Cell {
public:
    Cell() = default;
    Cell(bool b) : data_(b) {}
    Cell(std::int64_t i) : data_(i) {}
    Cell(double f);
    Cell(std::string text) : data_(std::move(text)) {}
    Cell(Quantity q) : data_(std::move(q)) {}
    Cell(Epoch e) : data_(e) {}

    bool is_null() const noexcept { return data_.index() == 0; }
    bool matches(CellType t) const noexcept;

    bool as_bool() const { return std::get<bool>(data_); }
    std::int64_t as_int() const { return std::get<std::int64_t>(data_); }
    double as_float() const { return std::get<double>(data_); }
    const std::string& as_text() const { return std::get<std::string>(data_); }
    const Quantity& as_quantity() const { return std::get<Quantity>(data_); }
    const Epoch& as_epoch() const { return std::get<Epoch>(data_); }

    bool operator==(const Cell&) const = default;

private:
    std::variant<std::monostate, bool, std::int64_t, double, std::string,
                 Quantity, Epoch>
        data_;
};

struct Column {
    std::string name;
    CellType type = CellType::Text;
    bool nullable = false;

    bool operator==(const Column&) const = default;
};

// Rectangular, column-typed table. Construction validates the shape: every
// row matches the column count, every non-null cell matches its column type,
// and column names are unique and non-empty.
class Table {
public:
    Table(std::vector<Column> columns, std::vector<std::vector<Cell>> rows);

    const std::vector<Column>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }
    std::size_t column_count() const noexcept { return columns_.size(); }
    std::size_t row_count() const noexcept { return rows_.size(); }

    // Index of a column by name, or -1.
    int column_index(std::string_view name) const noexcept;

    bool operator==(const Table&) const = default;

private:
    std::vector<Column> columns_;
    std::vector<std::vector<Cell>> rows_;
};

// -- markdown ----------------------------------------------------------------

// Markdown body plus parsed YAML front matter (a Map value when present).
struct Markdown {
    std::string body;
    std::shared_ptr<const Value> front_matter;  // null when absent; always a Map

    bool operator==(const Markdown& o) const;
};

// -- value -------------------------------------------------------------------

// Insertion-ordered string-keyed map. Keys are unique, non-empty, and free
// of the '.' namespace separator.
class MapValue {
public:
    MapValue() = default;
    explicit MapValue(std::vector<std::pair<std::string, Value>> items);

    const std::vector<std::pair<std::string, Value>>& items() const noexcept {
        return items_;
    }
    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }

    const Value* find(std::string_view key) const noexcept;

    bool operator==(const MapValue& o) const;

private:
    std::vector<std::pair<std::string, Value>> items_;
};

// The generic, immutable data value. Copies share the underlying payload;
// all mutation happens by constructing new values.
class Value {
public:
    Value() : Value(nullptr) {}  // Null

    static Value null();
    static Value boolean(bool b);
    static Value integer(std::int64_t i);
    static Value real(double d);  // throws InvalidValue on NaN/Inf
    static Value text(std::string s);
    static Value bytes(std::vector<std::uint8_t> b);
    static Value quantity(Quantity q);
    static Value epoch(Epoch e);
    static Value table(Table t);
    static Value markdown(Markdown m);
    static Value provenance(ProvenanceRecord p);
    static Value annotation(AnnotationRecord a);
    static Value sequence(std::vector<Value> elems);
    static Value map(std::vector<std::pair<std::string, Value>> items);
    static Value map(MapValue m);

    ValueKind kind() const noexcept;
    bool is_null() const noexcept { return kind() == ValueKind::Null; }

    bool as_bool() const;
    std::int64_t as_int() const;
    double as_float() const;
    const std::string& as_text() const;
    const std::vector<std::uint8_t>& as_bytes() const;
    const Quantity& as_quantity() const;
    const Epoch& as_epoch() const;
    const Table& as_table() const;
    const Markdown& as_markdown() const;
    const ProvenanceRecord& as_provenance() const;
    const AnnotationRecord& as_annotation() const;
    const std::vector<Value>& as_sequence() const;
    const MapValue& as_map() const;

    // Structural equality across the whole tree.
    bool operator==(const Value& o) const;
    bool operator!=(const Value& o) const { return !(*this == o); }

private:
    struct NullTag {
        bool operator==(const NullTag&) const = default;
    };
    using Data = std::variant<NullTag, bool, std::int64_t, double, std::string,
                              std::vector<std::uint8_t>, Quantity, Epoch, Table,
                              Markdown, ProvenanceRecord, AnnotationRecord,
                              std::vector<Value>, MapValue>;

    explicit Value(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    static Value wrap(Data&& data);

    const Data& data() const noexcept;

    std::shared_ptr<const Data> data_;
};

}  // namespace verdad
