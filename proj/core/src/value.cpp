#include "verdad/value.hpp"

#include <cmath>
#include <unordered_set>

#include "verdad/errors.hpp"

namespace verdad {

std::string_view to_string(ValueKind kind) noexcept {
    switch (kind) {
        case ValueKind::Null: return "null";
        case ValueKind::Bool: return "bool";
        case ValueKind::Int: return "int";
        case ValueKind::Float: return "float";
        case ValueKind::Text: return "text";
        case ValueKind::Bytes: return "bytes";
        case ValueKind::Quantity: return "quantity";
        case ValueKind::Epoch: return "epoch";
        case ValueKind::Table: return "table";
        case ValueKind::Markdown: return "markdown";
        case ValueKind::Provenance: return "provenance";
        case ValueKind::Annotation: return "annotation";
        case ValueKind::Sequence: return "sequence";
        case ValueKind::Map: return "map";
    }
    return "?";
}

std::string_view to_string(CellType t) noexcept {
    switch (t) {
        case CellType::Int: return "int";
        case CellType::Float: return "float";
        case CellType::Text: return "text";
        case CellType::Bool: return "bool";
        case CellType::Quantity: return "quantity";
        case CellType::Epoch: return "epoch";
    }
    return "?";
}

std::string_view to_string(SourceFormat f) noexcept {
    switch (f) {
        case SourceFormat::Json: return "json";
        case SourceFormat::Yaml: return "yaml";
        case SourceFormat::Toml: return "toml";
        case SourceFormat::Ron: return "ron";
        case SourceFormat::Csv: return "csv";
        case SourceFormat::Xlsx: return "xlsx";
        case SourceFormat::Markdown: return "markdown";
    }
    return "?";
}

std::string_view to_string(AnnotationKind k) noexcept {
    switch (k) {
        case AnnotationKind::Comment: return "comment";
        case AnnotationKind::Question: return "question";
        case AnnotationKind::Issue: return "issue";
        case AnnotationKind::Suggestion: return "suggestion";
    }
    return "?";
}

AnnotationKind annotation_kind_from_string(std::string_view text) {
    if (text == "comment") return AnnotationKind::Comment;
    if (text == "question") return AnnotationKind::Question;
    if (text == "issue") return AnnotationKind::Issue;
    if (text == "suggestion") return AnnotationKind::Suggestion;
    throw InvalidValue("unknown annotation kind: '" + std::string(text) + "'");
}

AnnotationRecord::AnnotationRecord(KeyPath target, AnnotationKind kind,
                                   std::string author, std::string body,
                                   Epoch timestamp)
    : target_(std::move(target)),
      kind_(kind),
      author_(std::move(author)),
      body_(std::move(body)),
      timestamp_(timestamp) {
    if (body_.empty()) throw InvalidValue("annotation body must be non-empty");
    if (timestamp_.scale != TimeScale::UTC)
        throw InvalidValue("annotation timestamps are UTC");
}

// -- cells / tables ----------------------------------------------------------

Cell::Cell(double f) : data_(f) {
    if (!std::isfinite(f)) throw InvalidValue("table cell float must be finite");
}

bool Cell::matches(CellType t) const noexcept {
    switch (t) {
        case CellType::Int: return std::holds_alternative<std::int64_t>(data_);
        case CellType::Float: return std::holds_alternative<double>(data_);
        case CellType::Text: return std::holds_alternative<std::string>(data_);
        case CellType::Bool: return std::holds_alternative<bool>(data_);
        case CellType::Quantity: return std::holds_alternative<Quantity>(data_);
        case CellType::Epoch: return std::holds_alternative<Epoch>(data_);
    }
    return false;
}

Table::Table(std::vector<Column> columns, std::vector<std::vector<Cell>> rows)
    : columns_(std::move(columns)), rows_(std::move(rows)) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i].name.empty())
            throw InvalidValue("table column " + std::to_string(i) + " has no name");
        for (std::size_t j = i + 1; j < columns_.size(); ++j)
            if (columns_[i].name == columns_[j].name)
                throw InvalidValue("duplicate table column name '" +
                                   columns_[i].name + "'");
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].size() != columns_.size())
            throw InvalidValue("table row " + std::to_string(r) + " has " +
                               std::to_string(rows_[r].size()) + " cells, expected " +
                               std::to_string(columns_.size()));
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            const Cell& cell = rows_[r][c];
            if (cell.is_null()) {
                if (!columns_[c].nullable)
                    throw InvalidValue("null cell in non-nullable column '" +
                                       columns_[c].name + "'");
            } else if (!cell.matches(columns_[c].type)) {
                throw InvalidValue("cell type mismatch in column '" +
                                   columns_[c].name + "' row " + std::to_string(r));
            }
        }
    }
}

int Table::column_index(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < columns_.size(); ++i)
        if (columns_[i].name == name) return static_cast<int>(i);
    return -1;
}

bool Markdown::operator==(const Markdown& o) const {
    if (body != o.body) return false;
    if (!front_matter != !o.front_matter) return false;
    return !front_matter || *front_matter == *o.front_matter;
}

// -- map ---------------------------------------------------------------------

MapValue::MapValue(std::vector<std::pair<std::string, Value>> items)
    : items_(std::move(items)) {
    std::unordered_set<std::string_view> seen;
    seen.reserve(items_.size());
    for (const auto& [key, value] : items_) {
        if (key.empty()) throw InvalidValue("map key must be non-empty");
        if (key.find('.') != std::string::npos)
            throw InvalidValue("map key '" + key +
                               "' contains the reserved '.' separator");
        if (!seen.insert(key).second)
            throw InvalidValue("duplicate map key '" + key + "'");
    }
}

const Value* MapValue::find(std::string_view key) const noexcept {
    for (const auto& [k, v] : items_)
        if (k == key) return &v;
    return nullptr;
}

bool MapValue::operator==(const MapValue& o) const { return items_ == o.items_; }

// -- value -------------------------------------------------------------------

Value Value::wrap(Data&& data) {
    return Value(std::make_shared<const Data>(std::move(data)));
}

const Value::Data& Value::data() const noexcept {
    static const Data null_data = NullTag{};
    return data_ ? *data_ : null_data;
}

Value Value::null() { return Value(); }
Value Value::boolean(bool b) { return wrap(Data(b)); }
Value Value::integer(std::int64_t i) { return wrap(Data(i)); }

Value Value::real(double d) {
    if (!std::isfinite(d))
        throw InvalidValue("float values must be finite (no NaN/Inf)");
    return wrap(Data(d));
}

Value Value::text(std::string s) { return wrap(Data(std::move(s))); }
Value Value::bytes(std::vector<std::uint8_t> b) { return wrap(Data(std::move(b))); }
Value Value::quantity(Quantity q) { return wrap(Data(std::move(q))); }
Value Value::epoch(Epoch e) { return wrap(Data(e)); }
Value Value::table(Table t) { return wrap(Data(std::move(t))); }

Value Value::markdown(Markdown m) {
    if (m.front_matter && m.front_matter->kind() != ValueKind::Map)
        throw InvalidValue("markdown front matter must be a map");
    return wrap(Data(std::move(m)));
}

Value Value::provenance(ProvenanceRecord p) { return wrap(Data(std::move(p))); }
Value Value::annotation(AnnotationRecord a) { return wrap(Data(std::move(a))); }
Value Value::sequence(std::vector<Value> elems) { return wrap(Data(std::move(elems))); }

Value Value::map(std::vector<std::pair<std::string, Value>> items) {
    return wrap(Data(MapValue(std::move(items))));
}

Value Value::map(MapValue m) { return wrap(Data(std::move(m))); }

ValueKind Value::kind() const noexcept {
    return static_cast<ValueKind>(data().index());
}

namespace {

[[noreturn]] void kind_error(ValueKind have, const char* want) {
    throw InvalidValue(std::string("value is ") + std::string(to_string(have)) +
                       ", not " + want);
}

}  // namespace

bool Value::as_bool() const {
    if (const auto* p = std::get_if<bool>(&data())) return *p;
    kind_error(kind(), "bool");
}

std::int64_t Value::as_int() const {
    if (const auto* p = std::get_if<std::int64_t>(&data())) return *p;
    kind_error(kind(), "int");
}

double Value::as_float() const {
    if (const auto* p = std::get_if<double>(&data())) return *p;
    kind_error(kind(), "float");
}

const std::string& Value::as_text() const {
    if (const auto* p = std::get_if<std::string>(&data())) return *p;
    kind_error(kind(), "text");
}

const std::vector<std::uint8_t>& Value::as_bytes() const {
    if (const auto* p = std::get_if<std::vector<std::uint8_t>>(&data())) return *p;
    kind_error(kind(), "bytes");
}

const Quantity& Value::as_quantity() const {
    if (const auto* p = std::get_if<Quantity>(&data())) return *p;
    kind_error(kind(), "quantity");
}

const Epoch& Value::as_epoch() const {
    if (const auto* p = std::get_if<Epoch>(&data())) return *p;
    kind_error(kind(), "epoch");
}

const Table& Value::as_table() const {
    if (const auto* p = std::get_if<Table>(&data())) return *p;
    kind_error(kind(), "table");
}

const Markdown& Value::as_markdown() const {
    if (const auto* p = std::get_if<Markdown>(&data())) return *p;
    kind_error(kind(), "markdown");
}

const ProvenanceRecord& Value::as_provenance() const {
    if (const auto* p = std::get_if<ProvenanceRecord>(&data())) return *p;
    kind_error(kind(), "provenance");
}

const AnnotationRecord& Value::as_annotation() const {
    if (const auto* p = std::get_if<AnnotationRecord>(&data())) return *p;
    kind_error(kind(), "annotation");
}

const std::vector<Value>& Value::as_sequence() const {
    if (const auto* p = std::get_if<std::vector<Value>>(&data())) return *p;
    kind_error(kind(), "sequence");
}

const MapValue& Value::as_map() const {
    if (const auto* p = std::get_if<MapValue>(&data())) return *p;
    kind_error(kind(), "map");
}

bool Value::operator==(const Value& o) const {
    if (data_ == o.data_) return true;
    return data() == o.data();
}

}  // namespace verdad
