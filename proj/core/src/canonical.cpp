#include "verdad/canonical.hpp"

#include <algorithm>
#include <charconv>

#include <nlohmann/json.hpp>

#include "verdad/errors.hpp"

namespace verdad {

std::string float_repr(double d) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d);
    return std::string(buf, ptr);
}

namespace {

void put_len_prefixed(std::string& out, std::string_view payload) {
    out += std::to_string(payload.size());
    out += ':';
    out += payload;
}

void put_count(std::string& out, std::size_t n) {
    out += std::to_string(n);
    out += ':';
}

void encode(std::string& out, const Value& v);

void encode_cell(std::string& out, const Cell& cell) {
    if (cell.is_null()) {
        out += 'z';
    } else if (cell.matches(CellType::Bool)) {
        out += 'b';
        out += cell.as_bool() ? '1' : '0';
    } else if (cell.matches(CellType::Int)) {
        out += 'i';
        put_len_prefixed(out, std::to_string(cell.as_int()));
    } else if (cell.matches(CellType::Float)) {
        out += 'f';
        put_len_prefixed(out, float_repr(cell.as_float()));
    } else if (cell.matches(CellType::Text)) {
        out += 't';
        put_len_prefixed(out, cell.as_text());
    } else if (cell.matches(CellType::Quantity)) {
        out += 'q';
        put_len_prefixed(out, float_repr(cell.as_quantity().magnitude));
        put_len_prefixed(out, cell.as_quantity().unit.label);
    } else {
        out += 'e';
        put_len_prefixed(out, std::string(to_string(cell.as_epoch().scale)));
        put_len_prefixed(out, float_repr(cell.as_epoch().days));
    }
}

void encode_provenance(std::string& out, const ProvenanceRecord& p) {
    out += 'p';
    put_len_prefixed(out, p.source_path);
    put_len_prefixed(out, std::string(to_string(p.format)));
    put_len_prefixed(out, p.content_hash);
    out += p.origin.kind == Origin::Kind::UserInput ? 'u' : 'a';
    put_len_prefixed(out, p.origin.bundle);
    put_len_prefixed(out, std::to_string(p.load_sequence));
}

void encode_annotation(std::string& out, const AnnotationRecord& a) {
    out += 'a';
    put_len_prefixed(out, a.target().str());
    put_len_prefixed(out, std::string(to_string(a.kind())));
    put_len_prefixed(out, a.author());
    put_len_prefixed(out, a.body());
    put_len_prefixed(out, std::string(to_string(a.timestamp().scale)));
    put_len_prefixed(out, float_repr(a.timestamp().days));
}

void encode(std::string& out, const Value& v) {
    switch (v.kind()) {
        case ValueKind::Null:
            out += 'z';
            return;
        case ValueKind::Bool:
            out += 'b';
            out += v.as_bool() ? '1' : '0';
            return;
        case ValueKind::Int:
            out += 'i';
            put_len_prefixed(out, std::to_string(v.as_int()));
            return;
        case ValueKind::Float:
            out += 'f';
            put_len_prefixed(out, float_repr(v.as_float()));
            return;
        case ValueKind::Text:
            out += 't';
            put_len_prefixed(out, v.as_text());
            return;
        case ValueKind::Bytes: {
            out += 'y';
            const auto& b = v.as_bytes();
            put_count(out, b.size());
            out.append(reinterpret_cast<const char*>(b.data()), b.size());
            return;
        }
        case ValueKind::Quantity:
            out += 'q';
            put_len_prefixed(out, float_repr(v.as_quantity().magnitude));
            put_len_prefixed(out, v.as_quantity().unit.label);
            return;
        case ValueKind::Epoch:
            out += 'e';
            put_len_prefixed(out, std::string(to_string(v.as_epoch().scale)));
            put_len_prefixed(out, float_repr(v.as_epoch().days));
            return;
        case ValueKind::Table: {
            const Table& t = v.as_table();
            out += 'T';
            put_count(out, t.column_count());
            for (const Column& c : t.columns()) {
                put_len_prefixed(out, c.name);
                put_len_prefixed(out, std::string(to_string(c.type)));
                out += c.nullable ? '1' : '0';
            }
            put_count(out, t.row_count());
            for (const auto& row : t.rows())
                for (const Cell& cell : row) encode_cell(out, cell);
            return;
        }
        case ValueKind::Markdown: {
            const Markdown& m = v.as_markdown();
            out += 'm';
            put_len_prefixed(out, m.body);
            if (m.front_matter) {
                out += '1';
                encode(out, *m.front_matter);
            } else {
                out += '0';
            }
            return;
        }
        case ValueKind::Provenance:
            encode_provenance(out, v.as_provenance());
            return;
        case ValueKind::Annotation:
            encode_annotation(out, v.as_annotation());
            return;
        case ValueKind::Sequence: {
            const auto& seq = v.as_sequence();
            out += 's';
            put_count(out, seq.size());
            for (const Value& e : seq) encode(out, e);
            return;
        }
        case ValueKind::Map: {
            const auto& items = v.as_map().items();
            std::vector<std::size_t> order(items.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return items[a].first < items[b].first;
            });
            out += 'M';
            put_count(out, items.size());
            for (const std::size_t i : order) {
                put_len_prefixed(out, items[i].first);
                encode(out, items[i].second);
            }
            return;
        }
    }
}

using json = nlohmann::ordered_json;

json to_json(const Value& v);

json cell_to_json(const Cell& cell) {
    if (cell.is_null()) return nullptr;
    if (cell.matches(CellType::Bool)) return cell.as_bool();
    if (cell.matches(CellType::Int)) return cell.as_int();
    if (cell.matches(CellType::Float)) return cell.as_float();
    if (cell.matches(CellType::Text)) return cell.as_text();
    if (cell.matches(CellType::Quantity)) {
        return json{{"$type", "quantity"},
                    {"magnitude", cell.as_quantity().magnitude},
                    {"unit", cell.as_quantity().unit.label}};
    }
    return json{{"$type", "epoch"},
                {"scale", to_string(cell.as_epoch().scale)},
                {"days", cell.as_epoch().days}};
}

json to_json(const Value& v) {
    switch (v.kind()) {
        case ValueKind::Null: return nullptr;
        case ValueKind::Bool: return v.as_bool();
        case ValueKind::Int: return v.as_int();
        case ValueKind::Float: return v.as_float();
        case ValueKind::Text: return v.as_text();
        case ValueKind::Bytes: {
            std::string hex;
            static const char* digits = "0123456789abcdef";
            for (const std::uint8_t b : v.as_bytes()) {
                hex += digits[b >> 4];
                hex += digits[b & 0xF];
            }
            return json{{"$type", "bytes"}, {"hex", hex}};
        }
        case ValueKind::Quantity:
            return json{{"$type", "quantity"},
                        {"magnitude", v.as_quantity().magnitude},
                        {"unit", v.as_quantity().unit.label}};
        case ValueKind::Epoch:
            return json{{"$type", "epoch"},
                        {"scale", to_string(v.as_epoch().scale)},
                        {"days", v.as_epoch().days}};
        case ValueKind::Table: {
            const Table& t = v.as_table();
            json cols = json::array();
            for (const Column& c : t.columns())
                cols.push_back(json{{"name", c.name},
                                    {"type", to_string(c.type)},
                                    {"nullable", c.nullable}});
            json rows = json::array();
            for (const auto& row : t.rows()) {
                json jrow = json::array();
                for (const Cell& cell : row) jrow.push_back(cell_to_json(cell));
                rows.push_back(std::move(jrow));
            }
            return json{{"$type", "table"}, {"columns", cols}, {"rows", rows}};
        }
        case ValueKind::Markdown: {
            json out{{"$type", "markdown"}, {"body", v.as_markdown().body}};
            if (v.as_markdown().front_matter)
                out["front_matter"] = to_json(*v.as_markdown().front_matter);
            return out;
        }
        case ValueKind::Provenance: {
            const ProvenanceRecord& p = v.as_provenance();
            json origin{{"kind", p.origin.kind == Origin::Kind::UserInput
                                     ? "user_input"
                                     : "analysis_output"}};
            if (p.origin.kind == Origin::Kind::AnalysisOutput)
                origin["bundle"] = p.origin.bundle;
            return json{{"$type", "provenance"},
                        {"source_path", p.source_path},
                        {"format", to_string(p.format)},
                        {"content_hash", p.content_hash},
                        {"origin", origin},
                        {"load_sequence", p.load_sequence}};
        }
        case ValueKind::Annotation: {
            const AnnotationRecord& a = v.as_annotation();
            return json{{"$type", "annotation"},
                        {"target", a.target().str()},
                        {"kind", to_string(a.kind())},
                        {"author", a.author()},
                        {"body", a.body()},
                        {"timestamp", format_iso8601(a.timestamp())}};
        }
        case ValueKind::Sequence: {
            json out = json::array();
            for (const Value& e : v.as_sequence()) out.push_back(to_json(e));
            return out;
        }
        case ValueKind::Map: {
            const auto& items = v.as_map().items();
            std::vector<std::size_t> order(items.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return items[a].first < items[b].first;
            });
            json out = json::object();
            for (const std::size_t i : order)
                out[items[i].first] = to_json(items[i].second);
            return out;
        }
    }
    return nullptr;
}

}  // namespace

std::string canonical_serialize(const Value& v) {
    std::string out;
    encode(out, v);
    return out;
}

std::string canonical_json_text(const Value& v, int indent) {
    return to_json(v).dump(indent);
}

}  // namespace verdad
