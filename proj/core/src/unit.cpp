#include "verdad/unit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "verdad/errors.hpp"

namespace verdad {

namespace {

bool fits_double_exactly(const mpz_class& z) {
    // 2^53: integers up to here convert to double without rounding.
    static const mpz_class limit = mpz_class(1) << 53;
    return cmp(abs(z), limit) <= 0;
}

double mpq_to_double(const mpq_class& q) {
    if (fits_double_exactly(q.get_num()) && fits_double_exactly(q.get_den()))
        return q.get_num().get_d() / q.get_den().get_d();
    return q.get_d();
}

}  // namespace

ExactScale ExactScale::operator*(const ExactScale& o) const {
    return ExactScale(rational_ * o.rational_, pi_exp_ + o.pi_exp_,
                      residual_ * o.residual_);
}

ExactScale ExactScale::operator/(const ExactScale& o) const {
    return ExactScale(rational_ / o.rational_, pi_exp_ - o.pi_exp_,
                      residual_ / o.residual_);
}

ExactScale ExactScale::pow(const Rational& e) const {
    if (e.is_zero()) return ExactScale();
    const bool invert = e.num() < 0;
    const auto n = static_cast<unsigned long>(invert ? -e.num() : e.num());

    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), rational_.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), rational_.get_den().get_mpz_t(), n);
    mpq_class powed(num, den);
    powed.canonicalize();

    double residual = std::pow(residual_, e.as_double());
    if (e.den() != 1) {
        // Take the exact integral root when one exists; otherwise fold the
        // whole rational part into the numeric residual.
        const auto root = static_cast<unsigned long>(e.den());
        mpz_class rnum, rden;
        const int exact_num =
            mpz_root(rnum.get_mpz_t(), powed.get_num().get_mpz_t(), root);
        const int exact_den =
            mpz_root(rden.get_mpz_t(), powed.get_den().get_mpz_t(), root);
        if (exact_num && exact_den) {
            powed = mpq_class(rnum, rden);
            powed.canonicalize();
            if (invert) powed = 1 / powed;
        } else {
            const double r = std::pow(mpq_to_double(powed),
                                      (invert ? -1.0 : 1.0) / static_cast<double>(root));
            residual *= r;
            powed = 1;
        }
    } else if (invert) {
        powed = 1 / powed;
    }
    return ExactScale(powed, pi_exp_ * e, residual);
}

double ExactScale::as_double() const {
    double v = mpq_to_double(rational_) * residual_;
    if (!pi_exp_.is_zero())
        v *= std::pow(std::numbers::pi, pi_exp_.as_double());
    return v;
}

double ExactScale::ratio(const ExactScale& a, const ExactScale& b) {
    if (a.pi_exp_ == b.pi_exp_ && a.residual_ == b.residual_) {
        mpq_class r = a.rational_ / b.rational_;
        r.canonicalize();
        return mpq_to_double(r);
    }
    return a.as_double() / b.as_double();
}

bool UnitExpr::is_dimensionless() const noexcept {
    return std::all_of(dims.begin(), dims.end(),
                       [](const Rational& r) { return r.is_zero(); });
}

Quantity::Quantity(double mag, UnitExpr u) : magnitude(mag), unit(std::move(u)) {
    if (!std::isfinite(magnitude))
        throw InvalidValue("quantity magnitude must be finite");
}

// ---------------------------------------------------------------------------
// Symbol table
// ---------------------------------------------------------------------------

namespace {

struct Prefix {
    const char* text;
    int pow10;
};

// Longest first so that "da" is tried before "d".
constexpr Prefix kPrefixes[] = {
    {"da", 1},  {"Q", 30},  {"R", 27},  {"Y", 24},  {"Z", 21},  {"E", 18},
    {"P", 15},  {"T", 12},  {"G", 9},   {"M", 6},   {"k", 3},   {"h", 2},
    {"d", -1},  {"c", -2},  {"m", -3},  {"u", -6},  {"n", -9},  {"p", -12},
    {"f", -15}, {"a", -18}, {"z", -21}, {"y", -24}, {"r", -27}, {"q", -30},
};

ExactScale pow10_scale(int e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? ExactScale(mpq_class(p)) : ExactScale(mpq_class(1, p));
}

Rational parse_rational_field(std::string_view text, const std::string& context) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(std::stoll(std::string(text)));
        return Rational(std::stoll(std::string(text.substr(0, slash))),
                        std::stoll(std::string(text.substr(slash + 1))));
    } catch (const std::exception&) {
        throw InvalidValue("bad rational '" + std::string(text) + "' in " + context);
    }
}

ExactScale parse_scale_field(std::string_view text, const std::string& context) {
    Rational pi_exp(0);
    if (text.substr(0, 2) == "pi") {
        text.remove_prefix(2);
        pi_exp = Rational(1);
        if (!text.empty() && text.front() == '^') {
            text.remove_prefix(1);
            const auto star = text.find('*');
            pi_exp = parse_rational_field(text.substr(0, star), context);
            text = star == std::string_view::npos ? std::string_view{}
                                                  : text.substr(star);
        }
        if (!text.empty() && text.front() == '*') text.remove_prefix(1);
        if (text.empty()) return ExactScale(mpq_class(1), pi_exp);
    }
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0 || q <= 0)
        throw InvalidValue("bad scale '" + std::string(text) + "' in " + context);
    q.canonicalize();
    return ExactScale(q, pi_exp);
}

}  // namespace

std::vector<UnitSymbol> parse_unit_table(std::string_view text) {
    std::vector<UnitSymbol> out;
    std::size_t pos = 0;
    int lineno = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::istringstream iss{std::string(line)};
        std::string symbol, dims_field, scale_field, flag;
        if (!(iss >> symbol)) continue;
        const std::string ctx = "unit table line " + std::to_string(lineno);
        if (!(iss >> dims_field >> scale_field))
            throw InvalidValue(ctx + ": expected symbol, dims, scale");

        UnitSymbol entry;
        entry.symbol = symbol;
        std::size_t start = 0;
        for (std::size_t d = 0; d < kDimCount; ++d) {
            auto comma = dims_field.find(',', start);
            if (d + 1 == kDimCount) comma = dims_field.size();
            if (comma == std::string::npos)
                throw InvalidValue(ctx + ": dims vector needs 8 components");
            entry.dims[d] = parse_rational_field(
                std::string_view(dims_field).substr(start, comma - start), ctx);
            start = comma + 1;
        }
        entry.scale = parse_scale_field(scale_field, ctx);
        if (iss >> flag) {
            if (flag != "prefixable")
                throw InvalidValue(ctx + ": unknown flag '" + flag + "'");
            entry.prefixable = true;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

namespace builtin_data {
extern const char* kUnitsTable;
extern const char* kLeapSeconds;
}  // namespace builtin_data

const std::vector<UnitSymbol>& builtin_unit_table() {
    static const std::vector<UnitSymbol> table =
        parse_unit_table(builtin_data::kUnitsTable);
    return table;
}

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

namespace {

const std::unordered_map<std::string, const UnitSymbol*>& symbol_index() {
    static const auto* index = [] {
        auto* m = new std::unordered_map<std::string, const UnitSymbol*>;
        for (const auto& s : builtin_unit_table()) m->emplace(s.symbol, &s);
        return m;
    }();
    return *index;
}

// A resolved symbol occurrence: table entry plus any SI prefix power.
struct ResolvedSymbol {
    const UnitSymbol* entry;
    int prefix_pow10;
};

ResolvedSymbol resolve_symbol(const std::string& name) {
    const auto& index = symbol_index();
    if (const auto it = index.find(name); it != index.end())
        return {it->second, 0};
    for (const auto& p : kPrefixes) {
        const std::size_t n = std::char_traits<char>::length(p.text);
        if (name.size() > n && name.compare(0, n, p.text) == 0) {
            if (const auto it = index.find(name.substr(n));
                it != index.end() && it->second->prefixable)
                return {it->second, p.pow10};
        }
    }
    throw UnknownUnitSymbol(name);
}

struct Factor {
    std::string symbol;  // as written, prefix included
    Rational exponent;
    DimVector dims;
    ExactScale scale;  // for exponent 1
};

class UnitParser {
public:
    explicit UnitParser(std::string_view text) : text_(text) {}

    // expr := term (('*'|'/') term)*
    void parse() {
        skip_ws();
        if (at_end()) throw MalformedExpression("empty unit expression");
        parse_term(false);
        skip_ws();
        while (!at_end()) {
            const char op = peek();
            if (op != '*' && op != '/')
                throw MalformedExpression(err_here("expected '*' or '/'"));
            ++pos_;
            skip_ws();
            parse_term(op == '/');
            skip_ws();
        }
    }

    std::map<std::string, Rational>& symbol_exponents() { return symbol_exp_; }
    const mpq_class& literal() const { return literal_; }

private:
    // term := factor ['^' exponent]
    void parse_term(bool divide) {
        if (at_end()) throw MalformedExpression(err_here("expected a unit factor"));
        const char c = peek();
        if (c == '(') {
            ++pos_;
            // Parenthesized sub-expression; parse into a child and merge.
            const std::size_t depth_start = pos_;
            int depth = 1;
            while (pos_ < text_.size() && depth > 0) {
                if (text_[pos_] == '(') ++depth;
                if (text_[pos_] == ')') --depth;
                ++pos_;
            }
            if (depth != 0) throw MalformedExpression("unbalanced parentheses");
            UnitParser inner(text_.substr(depth_start, pos_ - 1 - depth_start));
            inner.parse();
            Rational exp = parse_exponent_opt();
            if (divide) exp = -exp;
            for (const auto& [sym, e] : inner.symbol_exp_)
                symbol_exp_[sym] = symbol_exp_[sym] + e * exp;
            apply_literal_power(inner.literal_, exp);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class lit = parse_integer();
            if (lit == 0) throw MalformedExpression("zero literal in unit expression");
            Rational exp = parse_exponent_opt();
            if (divide) exp = -exp;
            apply_literal_power(mpq_class(lit), exp);
            return;
        }
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
            throw MalformedExpression(err_here("unexpected character"));
        std::string name;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                             peek() == '_')) {
            // Digits may not start a symbol but are not part of one either;
            // "m2" is a malformed symbol, not m^2.
            if (std::isdigit(static_cast<unsigned char>(peek()))) break;
            name += text_[pos_++];
        }
        Rational exp = parse_exponent_opt();
        if (divide) exp = -exp;
        symbol_exp_[name] = symbol_exp_[name] + exp;
    }

    // exponent := ['-']int[/int] | '(' ['-']int['/'int] ')'
    Rational parse_exponent_opt() {
        skip_ws();
        if (at_end() || peek() != '^') return Rational(1);
        ++pos_;
        skip_ws();
        bool parens = false;
        if (!at_end() && peek() == '(') {
            parens = true;
            ++pos_;
            skip_ws();
        }
        bool neg = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            neg = peek() == '-';
            ++pos_;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw MalformedExpression(err_here("expected exponent"));
        mpz_class num = parse_integer();
        mpz_class den = 1;
        if (!at_end() && peek() == '/' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            den = parse_integer();
            if (den == 0) throw MalformedExpression("zero exponent denominator");
        }
        if (parens) {
            skip_ws();
            if (at_end() || peek() != ')')
                throw MalformedExpression(err_here("expected ')'"));
            ++pos_;
        }
        if (!num.fits_slong_p() || !den.fits_slong_p())
            throw MalformedExpression("exponent out of range");
        Rational r(num.get_si(), den.get_si());
        return neg ? -r : r;
    }

    mpz_class parse_integer() {
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            digits += text_[pos_++];
        return mpz_class(digits);
    }

    void apply_literal_power(const mpq_class& base, const Rational& exp) {
        if (!exp.is_integer())
            throw MalformedExpression("numeric literal with fractional exponent");
        ExactScale s(base);
        literal_ = literal_ * s.pow(exp).rational();
    }

    void skip_ws() {
        while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    std::string err_here(const std::string& msg) const {
        return msg + " at offset " + std::to_string(pos_) + " in unit expression";
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::map<std::string, Rational> symbol_exp_;
    mpq_class literal_ = 1;
};

std::string exponent_suffix(const Rational& e) {
    if (e == Rational(1)) return "";
    return "^" + e.str();
}

}  // namespace

UnitExpr parse_unit(std::string_view text) {
    UnitParser parser(text);
    parser.parse();

    UnitExpr out;
    out.scale = ExactScale(parser.literal());

    // Resolve symbols, accumulate dims and scale, drop zero exponents.
    std::map<std::string, Rational> factors;
    for (const auto& [name, exp] : parser.symbol_exponents()) {
        if (exp.is_zero()) continue;
        const ResolvedSymbol rs = resolve_symbol(name);
        for (std::size_t d = 0; d < kDimCount; ++d)
            out.dims[d] = out.dims[d] + rs.entry->dims[d] * exp;
        ExactScale sym_scale = rs.entry->scale;
        if (rs.prefix_pow10 != 0) sym_scale = sym_scale * pow10_scale(rs.prefix_pow10);
        out.scale = out.scale * sym_scale.pow(exp);
        factors[name] = exp;
    }

    // Canonical label: literal first, then positive-exponent symbols joined
    // by '*', then one '/sym^|e|' per negative-exponent symbol. std::map
    // iteration already sorts symbols.
    std::string label;
    mpq_class lit = parser.literal();
    if (lit != 1) {
        lit.canonicalize();
        label = lit.get_str();
    }
    for (const auto& [sym, exp] : factors) {
        if (exp.num() <= 0) continue;
        if (!label.empty()) label += '*';
        label += sym + exponent_suffix(exp);
    }
    if (label.empty()) label = "1";
    for (const auto& [sym, exp] : factors) {
        if (exp.num() >= 0) continue;
        label += "/" + sym + exponent_suffix(-exp);
    }
    out.label = std::move(label);
    return out;
}

Quantity convert_quantity(const Quantity& q, const UnitExpr& target) {
    if (!q.unit.convertible_to(target))
        throw DimensionMismatch(q.unit.label, target.label);
    const double factor = ExactScale::ratio(q.unit.scale, target.scale);
    return Quantity(q.magnitude * factor, target);
}

}  // namespace verdad
