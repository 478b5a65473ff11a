#include "alphacalc/surface_io.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace alphacalc {

namespace {

struct Token {
    std::string text;
    int column = 0;  // 1-based
};

bool is_label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Splits a line into word, punctuation ('=', '+', '-', '*', ',') and number
// tokens; '#' ends the line.
std::vector<Token> tokenize(const std::string& line, int line_no) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        int col = static_cast<int>(i) + 1;
        if (c == '=' || c == '+' || c == '-' || c == '*' || c == ',') {
            out.push_back({std::string(1, c), col});
            ++i;
            continue;
        }
        if (is_label_char(c) || c == '/') {
            size_t start = i;
            while (i < line.size() && (is_label_char(line[i]) || line[i] == '/')) ++i;
            out.push_back({line.substr(start, i - start), col});
            continue;
        }
        throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
    }
    return out;
}

bool looks_numeric(const std::string& t) {
    return !t.empty() && (std::isdigit(static_cast<unsigned char>(t[0])) ||
                          (t.size() > 1 && t[0] == '-'));
}

class LineParser {
public:
    LineParser(std::vector<Token> tokens, int line_no)
        : tokens_(std::move(tokens)), line_(line_no) {}

    bool done() const { return pos_ >= tokens_.size(); }
    const Token& peek() const {
        if (done()) throw ParseError(line_, end_column(), "unexpected end of line");
        return tokens_[pos_];
    }
    Token next() {
        Token t = peek();
        ++pos_;
        return t;
    }
    void expect(const std::string& text) {
        Token t = next();
        if (t.text != text)
            throw ParseError(line_, t.column, "expected '" + text + "', got '" + t.text + "'");
    }
    bool accept(const std::string& text) {
        if (!done() && tokens_[pos_].text == text) { ++pos_; return true; }
        return false;
    }
    std::string label() {
        Token t = next();
        if (t.text.empty() || looks_numeric(t.text) ||
            !std::isalpha(static_cast<unsigned char>(t.text[0])))
            throw ParseError(line_, t.column, "expected a label, got '" + t.text + "'");
        for (char c : t.text)
            if (!is_label_char(c))
                throw ParseError(line_, t.column, "invalid label '" + t.text + "'");
        return t.text;
    }
    void finish() {
        if (!done())
            throw ParseError(line_, peek().column, "trailing input '" + peek().text + "'");
    }
    int end_column() const {
        if (tokens_.empty()) return 1;
        const Token& last = tokens_.back();
        return last.column + static_cast<int>(last.text.size());
    }
    int line() const { return line_; }
    int column() const { return done() ? end_column() : tokens_[pos_].column; }

    // "<coeff>? <label> (('+'|'-') <coeff>? <label>)*" with rational or
    // integer coefficients.
    std::vector<std::pair<std::string, Rat>> combination() {
        std::vector<std::pair<std::string, Rat>> terms;
        bool first = true;
        for (;;) {
            Rat sign(1);
            if (accept("-")) sign = -1;
            else if (!first) expect("+");
            first = false;
            Rat coeff(1);
            if (!done() && looks_numeric(peek().text)) {
                Token t = next();
                try {
                    coeff = parse_rat(t.text);
                } catch (const ValidationError& e) {
                    throw ParseError(line_, t.column, e.what());
                }
            }
            terms.emplace_back(label(), sign * coeff);
            if (done()) break;
        }
        return terms;
    }

private:
    std::vector<Token> tokens_;
    int line_;
    size_t pos_ = 0;
};

std::string format_terms(const std::vector<std::pair<std::string, Rat>>& terms) {
    std::string out;
    bool first = true;
    for (const auto& [label, coeff] : terms) {
        Rat a = coeff;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1) out += format_rat(a) + " ";
        out += label;
        first = false;
    }
    return out;
}

}  // namespace

SurfaceBundle parse_surface_spec(const std::string& text) {
    std::optional<SurfaceModel> model;
    std::vector<std::pair<int, NamedDivisor>> divisors;  // with declaration line
    std::vector<std::pair<int, std::vector<std::string>>> invariant_decl;
    std::vector<std::pair<int, std::vector<std::string>>> report_decl;

    auto require_model = [&](int line, int col) -> SurfaceModel& {
        if (!model) throw ParseError(line, col, "'base' directive must come first");
        return *model;
    };
    auto rethrow = [](int line, int col, const auto& fn) {
        try {
            fn();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(line, col, e.what());
        }
    };

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::vector<Token> tokens = tokenize(raw, line_no);
        if (tokens.empty()) continue;
        LineParser p(std::move(tokens), line_no);
        Token head = p.next();
        const std::string& kw = head.text;

        if (kw == "base") {
            if (model) throw ParseError(line_no, head.column, "duplicate 'base' directive");
            p.expect("hirzebruch");
            Token t = p.next();
            if (!looks_numeric(t.text) || t.text.find('/') != std::string::npos)
                throw ParseError(line_no, t.column, "expected an integer, got '" + t.text + "'");
            Int n = parse_int(t.text);
            if (n < 0 || n > 1000)
                throw ParseError(line_no, t.column, "hirzebruch index out of range");
            p.finish();
            model = hirzebruch(static_cast<int>(n));
        } else if (kw == "rename") {
            auto& m = require_model(line_no, head.column);
            int col = p.column();
            std::string from = p.label();
            std::string to = p.label();
            p.finish();
            rethrow(line_no, col, [&] { m = rename_curve(m, from, to); });
        } else if (kw == "curve") {
            auto& m = require_model(line_no, head.column);
            int col = p.column();
            std::string label = p.label();
            p.expect("=");
            auto terms = p.combination();
            p.finish();
            std::vector<std::pair<std::string, Int>> int_terms;
            for (const auto& [tl, coeff] : terms) {
                if (!is_integer(coeff))
                    throw ParseError(line_no, col,
                                     "curve combinations need integer coefficients, got " +
                                         format_rat(coeff));
                int_terms.emplace_back(tl, rat_num(coeff));
            }
            rethrow(line_no, col, [&] { m = add_curve(m, label, int_terms); });
        } else if (kw == "blowup") {
            auto& m = require_model(line_no, head.column);
            int col = p.column();
            BlowUpSpec spec;
            spec.new_label = p.label();
            if (!p.done()) {
                p.expect("through");
                for (;;) {
                    std::string cl = p.label();
                    int mult = 1;
                    if (p.accept("*")) {
                        Token t = p.next();
                        if (!looks_numeric(t.text))
                            throw ParseError(line_no, t.column, "expected a multiplicity");
                        Int v = parse_int(t.text);
                        if (v < 1 || v > 1000000)
                            throw ParseError(line_no, t.column, "multiplicity out of range");
                        mult = static_cast<int>(v);
                    }
                    spec.through.emplace_back(cl, mult);
                    if (!p.accept(",")) break;
                }
            }
            p.finish();
            rethrow(line_no, col, [&] { m = blow_up(m, spec); });
        } else if (kw == "divisor") {
            require_model(line_no, head.column);
            NamedDivisor d;
            d.label = p.label();
            p.expect("=");
            d.terms = p.combination();
            p.finish();
            for (const auto& existing : divisors)
                if (existing.second.label == d.label)
                    throw ParseError(line_no, head.column, "duplicate divisor: " + d.label);
            divisors.emplace_back(line_no, std::move(d));
        } else if (kw == "invariant_curves") {
            require_model(line_no, head.column);
            std::vector<std::string> labels;
            while (!p.done()) labels.push_back(p.label());
            invariant_decl.emplace_back(line_no, std::move(labels));
        } else if (kw == "report_basis") {
            require_model(line_no, head.column);
            std::vector<std::string> labels;
            while (!p.done()) labels.push_back(p.label());
            report_decl.emplace_back(line_no, std::move(labels));
        } else if (kw == "assert") {
            auto& m = require_model(line_no, head.column);
            // Free text: everything after the keyword, trimmed.
            size_t start = raw.find("assert") + 6;
            size_t stop = raw.find('#');
            std::string body = raw.substr(start, stop == std::string::npos
                                                     ? std::string::npos
                                                     : stop - start);
            size_t b = body.find_first_not_of(" \t");
            size_t e = body.find_last_not_of(" \t");
            if (b == std::string::npos)
                throw ParseError(line_no, head.column, "empty assertion");
            m = add_assertion(m, body.substr(b, e - b + 1));
        } else {
            throw ParseError(line_no, head.column, "unknown directive '" + kw + "'");
        }
    }
    if (!model) throw ParseError(1, 1, "missing 'base' directive");

    if (invariant_decl.size() > 1)
        throw ParseError(invariant_decl[1].first, 1, "duplicate invariant_curves directive");
    if (report_decl.size() > 1)
        throw ParseError(report_decl[1].first, 1, "duplicate report_basis directive");
    for (const auto& [line, labels] : invariant_decl)
        rethrow(line, 1, [&] { *model = set_invariant_curves(*model, labels); });
    for (const auto& [line, labels] : report_decl)
        rethrow(line, 1, [&] { *model = set_report_basis(*model, labels); });

    SurfaceBundle bundle{std::move(*model), {}};
    for (auto& [line, d] : divisors) {
        for (const auto& [tl, coeff] : d.terms)
            if (!bundle.model.has_curve(tl))
                throw ParseError(line, 1, "divisor " + d.label +
                                              " references unknown curve " + tl);
        bundle.divisors.push_back(std::move(d));
    }
    return bundle;
}

std::string print_surface(const SurfaceBundle& bundle) {
    std::string out;
    for (const auto& rec : bundle.model.history) {
        switch (rec.kind) {
            case SurfRecord::Kind::Base:
                out += "base hirzebruch " + std::to_string(rec.hirzebruch_n) + "\n";
                break;
            case SurfRecord::Kind::Rename:
                out += "rename " + rec.label + " " + rec.renamed_to + "\n";
                break;
            case SurfRecord::Kind::Curve: {
                std::vector<std::pair<std::string, Rat>> terms;
                for (const auto& [l, c] : rec.curve_terms) terms.emplace_back(l, Rat(c));
                out += "curve " + rec.label + " = " + format_terms(terms) + "\n";
                break;
            }
            case SurfRecord::Kind::Blowup: {
                out += "blowup " + rec.label;
                if (!rec.through.empty()) {
                    out += " through ";
                    bool first = true;
                    for (const auto& [l, m] : rec.through) {
                        if (!first) out += ", ";
                        out += l;
                        if (m != 1) out += "*" + std::to_string(m);
                        first = false;
                    }
                }
                out += "\n";
                break;
            }
        }
    }
    for (const auto& d : bundle.divisors)
        out += "divisor " + d.label + " = " + format_terms(d.terms) + "\n";
    if (!bundle.model.invariant_curves.empty()) {
        out += "invariant_curves";
        for (const auto& l : bundle.model.invariant_curves) out += " " + l;
        out += "\n";
    }
    if (!bundle.model.report_basis.empty()) {
        out += "report_basis";
        for (const auto& l : bundle.model.report_basis) out += " " + l;
        out += "\n";
    }
    for (const auto& a : bundle.model.assertions) out += "assert " + a + "\n";
    return out;
}

}  // namespace alphacalc
