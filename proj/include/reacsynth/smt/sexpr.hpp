#pragma once

#include "reacsynth/errors.hpp"

#include <string>
#include <vector>

namespace reacsynth::smt {

struct SExpr {
    bool is_atom = true;
    std::string sym;          // set when is_atom
    std::vector<SExpr> items; // set when !is_atom

    static SExpr atom(std::string s) { return SExpr{true, std::move(s), {}}; }
    static SExpr list(std::vector<SExpr> xs) { return SExpr{false, "", std::move(xs)}; }

    std::string to_string() const {
        if (is_atom) return sym;
        std::string s = "(";
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i) s += " ";
            s += items[i].to_string();
        }
        return s + ")";
    }
};

class SExprParser {
public:
    explicit SExprParser(std::string_view text) : text_(text) {}

    // Returns false at end of input.
    bool next(SExpr& out) {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        out = parse();
        return true;
    }

    std::vector<SExpr> all() {
        std::vector<SExpr> out;
        SExpr e;
        while (next(e)) out.push_back(std::move(e));
        return out;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ';') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    SExpr parse() {
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            std::vector<SExpr> items;
            while (true) {
                skip_ws();
                if (pos_ >= text_.size()) throw Error("s-expr: unbalanced '('");
                if (text_[pos_] == ')') {
                    ++pos_;
                    return SExpr::list(std::move(items));
                }
                items.push_back(parse());
            }
        }
        if (c == ')') throw Error("s-expr: unexpected ')'");
        if (c == '|') {
            std::size_t end = text_.find('|', pos_ + 1);
            if (end == std::string_view::npos) throw Error("s-expr: unterminated |symbol|");
            SExpr a = SExpr::atom(std::string(text_.substr(pos_ + 1, end - pos_ - 1)));
            pos_ = end + 1;
            return a;
        }
        if (c == '"') {
            std::size_t p = pos_ + 1;
            std::string s = "\"";
            while (p < text_.size()) {
                if (text_[p] == '"') {
                    if (p + 1 < text_.size() && text_[p + 1] == '"') { // escaped quote
                        s += '"';
                        p += 2;
                        continue;
                    }
                    s += '"';
                    pos_ = p + 1;
                    return SExpr::atom(std::move(s));
                }
                s += text_[p++];
            }
            throw Error("s-expr: unterminated string");
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ';')
            ++pos_;
        return SExpr::atom(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace reacsynth::smt
