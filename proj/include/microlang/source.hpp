#pragma once

#include <stdexcept>
#include <string>

namespace microlang {

/// Half-open region of a source file, 1-based lines and columns.
struct SourceSpan {
    std::string file;
    int start_line = 1;
    int start_col = 1;
    int end_line = 1;
    int end_col = 1;

    std::string str() const {
        return file + ":" + std::to_string(start_line) + ":" + std::to_string(start_col);
    }

    static SourceSpan join(const SourceSpan& a, const SourceSpan& b) {
        SourceSpan s = a;
        s.end_line = b.end_line;
        s.end_col = b.end_col;
        return s;
    }

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class LexError : public std::runtime_error {
public:
    LexError(SourceSpan sp, const std::string& msg)
        : std::runtime_error(sp.str() + ": error: " + msg), span(std::move(sp)), message(msg) {}
    SourceSpan span;
    std::string message;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourceSpan sp, const std::string& expected_, const std::string& found_)
        : std::runtime_error(sp.str() + ": error: expected " + expected_ + ", found " + found_),
          span(std::move(sp)),
          expected(expected_),
          found(found_) {}
    SourceSpan span;
    std::string expected;
    std::string found;
};

}  // namespace microlang
