#pragma once

#include <string>
#include <vector>

namespace gvc {

/// 1-based position in the input text. Column counts bytes.
struct SourceLoc {
    int line = 0;
    int col = 0;

    bool valid() const { return line > 0; }
    bool operator==(const SourceLoc&) const = default;
};

inline bool operator<(const SourceLoc& a, const SourceLoc& b) {
    return a.line != b.line ? a.line < b.line : a.col < b.col;
}
inline bool operator<=(const SourceLoc& a, const SourceLoc& b) { return a == b || a < b; }

/// Closed span over source positions.
struct SourceSpan {
    SourceLoc begin;
    SourceLoc end;

    bool contains(const SourceLoc& p) const {
        return begin.valid() && begin <= p && p <= end;
    }
    void extend(const SourceLoc& p) {
        if (!p.valid()) return;
        if (!begin.valid() || p < begin) begin = p;
        if (!end.valid() || end < p) end = p;
    }
    void extend(const SourceSpan& s) {
        extend(s.begin);
        extend(s.end);
    }
};

struct Diagnostic {
    SourceLoc loc;
    std::string message;
};

std::string formatDiagnostic(const std::string& file, const Diagnostic& d);

} // namespace gvc
