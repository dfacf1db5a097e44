#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cyp {

/// A region of a source file. Lines and columns are 1-based; the end
/// column is inclusive. A default-constructed span is "unknown".
struct SourceSpan {
    std::shared_ptr<const std::string> file;
    int line_start = 0;
    int col_start = 0;
    int line_end = 0;
    int col_end = 0;

    bool valid() const { return line_start > 0 && col_start > 0; }
    std::string file_name() const { return file ? *file : std::string{}; }

    /// Smallest span covering both. Either side may be invalid.
    static SourceSpan merge(const SourceSpan& a, const SourceSpan& b) {
        if (!a.valid()) return b;
        if (!b.valid()) return a;
        SourceSpan r = a;
        if (b.line_start < r.line_start || (b.line_start == r.line_start && b.col_start < r.col_start)) {
            r.line_start = b.line_start;
            r.col_start = b.col_start;
        }
        if (b.line_end > r.line_end || (b.line_end == r.line_end && b.col_end > r.col_end)) {
            r.line_end = b.line_end;
            r.col_end = b.col_end;
        }
        return r;
    }

    std::string location() const {
        return file_name() + ":" + std::to_string(line_start) + ":" + std::to_string(col_start);
    }
};

// Stable external contract: never renumber or rename.
enum class Code {
    ParseError,
    TypeMismatch,
    IllTypedInstantiation,
    CoverageGap,
    Overlap,
    WrongCaseSet,
    ToShowMismatch,
    IHMismatch,
    StepRejected,
    ChainEndpointMismatch,
    ChainsDoNotMeet,
    IfThenElseRecursion,
    UnknownLemma,
    ForwardLemmaReference,
    UnprovenGoal,
    VariableClash,
    MissingBoolDecl,
    NoBaseConstructor,
    InternalError,
};

inline std::string_view to_string(Code c) {
    switch (c) {
        case Code::ParseError: return "ParseError";
        case Code::TypeMismatch: return "TypeMismatch";
        case Code::IllTypedInstantiation: return "IllTypedInstantiation";
        case Code::CoverageGap: return "CoverageGap";
        case Code::Overlap: return "Overlap";
        case Code::WrongCaseSet: return "WrongCaseSet";
        case Code::ToShowMismatch: return "ToShowMismatch";
        case Code::IHMismatch: return "IHMismatch";
        case Code::StepRejected: return "StepRejected";
        case Code::ChainEndpointMismatch: return "ChainEndpointMismatch";
        case Code::ChainsDoNotMeet: return "ChainsDoNotMeet";
        case Code::IfThenElseRecursion: return "IfThenElseRecursion";
        case Code::UnknownLemma: return "UnknownLemma";
        case Code::ForwardLemmaReference: return "ForwardLemmaReference";
        case Code::UnprovenGoal: return "UnprovenGoal";
        case Code::VariableClash: return "VariableClash";
        case Code::MissingBoolDecl: return "MissingBoolDecl";
        case Code::NoBaseConstructor: return "NoBaseConstructor";
        case Code::InternalError: return "InternalError";
    }
    return "InternalError";
}

enum class Severity { Error, Warning, Note };

inline std::string_view to_string(Severity s) {
    switch (s) {
        case Severity::Error: return "error";
        case Severity::Warning: return "warning";
        case Severity::Note: return "note";
    }
    return "error";
}

/// One reported problem. `kind` refines `code` (e.g. a ParseError of kind
/// "NonlinearPattern"); it is empty when the code says everything.
struct Diagnostic {
    Severity severity = Severity::Error;
    Code code = Code::InternalError;
    std::string kind;
    SourceSpan span;
    std::string message;
    std::vector<SourceSpan> related;
    std::optional<std::string> expected;
    std::optional<std::string> stated;

    std::string code_name() const { return std::string(to_string(code)); }
};

inline Diagnostic make_diag(Code code, std::string kind, SourceSpan span, std::string message) {
    Diagnostic d;
    d.code = code;
    d.kind = std::move(kind);
    d.span = std::move(span);
    d.message = std::move(message);
    return d;
}

/// Thrown by parsing, typing and obligation generation. The checker turns
/// these into report entries; nothing escapes the document check.
class Error : public std::runtime_error {
public:
    explicit Error(Diagnostic d) : std::runtime_error(d.message), diag_(std::move(d)) {}
    Error(Code code, std::string kind, SourceSpan span, std::string message)
        : Error(make_diag(code, std::move(kind), std::move(span), std::move(message))) {}

    const Diagnostic& diagnostic() const { return diag_; }
    Diagnostic& diagnostic() { return diag_; }
    Code code() const { return diag_.code; }
    const std::string& kind() const { return diag_.kind; }

private:
    Diagnostic diag_;
};

}  // namespace cyp
