/**
 * Error type shared by every module of the library.
 *
 * Each failure carries an `Errc` so callers (the CLI in particular) can map
 * failures to exit codes without parsing messages.
 */
#ifndef SCDIAM_ERROR_HPP
#define SCDIAM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace scdiam {

enum class Errc {
    InvalidComplex,
    ParseError,
    InvalidSpec,
    UnknownFacet,
    NotMiddleFacet,
    DisconnectedGraph,
    NoLegalColor,
    IncompleteColoring,
    PreconditionViolated,
    ResampleCapExceeded,
    RetriesExhausted,
    ImproperColoring,
    NonInjectiveFacets,
    MissingBijection,
    DimensionTooSmall,
    NotRegular,
    NotPseudomanifold,
};

constexpr std::string_view to_string(Errc code)
{
    switch (code)
    {
        case Errc::InvalidComplex:       return "InvalidComplex";
        case Errc::ParseError:           return "ParseError";
        case Errc::InvalidSpec:          return "InvalidSpec";
        case Errc::UnknownFacet:         return "UnknownFacet";
        case Errc::NotMiddleFacet:       return "NotMiddleFacet";
        case Errc::DisconnectedGraph:    return "DisconnectedGraph";
        case Errc::NoLegalColor:         return "NoLegalColor";
        case Errc::IncompleteColoring:   return "IncompleteColoring";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::ResampleCapExceeded:  return "ResampleCapExceeded";
        case Errc::RetriesExhausted:     return "RetriesExhausted";
        case Errc::ImproperColoring:     return "ImproperColoring";
        case Errc::NonInjectiveFacets:   return "NonInjectiveFacets";
        case Errc::MissingBijection:     return "MissingBijection";
        case Errc::DimensionTooSmall:    return "DimensionTooSmall";
        case Errc::NotRegular:           return "NotRegular";
        case Errc::NotPseudomanifold:    return "NotPseudomanifold";
    }
    return "Unknown";
}

class Error : public std::runtime_error
{
    public:
        Error(Errc code, const std::string& what)
            : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
        {
        }

        Errc code() const noexcept { return code_; }

    private:
        Errc code_;
};

}   // namespace scdiam

#endif
