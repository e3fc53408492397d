#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace radio {

// Domain error with a stable machine-readable name.  The CLI surfaces the
// name verbatim in its error JSON, so these strings are part of the
// interface and must not change casually.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define RADIO_ERROR_TYPE(NAME)                                                \
    class NAME : public Error {                                               \
    public:                                                                   \
        explicit NAME(const std::string& what) : Error(#NAME, what) {}        \
    }

// tree core
RADIO_ERROR_TYPE(NotATree);
RADIO_ERROR_TYPE(DuplicateEdge);
RADIO_ERROR_TYPE(VertexOutOfRange);
RADIO_ERROR_TYPE(TooSmall);

// families
RADIO_ERROR_TYPE(BadParams);

// composition
RADIO_ERROR_TYPE(TooFewComponents);
RADIO_ERROR_TYPE(TwoCenterComponent);
RADIO_ERROR_TYPE(TwoCenterBase);
RADIO_ERROR_TYPE(BadK);
RADIO_ERROR_TYPE(ArityMismatch);

// orders and labelings
RADIO_ERROR_TYPE(NotAPermutation);
RADIO_ERROR_TYPE(NegativeLabel);
RADIO_ERROR_TYPE(ComponentOrderInvalid);
RADIO_ERROR_TYPE(BaseOrderInvalid);
RADIO_ERROR_TYPE(LengthMismatch);

// input parsing (CLI / JSON layer)
RADIO_ERROR_TYPE(BadInput);

#undef RADIO_ERROR_TYPE

}  // namespace radio
