#pragma once

#include <stdexcept>
#include <string>

namespace texdesc {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define TEXDESC_ERROR_TYPE(Name)                                   \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& msg) : Error(msg) {}      \
    }

// imgio
TEXDESC_ERROR_TYPE(FileNotFound);
TEXDESC_ERROR_TYPE(UnsupportedFormat);
TEXDESC_ERROR_TYPE(CorruptImage);
TEXDESC_ERROR_TYPE(OutOfBounds);
TEXDESC_ERROR_TYPE(ZeroDimension);

// descriptors
TEXDESC_ERROR_TYPE(BorderViolation);
TEXDESC_ERROR_TYPE(ImageTooSmall);
TEXDESC_ERROR_TYPE(BadLevels);
TEXDESC_ERROR_TYPE(BadK);
TEXDESC_ERROR_TYPE(DegenerateSplit);

// svm / pipeline
TEXDESC_ERROR_TYPE(DimensionMismatch);
TEXDESC_ERROR_TYPE(SingleClass);
TEXDESC_ERROR_TYPE(InsufficientData);
TEXDESC_ERROR_TYPE(TooFewSamples);
TEXDESC_ERROR_TYPE(IoError);
TEXDESC_ERROR_TYPE(ParseError);

// contract violations not covered by a more specific type
TEXDESC_ERROR_TYPE(InvalidArgument);

#undef TEXDESC_ERROR_TYPE

}  // namespace texdesc
