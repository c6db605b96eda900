#ifndef FUZZYCAT_ERRORS_HPP
#define FUZZYCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fuzzycat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// degree layer
struct ParseError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct EmptyAggregateError : Error { using Error::Error; };

// graph layer
struct PathError : Error { using Error::Error; };
struct NodeError : Error { using Error::Error; };
struct GraphError : Error { using Error::Error; };

// category layer
struct ComposabilityError : Error { using Error::Error; };
struct TotalityError : Error { using Error::Error; };
struct ObjectError : Error { using Error::Error; };
struct ArrowError : Error { using Error::Error; };

// constructions
struct PreorderError : Error { using Error::Error; };
struct IdentityError : Error { using Error::Error; };
struct TableError : Error { using Error::Error; };
struct ArrowDegreeError : Error { using Error::Error; };
struct ClosureError : Error { using Error::Error; };
struct AnnotationError : Error { using Error::Error; };

// file parsing; carries a 1-based line number
struct FileError : Error {
    FileError(const std::string& what, int line)
        : Error(what + " (line " + std::to_string(line) + ")"), line(line) {}
    int line;
};
struct SyntaxError : FileError { using FileError::FileError; };
struct ReferenceError : FileError { using FileError::FileError; };

} // namespace fuzzycat

#endif
