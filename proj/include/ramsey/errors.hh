#ifndef RAMSEY_ERRORS_HH
#define RAMSEY_ERRORS_HH

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsey
{
    /// Graph construction or query outside the supported range (capacity,
    /// vertex index, empty graph where one vertex is required).
    class GraphError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    class Graph6ParseError : public std::runtime_error
    {
        private:
            std::size_t _offset;

        public:
            Graph6ParseError(const std::string & message, std::size_t offset);

            auto offset() const noexcept -> std::size_t { return _offset; }
    };

    /// A family or recipe parameter violates its documented constraint. The
    /// message names the violated constraint.
    class ParameterError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// An operation was called outside its stated precondition (residue class,
    /// supported order, parity).
    class PreconditionError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };
}

#endif
