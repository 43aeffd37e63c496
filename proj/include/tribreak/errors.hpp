#ifndef TRIBREAK_ERRORS_HPP
#define TRIBREAK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tribreak {

/**
 * Raised when an input file, dataset, or element reference is unusable:
 * missing files, malformed lines, manifest mismatches, unknown node/edge ids.
 * The CLI maps this to exit code 4.
 */
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Raised when a requested target is provably unreachable, e.g. asking to
 * break more triangles than the graph contains. The CLI maps this to exit
 * code 3.
 */
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tribreak

#endif
