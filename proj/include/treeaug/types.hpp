#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace treeaug {

// Exact weight arithmetic; objective comparisons must never go through
// floating point.
using Weight = boost::rational<long long>;

enum class ErrorKind {
    invalid_input,  // malformed or invariant-violating input
    precondition,   // wrong shape/size for the requested algorithm
    internal,       // a solver produced something that failed certification
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

// "n" when integral, otherwise "p/q".
std::string format_weight(const Weight& w);

// Accepts "p/q", plain integers, and decimal strings such as "0.25".
Weight parse_weight(const std::string& text);

}  // namespace treeaug
