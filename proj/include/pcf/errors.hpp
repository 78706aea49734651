/*
   Copyright 2026 the pcfgeom authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PCF_ERRORS_HPP
#define PCF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pcf {

// Exit-code mapping used by the CLI: usage 2, resource 3, integrity 4, io 5.

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Budget or precision-ceiling exhaustion.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated invariant detected in data (e.g. a tampered catalog file).
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller broke a precondition.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

// Exact arithmetic failed where exactness was required (non-exact division).
struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degenerate linear system where a unique solution was required.
struct DegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pcf

#endif
