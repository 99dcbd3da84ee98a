/*
   Copyright 2026 The talex authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace talex {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Syntax errors from the presentation / word grammars, with 1-based position.
class ParseError : public Error {
   public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line(line),
          column(column) {}
    explicit ParseError(const std::string& msg) : Error(msg), line(0), column(0) {}

    int line;
    int column;
};

// Structural rejections: bad presentations, relator violations, dimension
// mismatches, malformed input documents.
class ValidationError : public Error {
   public:
    using Error::Error;
};

// An operation was called outside its stated domain.
class PreconditionError : public Error {
   public:
    using Error::Error;
};

class SingularMatrixError : public Error {
   public:
    using Error::Error;
};

}  // namespace talex
