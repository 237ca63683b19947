// Copyright 2026 The braidembed Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidembed {

// Thrown when a coordinate or linear index falls outside its grid.
class invalid_coordinate : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

// Thrown on malformed textual input.  line() is 1-based, 0 when not applicable.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string &msg, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg), _line(line) {}
    std::size_t line() const noexcept { return _line; }

  private:
    std::size_t _line;
};

// Thrown when an operation is handed an argument that violates its contract.
class precondition_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace braidembed
