// Copyright 2026 The listgrover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LISTGROVER_ERRORS_H
#define LISTGROVER_ERRORS_H

#include <stdexcept>
#include <string>

namespace listgrover {

/// Malformed or inconsistent user input (schema errors, bad lists, self-loops).
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size cap was exceeded (enumeration cap, simulator width cap,
/// scratch allocator capacity).
class ResourceLimitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Classical preprocessing proved the instance has no proper list coloring.
class UnsatisfiableError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace listgrover

#endif
