// Copyright 2026 The pftc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace pftc {

/// Requested system size exceeds what the dense sector machinery supports.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Vector/field lengths that do not match the chain size.
class DimensionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parameter values outside their domain (negative period, empty window, ...).
class DomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A computed quantity violated a bound it must satisfy analytically.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class CheckpointError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace pftc
