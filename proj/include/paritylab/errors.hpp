// Copyright 2026 The ParityLab Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace paritylab {

/// Invalid argument or inconsistent domain data (degree mismatch, bad
/// partition, seed annihilated by a projector, ...).
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string &what) : std::runtime_error(what) {}
};

/// A configured resource bound (enumeration size, dense-matrix dimension)
/// would be exceeded.
class BoundError : public std::runtime_error {
  public:
    explicit BoundError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace paritylab
