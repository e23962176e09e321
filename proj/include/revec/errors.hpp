// Copyright 2026 the revec authors
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

namespace revec {

/// Base class for all revec errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroInverse : Error {
  explicit ZeroInverse(const std::string& what) : Error(what) {}
};

struct NotOnCurve : Error {
  explicit NotOnCurve(const std::string& what) : Error(what) {}
};

struct InvalidCurve : Error {
  explicit InvalidCurve(const std::string& what) : Error(what) {}
};

struct WidthMismatch : Error {
  explicit WidthMismatch(const std::string& what) : Error(what) {}
};

struct RegisterMismatch : Error {
  explicit RegisterMismatch(const std::string& what) : Error(what) {}
};

struct AliasedRegisters : Error {
  explicit AliasedRegisters(const std::string& what) : Error(what) {}
};

struct AddIdentityUnsupported : Error {
  explicit AddIdentityUnsupported(const std::string& what) : Error(what) {}
};

struct ScheduleHitsIdentity : Error {
  explicit ScheduleHitsIdentity(const std::string& what) : Error(what) {}
};

struct BoundViolated : Error {
  explicit BoundViolated(const std::string& what) : Error(what) {}
};

struct FitDegenerate : Error {
  explicit FitDegenerate(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace revec
