// Copyright 2026 The pauliepr Authors
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

#ifndef PAULIEPR_ERRORS_HPP
#define PAULIEPR_ERRORS_HPP

#include <stdexcept>

namespace pauliepr {

/// Two Pauli words of different length were combined.
class LengthMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Two Elements (or an Element and a state) of different arity were combined.
class ArityMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Matrices of different dimension were compared.
class DimensionMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Outcome probabilities were requested for something that is not a +-1 observable.
class NotAnInvolution : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

}  // namespace pauliepr

#endif
