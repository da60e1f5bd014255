// Copyright 2026 The cvgup Authors
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

#ifndef CVGUP_ERRORS_H
#define CVGUP_ERRORS_H

#include <stdexcept>

namespace cvgup {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed or incompatible grid axes.
class AxisError : public Error {
   public:
    using Error::Error;
};

/// A density has zero, negative or non-finite total mass.
class MassError : public Error {
   public:
    using Error::Error;
};

/// A probability vector or density violates its preconditions.
class ProbError : public Error {
   public:
    using Error::Error;
};

/// Invalid physical parameter (width, squeezing, correction).
class ParamError : public Error {
   public:
    using Error::Error;
};

/// The momentum-space image of a field does not fit on the conjugate grid.
class AliasError : public Error {
   public:
    using Error::Error;
};

/// A state descriptor document does not match the schema.
class SchemaError : public Error {
   public:
    using Error::Error;
};

/// Argument outside the domain of the momentum deformation map.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// Momentum support leaks beyond the deformation cutoff by more than the tolerance.
class GupDomainError : public Error {
   public:
    using Error::Error;
};

/// Ensemble weights are negative or do not sum to one.
class WeightError : public Error {
   public:
    using Error::Error;
};

/// Criterion kind cannot be evaluated on the given kind of state.
class KindError : public Error {
   public:
    using Error::Error;
};

}  // namespace cvgup

#endif  // CVGUP_ERRORS_H
