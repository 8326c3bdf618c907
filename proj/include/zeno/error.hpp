// Copyright 2026 The zeno-lab Authors
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

#include <complex>
#include <stdexcept>
#include <string>

namespace zeno {

// Failure modes are distinct types so the CLI can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class ResolventSingular : public NumericalFailure {
 public:
  ResolventSingular(std::complex<double> z, const std::string& what)
      : NumericalFailure(what), z_(z) {}
  std::complex<double> z() const { return z_; }

 private:
  std::complex<double> z_;
};

class ContourThroughSpectrum : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class QuadratureFailure : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class NotPowerConvergent : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class TooFewPoints : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class EstimationFailure : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace zeno
