// Copyright 2026 The objectaug Authors.
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

#ifndef OBJECTAUG_ERRORS_HPP_
#define OBJECTAUG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace objectaug {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DecodeError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed text input (scores file, config file).
class ParseError : public Error {
 public:
  using Error::Error;
};

class ScoreOutOfRange : public Error {
 public:
  using Error::Error;
};

// A value parsed fine but violates a documented invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class NonPositiveScore : public Error {
 public:
  using Error::Error;
};

class ZeroCount : public Error {
 public:
  using Error::Error;
};

// Inpainting service timed out, refused the connection or is not ready.
class ExternalUnavailable : public Error {
 public:
  using Error::Error;
};

// Inpainting service answered with something that breaks the wire contract.
class ExternalProtocol : public Error {
 public:
  using Error::Error;
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class PairingError : public Error {
 public:
  using Error::Error;
};

}  // namespace objectaug

#endif  // OBJECTAUG_ERRORS_HPP_
