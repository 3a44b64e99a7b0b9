//
// Project MolDebate - Copyright 2026 MolDebate Developers
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <stdexcept>
#include <string>

namespace moldebate {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// --- chem core ---
class SmilesSyntaxError : public Error {
public:
  using Error::Error;
};
class ValenceError : public Error {
public:
  using Error::Error;
};
class AromaticityError : public Error {
public:
  using Error::Error;
};
class SmartsSyntaxError : public Error {
public:
  using Error::Error;
};

// --- agents ---
class MissingAnswerError : public Error {
public:
  using Error::Error;
};
class SelectionParseError : public Error {
public:
  using Error::Error;
};
class ScriptExhaustedError : public Error {
public:
  using Error::Error;
};

// --- gateway ---
class TransportError : public Error {
public:
  using Error::Error;
};
class AuthError : public Error {
public:
  using Error::Error;
};
class BadResponseError : public Error {
public:
  using Error::Error;
};

// --- orchestrator ---
class EmptyPoolError : public Error {
public:
  using Error::Error;
};

// --- eval harness / config ---
class FormatError : public Error {
public:
  using Error::Error;
};
class UnknownCheckerError : public Error {
public:
  using Error::Error;
};
class LengthMismatchError : public Error {
public:
  using Error::Error;
};
class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace moldebate
