// Copyright (c) 2026 The pstomo authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace pstomo {

/// Error categories, aligned with the CLI exit codes.
enum class ErrorCategory { validation = 1, quality = 2, io = 3 };

class Error : public std::runtime_error {
  public:
    Error(ErrorCategory cat, const std::string& msg)
        : std::runtime_error(msg), category_(cat) {}

    ErrorCategory category() const { return category_; }

    static Error validation(const std::string& msg) {
        return Error(ErrorCategory::validation, msg);
    }
    static Error quality(const std::string& msg) {
        return Error(ErrorCategory::quality, msg);
    }
    static Error io(const std::string& msg) { return Error(ErrorCategory::io, msg); }

  private:
    ErrorCategory category_;
};

} // namespace pstomo
