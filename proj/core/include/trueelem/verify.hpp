#pragma once

// Certificate checking that relies only on word evaluation and discipline
// rules, never on the emitters.

#include <string>
#include <string_view>
#include <vector>

#include "trueelem/factorization.hpp"

namespace trueelem {

struct VerificationResult {
  bool ok = true;
  std::vector<std::string> violations;  // "<category>: <detail>"
};

VerificationResult verify_certificate(const Certificate& certificate);

/// Throws Error(Parse) when the text is not a well-formed certificate.
VerificationResult verify_certificate_text(std::string_view text);

}  // namespace trueelem
