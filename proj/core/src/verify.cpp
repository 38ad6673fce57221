#include "trueelem/verify.hpp"

#include "trueelem/io.hpp"

namespace trueelem {

VerificationResult verify_certificate(const Certificate& certificate) {
  VerificationResult result;
  auto violate = [&](std::string what) {
    result.ok = false;
    result.violations.push_back(std::move(what));
  };

  const SqMatrix& target = certificate.claim.target;
  const Discipline& discipline = certificate.claim.discipline;
  const int n = target.n();

  if (!(discipline.ideal.spec() == target.spec())) {
    violate("ring: ideal and target live over different rings");
    return result;
  }
  if (!is_special_linear(target)) violate("target: determinant is " + det(target).to_string() + ", expected 1");

  try {
    validate_indices(certificate.witness, n);
  } catch (const Error& e) {
    violate(std::string("index: ") + e.what());
    return result;
  }

  const DisciplineReport report = check_discipline(certificate.witness, discipline);
  if (!report.ok) violate(std::string("discipline ") + to_string(discipline.kind) + ": " + report.violation);

  const SqMatrix value = evaluate(certificate.witness, n, target.spec());
  if (!(value == target))
    violate("evaluation: witness evaluates to " + value.to_string() + " but target is " + target.to_string());
  return result;
}

VerificationResult verify_certificate_text(std::string_view text) {
  return verify_certificate(certificate_from_json(parse_json(text)));
}

}  // namespace trueelem
