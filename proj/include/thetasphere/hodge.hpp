#pragma once

#include <string>

#include "thetasphere/element.hpp"

namespace thetasphere {

class MatrixForm;

/// Hodge star via the ambient epsilon-tensor / normal-contraction formula.
/// `reversed` flips the frame orientation (negative-control runs).
FormElement hodge_star(const FormElement& form, bool reversed = false);

/// same map without the final ideal reduction; for integrands that are read
/// through the class-invariant top pairing
FormElement hodge_star_unreduced(const FormElement& form, bool reversed = false);

FormElement project_sd(const FormElement& form, bool reversed = false);
FormElement project_asd(const FormElement& form, bool reversed = false);

enum class CertStatus { PASS, FAIL, INCONCLUSIVE };

struct SelfDualityCertificate {
    std::string identity = "P_minus(F) == 0";
    CertStatus status = CertStatus::INCONCLUSIVE;
    int entries_checked = 0;
    int entries_failed = 0;
    size_t max_terms = 0;
    long long elapsed_ms = 0;
    std::string detail;
};

std::string to_string(CertStatus s);

SelfDualityCertificate self_duality_check(const MatrixForm& projection, bool reversed = false);

} // namespace thetasphere
