#pragma once

// Plain-text certificates: a standard representation u*f = sum xi_i*g_i + r,
// or a lift g = sum lambda_j*f_j of a basis element over the input.
//
//   begin normal-form          begin lift
//   ring: integer              ring: ...
//   vars: x,y                  vars: ...
//   order: M(...)              order: ...
//   f: ...                     f: ...        (one line per input)
//   g: ...   (repeated)        g: ...
//   u: ...                     lambda: ...   (one per input)
//   xi: ...  (one per g)       end
//   r: ...
//   end
//
// Lines starting with '#' and blank lines outside blocks are ignored.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "sbasis/normalform.hpp"
#include "sbasis/poly.hpp"

namespace sbasis {

struct NormalFormCertificate {
  Polynomial f;
  std::vector<Polynomial> G;
  StandardRepresentation rep;
};

struct LiftCertificate {
  std::vector<Polynomial> inputs;
  Polynomial g;
  std::vector<Polynomial> lambda;
};

using Certificate = std::variant<NormalFormCertificate, LiftCertificate>;

void writeCertificate(std::ostream& out, const NormalFormCertificate& cert);
void writeCertificate(std::ostream& out, const LiftCertificate& cert);

/// Throws Error(Errc::Parse) naming the offending line on malformed blocks.
std::vector<Certificate> readCertificates(std::istream& in);

struct CertificateCheck {
  bool ok;
  std::string message;
};

/// Exact re-check: verifyStandardRepresentation for normal forms, the
/// identity g == sum lambda_j * f_j for lifts.
CertificateCheck checkCertificate(const Certificate& cert);

}  // namespace sbasis
