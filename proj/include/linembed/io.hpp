#pragma once

// Text formats. Every reader skips blank lines and `#` comments and reports
// ParseError with a 1-based line number.
//
//   complex      facet v1 v2 ... vk                 (canonical facet order)
//   sequence     collapse <step>: f1 ... | c1 ...   then `target:` and a complex
//   certificate  critical_triangle: a b c           then a sequence
//   embedding    dim m, then vertex <label>: q1 ... qm
//   points       point q1 ... qm

#include "linembed/collapse.hpp"
#include "linembed/geometry.hpp"
#include "linembed/tverberg.hpp"
#include "linembed/verify.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace linembed {

void write_complex(std::ostream& os, const SimplicialComplex& c);
SimplicialComplex read_complex(std::istream& is);

void write_sequence(std::ostream& os, const CollapseSequence& seq);
CollapseSequence read_sequence(std::istream& is);

void write_certificate(std::ostream& os, const MorseCertificate& cert);
MorseCertificate read_certificate(std::istream& is);

void write_embedding(std::ostream& os, const EmbeddingMap& e);
EmbeddingMap read_embedding(std::istream& is);

void write_points(std::ostream& os, std::span<const Point> points);
std::vector<Point> read_points(std::istream& is);

void write_tverberg(std::ostream& os, const TverbergCertificate& cert);
void write_report(std::ostream& os, const VerificationReport& report);

} // namespace linembed
