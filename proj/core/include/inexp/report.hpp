#ifndef INEXP_REPORT_HPP
#define INEXP_REPORT_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "inexp/determinacy.hpp"
#include "inexp/hilbert.hpp"
#include "inexp/matrix.hpp"
#include "inexp/standard_basis.hpp"

namespace inexp {

using Json = nlohmann::json;

/// JSON forms used by every report: exponents as arrays of naturals,
/// rationals and counts as exact decimal strings, polynomials as term lists
/// ascending in the total order.
Json to_json(const Exponent& e);
Json to_json(const Rational& q);
Json to_json(const Count& n);
Json to_json(const Polynomial& p);
Json to_json(const Diagram& n);
Json to_json(const UnivariatePolynomial& p);
Json to_json(const RationalMatrix& m);
Json to_json(const Level& l);
Json to_json(const RegularSequenceCertificate& c);
Json to_json(const Mu0Breakdown& b);
Json to_json(const HilbertSamuelTable& t);
Json to_json(const JetSweepReport& r);
Json to_json(const PerturbationReport& r);
Json to_json(const MultiplicityReport& r);

/// The stable report envelope written by every command. The `result` object
/// is a pure function of (input, seed); timings sit outside it.
Json make_report(const std::string& command, const std::string& input_sha256,
                 std::uint64_t seed, Json result, double elapsed_ms);

} // namespace inexp

#endif
